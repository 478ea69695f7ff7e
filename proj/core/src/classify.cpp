#include "cclone/classify.hpp"

#include <algorithm>
#include <sstream>

#include "cclone/io.hpp"

#include <nlohmann/json.hpp>

namespace cclone {

std::string_view kind_token(MaxCloneKind kind) {
  switch (kind) {
    case MaxCloneKind::UnaryNonTrivial: return "unary-central";
    case MaxCloneKind::TwoBlockEquivalence: return "two-block-equivalence";
    case MaxCloneKind::BinaryCentral: return "binary-central";
    case MaxCloneKind::BooleanMonotone: return "boolean-monotone";
  }
  return "?";
}

MaximalCloneDescriptor classify(const MaxCCloneParams& params) {
  if (params.n.value() == 2) {
    Relation leq(params.n, 2);
    leq.insert(Tuple{0, 0});
    leq.insert(Tuple{0, 1});
    leq.insert(Tuple{1, 1});
    return MaximalCloneDescriptor{MaxCloneKind::BooleanMonotone, std::move(leq), params};
  }
  const int gap = params.a - params.b;
  if (gap > 1)
    return MaximalCloneDescriptor{MaxCloneKind::UnaryNonTrivial,
                                  unary_interval_union(params.a, params.b, params.n).relation,
                                  params};
  if (gap == 1)
    return MaximalCloneDescriptor{MaxCloneKind::TwoBlockEquivalence,
                                  two_block_equivalence(params.b, params.n), params};
  return MaximalCloneDescriptor{MaxCloneKind::BinaryCentral,
                                sigma(params.a, params.b, params.n), params};
}

InclusionCertificate inclusion_certificate(const MaxCCloneParams& params) {
  const MaximalCloneDescriptor designated = classify(params);
  const Relation r = build_binary_clausal(params);
  Relation constructed = [&]() {
    if (params.n.value() == 2) return relation_inverse(r);
    const Relation meet = relation_intersect(r, relation_inverse(r));
    if (params.a - params.b > 1) return diagonal_restriction(meet);
    return meet;
  }();
  const bool equal = constructed == designated.relation;
  return InclusionCertificate{std::move(constructed), designated.relation, equal};
}

namespace {

RefutationOutcome refute_unary(const MaxCCloneParams& p, const Relation& target,
                               const Relation& clausal) {
  const int nv = p.n.value();
  if (is_trivial(target))
    throw RefutationError("target is trivial and preserved by every operation");
  // a constant on a point of {0..b} + {a..n-1} missing from the target
  for (int x = 0; x < nv; ++x) {
    if (!(x <= p.b || x >= p.a)) continue;
    if (target.contains_code(static_cast<std::size_t>(x))) continue;
    Operation cx = Operation::constant(p.n, 1, x);
    const std::size_t member = target.member_codes().front();
    return RefutationOutcome{
        make_certificate(std::move(cx), clausal, target,
                         {decode_tuple(member, 1, p.n)}),
        "constant"};
  }
  // target contains the whole union properly: some middle element exists
  for (int x = p.b + 1; x < p.a; ++x)
    if (target.contains_code(static_cast<std::size_t>(x)))
      return RefutationOutcome{middle_element_refuter(target, p.a, p.b), "middle-element"};
  throw RefutationError("unary target admits no witness (it designates the included clone)");
}

RefutationOutcome refute_equivalence(const MaxCCloneParams& p, const Relation& target,
                                     const Relation& clausal,
                                     const FamilySearchBudget& search) {
  if (p.a - p.b >= 2)
    return RefutationOutcome{reflexive_refuter(target, p.a, p.b), "reflexive-refuter"};
  const auto [f, g] = equivalence_refuters(p.a, p.b, p.n);
  if (const auto violation = find_violation(f, target))
    return RefutationOutcome{make_certificate(f, clausal, target, violation->columns),
                             "equivalence-pair-f"};
  if (const auto violation = find_violation(g, target))
    return RefutationOutcome{make_certificate(g, clausal, target, violation->columns),
                             "equivalence-pair-g"};
  const auto fallback = family_search(p, target, search);
  if (fallback.certificate)
    return RefutationOutcome{*fallback.certificate, "family-search"};
  throw RefutationError(fallback.budget_exhausted
                            ? "equivalence target: no witness within the search budget"
                            : "equivalence target admits no witness in the searched families");
}

RefutationOutcome refute_binary_central(const MaxCCloneParams& p, const Relation& target,
                                        const Relation& clausal,
                                        const ValidationReport& report,
                                        const FamilySearchBudget& search) {
  if (p.a - p.b >= 2)
    return RefutationOutcome{reflexive_refuter(target, p.a, p.b), "reflexive-refuter"};
  for (int c : report.centers)
    if (c < p.a || c > p.b)
      return RefutationOutcome{central_refuter(target, c, p.a, p.b), "central-refuter"};

  // all centers lie in [a,b], so a <= b and the designated relation is
  // sigma_{a,b}; the target differs from it in one of two ways
  const Relation sig = sigma(p.a, p.b, p.n);
  const int d = report.centers.front();  // d >= a > 0
  for (std::size_t code = 0; code < sig.cell_count(); ++code) {
    if (!sig.contains_code(code) || target.contains_code(code)) continue;
    const Tuple xy = decode_tuple(code, 2, p.n);
    std::vector<int> table(static_cast<std::size_t>(p.n.value()), xy[1]);
    table[0] = xy[0];
    Operation f = Operation::unary(p.n, std::move(table));
    return RefutationOutcome{
        make_certificate(std::move(f), clausal, target, {Tuple{0, d}}),
        "two-valued-unary"};
  }
  for (std::size_t code = 0; code < target.cell_count(); ++code) {
    if (!target.contains_code(code) || sig.contains_code(code)) continue;
    Tuple t = decode_tuple(code, 2, p.n);
    if (!(t[0] < p.a && t[1] > p.b)) std::swap(t[0], t[1]);  // symmetric partner
    for (std::size_t other = 0; other < target.cell_count(); ++other) {
      if (target.contains_code(other)) continue;
      const Tuple o = decode_tuple(other, 2, p.n);
      if (!(o[0] < p.a && o[1] > p.b)) continue;
      Operation f = complement_mapper(p.a, p.b, t[0], o[0], t[1], o[1], p.n);
      return RefutationOutcome{
          make_certificate(std::move(f), clausal, target, {t}), "complement-mapper"};
    }
  }
  const auto fallback = family_search(p, target, search);
  if (fallback.certificate)
    return RefutationOutcome{*fallback.certificate, "family-search"};
  throw RefutationError("binary central target admits no witness (it designates the included clone)");
}

}  // namespace

RefutationOutcome refute_inclusion_detailed(const MaxCCloneParams& params,
                                            const Relation& target,
                                            const FamilySearchBudget& search) {
  if (!(target.domain() == params.n))
    throw std::invalid_argument("refute_inclusion: domain size mismatch");
  const MaximalCloneDescriptor designated = classify(params);
  if (target == designated.relation)
    throw std::invalid_argument(
        "refute_inclusion: the target designates the included maximal clone");
  const Relation clausal = build_binary_clausal(params);
  if (params.n.value() == 2 && target.arity() <= 2 &&
      bounded_pol_equal(clausal, target, 2))
    throw std::invalid_argument(
        "refute_inclusion: the target describes the included maximal clone "
        "(equal polymorphisms at arity <= 2)");

  if (target.arity() == 1) return refute_unary(params, target, clausal);

  if (target.arity() == 2) {
    const ValidationReport report = validate(target);
    switch (report.classification) {
      case Classification::Diagonal:
        throw RefutationError("target is trivial and preserved by every operation");
      case Classification::NontrivialEquivalence:
        return refute_equivalence(params, target, clausal, search);
      case Classification::BinaryCentral:
        return refute_binary_central(params, target, clausal, report, search);
      case Classification::BoundedOrder:
        if (params.a - params.b >= 2)
          return RefutationOutcome{reflexive_refuter(target, params.a, params.b),
                                   "reflexive-refuter"};
        return RefutationOutcome{order_refuter(BoundedOrder(target), params.a, params.b),
                                 "order-refuter"};
      default:
        if (params.a - params.b >= 2 && report.reflexive && !is_trivial(target))
          return RefutationOutcome{reflexive_refuter(target, params.a, params.b),
                                   "reflexive-refuter"};
        break;
    }
  }

  const auto fallback = family_search(params, target, search);
  if (fallback.certificate) return RefutationOutcome{*fallback.certificate, "family-search"};
  throw RefutationError(fallback.budget_exhausted
                            ? "no witness found within the search budget"
                            : "no witness exists in the searched families");
}

WitnessCertificate refute_inclusion(const MaxCCloneParams& params, const Relation& target,
                                    const FamilySearchBudget& search) {
  return refute_inclusion_detailed(params, target, search).certificate;
}

bool brute_force_subset_check(const MaxCCloneParams& params, const Relation& target,
                              int max_arity, const EnumerationBudget& budget) {
  const std::vector<Relation> q{build_binary_clausal(params)};
  for (int k = 1; k <= max_arity; ++k) {
    bool subset = true;
    for_each_pol_k(
        params.n, q, k,
        [&](const Operation& f) {
          if (!preserves(f, target)) {
            subset = false;
            return false;
          }
          return true;
        },
        budget);
    if (!subset) return false;
  }
  return true;
}

bool bounded_pol_equal(const Relation& r1, const Relation& r2, int max_arity,
                       const EnumerationBudget& budget) {
  if (!(r1.domain() == r2.domain()))
    throw std::invalid_argument("bounded_pol_equal: domain size mismatch");
  const std::vector<Relation> q1{r1}, q2{r2};
  for (int k = 1; k <= max_arity; ++k)
    if (pol_k(r1.domain(), q1, k, budget) != pol_k(r2.domain(), q2, k, budget)) return false;
  return true;
}

VerificationReport verify_theorem(DomainSize n, const VerifyOptions& options) {
  if (n.value() < 2)
    throw std::invalid_argument("verify_theorem: needs n >= 2");
  VerificationReport report{n, options.classes, {}, false, ""};

  std::vector<std::pair<RelationClass, std::vector<Relation>>> pools;
  for (RelationClass cls : options.classes)
    pools.emplace_back(cls, enumerate_class(cls, n));

  for (int a = 1; a < n.value(); ++a) {
    for (int b = 0; b + 1 < n.value(); ++b) {
      const MaxCCloneParams params(a, b, n);
      VerificationRow row{params, classify(params), inclusion_certificate(params),
                          false, {}, 0, 0};
      const std::string locus_prefix = "verify n=" + std::to_string(n.value()) + " row a=" +
                                       std::to_string(a) + " b=" + std::to_string(b);
      if (!row.inclusion.equal) {
        report.rows.push_back(std::move(row));
        report.failure = locus_prefix + ": inclusion certificate mismatch: constructed " +
                         relation_compact(report.rows.back().inclusion.constructed) +
                         " differs from designated " +
                         relation_compact(report.rows.back().inclusion.expected);
        return report;
      }
      const Relation clausal = build_binary_clausal(params);
      if (n.value() == 2) {
        if (!bounded_pol_equal(clausal, row.designated.relation, 2, options.enum_budget)) {
          report.rows.push_back(std::move(row));
          report.failure = locus_prefix + ": pol_k cross-check failed at n=2";
          return report;
        }
        row.pol_cross_checked = true;
      }

      for (const auto& [cls, pool] : pools) {
        for (const Relation& candidate : pool) {
          CandidateOutcome outcome{candidate, cls, CandidateVerdict::Excluded, "", std::nullopt};
          if (candidate == row.designated.relation) {
            outcome.verdict = CandidateVerdict::Included;
            ++row.included_count;
          } else if (n.value() == 2 &&
                     bounded_pol_equal(clausal, candidate, 2, options.enum_budget)) {
            outcome.verdict = CandidateVerdict::IncludedAlias;
          } else {
            try {
              RefutationOutcome refutation =
                  refute_inclusion_detailed(params, candidate, options.search_budget);
              if (!verify_certificate(refutation.certificate))
                throw VerificationError("exclusion certificate failed re-verification");
              outcome.route = refutation.route;
              outcome.exclusion = std::move(refutation.certificate);
              ++row.excluded_count;
            } catch (const std::exception& e) {
              row.candidates.push_back(std::move(outcome));
              report.rows.push_back(std::move(row));
              report.failure = locus_prefix + " candidate " + std::string(class_token(cls)) +
                               " " + relation_compact(candidate) + ": " + e.what();
              return report;
            }
          }
          row.candidates.push_back(std::move(outcome));
        }
      }

      const bool designated_class_requested =
          std::any_of(options.classes.begin(), options.classes.end(), [&](RelationClass cls) {
            switch (row.designated.kind) {
              case MaxCloneKind::UnaryNonTrivial: return cls == RelationClass::UnaryCentral;
              case MaxCloneKind::TwoBlockEquivalence:
                return cls == RelationClass::NontrivialEquivalence;
              case MaxCloneKind::BinaryCentral: return cls == RelationClass::BinaryCentral;
              case MaxCloneKind::BooleanMonotone: return cls == RelationClass::BoundedOrder;
            }
            return false;
          });
      if (designated_class_requested && row.included_count != 1) {
        report.rows.push_back(std::move(row));
        report.failure = locus_prefix + ": expected exactly one included candidate, found " +
                         std::to_string(report.rows.back().included_count);
        return report;
      }
      report.rows.push_back(std::move(row));
    }
  }
  report.ok = true;
  return report;
}

std::string render_text(const VerificationReport& report, bool verbose) {
  std::ostringstream out;
  out << "verify n=" << report.n.value() << ": " << report.rows.size() << " parameter rows;"
      << " classes:";
  for (RelationClass cls : report.classes) out << ' ' << class_token(cls);
  out << '\n';
  for (const VerificationRow& row : report.rows) {
    out << "row a=" << row.params.a << " b=" << row.params.b << ": designated "
        << kind_token(row.designated.kind) << ' ' << relation_compact(row.designated.relation)
        << "; inclusion " << (row.inclusion.equal ? "ok" : "MISMATCH");
    if (row.pol_cross_checked) out << " (pol_k cross-checked)";
    out << "; " << row.included_count << " included, " << row.excluded_count << " excluded\n";
    if (verbose) {
      for (const CandidateOutcome& cand : row.candidates) {
        out << "  ";
        switch (cand.verdict) {
          case CandidateVerdict::Included: out << "included "; break;
          case CandidateVerdict::IncludedAlias: out << "included-alias "; break;
          case CandidateVerdict::Excluded: out << "excluded "; break;
        }
        out << class_token(cand.source_class) << ' ' << relation_compact(cand.relation);
        if (cand.exclusion)
          out << " witness " << operation_compact(cand.exclusion->witness) << " via "
              << cand.route;
        out << '\n';
      }
    }
  }
  out << "result: " << (report.ok ? "OK" : ("FAIL " + report.failure)) << '\n';
  return out.str();
}

namespace {

nlohmann::json relation_json_obj(const Relation& rho) {
  return nlohmann::json::parse(relation_to_json(rho));
}

}  // namespace

std::string report_to_json(const VerificationReport& report) {
  nlohmann::json j;
  j["n"] = report.n.value();
  j["ok"] = report.ok;
  if (!report.ok) j["failure"] = report.failure;
  j["classes"] = nlohmann::json::array();
  for (RelationClass cls : report.classes) j["classes"].push_back(std::string(class_token(cls)));
  j["rows"] = nlohmann::json::array();
  for (const VerificationRow& row : report.rows) {
    nlohmann::json rj;
    rj["a"] = row.params.a;
    rj["b"] = row.params.b;
    rj["designated"] = {{"kind", std::string(kind_token(row.designated.kind))},
                        {"relation", relation_json_obj(row.designated.relation)}};
    rj["inclusion"] = {{"constructed", relation_json_obj(row.inclusion.constructed)},
                       {"expected", relation_json_obj(row.inclusion.expected)},
                       {"equal", row.inclusion.equal}};
    if (row.pol_cross_checked) rj["pol_cross_checked"] = true;
    rj["included"] = row.included_count;
    rj["excluded"] = row.excluded_count;
    rj["candidates"] = nlohmann::json::array();
    for (const CandidateOutcome& cand : row.candidates) {
      nlohmann::json cj;
      cj["class"] = std::string(class_token(cand.source_class));
      cj["relation"] = relation_json_obj(cand.relation);
      cj["verdict"] = cand.verdict == CandidateVerdict::Included        ? "included"
                      : cand.verdict == CandidateVerdict::IncludedAlias ? "included-alias"
                                                                        : "excluded";
      if (cand.exclusion) {
        cj["route"] = cand.route;
        cj["certificate"] = nlohmann::json::parse(certificate_to_json(*cand.exclusion));
      }
      rj["candidates"].push_back(std::move(cj));
    }
    j["rows"].push_back(std::move(rj));
  }
  return j.dump(2);
}

}  // namespace cclone
