// Acceptance suite: one pass/fail line per criterion, exit 0 only when all
// pass. Each criterion is exact (no tolerances) and carries a wall-clock
// budget that is enforced.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "cclone/classify.hpp"
#include "cclone/io.hpp"

using namespace cclone;

namespace {

struct Check {
  int failures = 0;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      ++failures;
      std::printf("    FAILED: %s\n", what.c_str());
    }
  }
};

Relation clausal_rel(int a, int b, DomainSize n) {
  return build_clausal(ClausalSpec(n, {a}, {b}));
}

// ---- criterion 1: main-theorem instance verification at n = 3 -------------

bool criterion_1() {
  Check c;
  const auto report = verify_theorem(DomainSize(3));
  c.require(report.ok, "verify 3 reported: " + report.failure);
  c.require(report.rows.size() == 4, "expected 4 parameter rows");
  for (const auto& row : report.rows) {
    c.require(row.inclusion.equal, "inclusion certificate must be exact set equality");
    c.require(row.included_count == 1, "exactly one inclusion per row");
    std::size_t unary = 0, equivalences = 0, central = 0, orders = 0;
    for (const auto& cand : row.candidates) {
      switch (cand.source_class) {
        case RelationClass::UnaryCentral: ++unary; break;
        case RelationClass::NontrivialEquivalence: ++equivalences; break;
        case RelationClass::BinaryCentral: ++central; break;
        case RelationClass::BoundedOrder: ++orders; break;
      }
      if (cand.verdict == CandidateVerdict::Excluded)
        c.require(cand.exclusion && verify_certificate(*cand.exclusion),
                  "every exclusion carries a verified certificate");
    }
    c.require(unary == 6 && equivalences == 3 && central == 3 && orders == 6,
              "candidate pool must cover 6 unary, 3 equivalences, 3 central, 6 orders");
    c.require(row.excluded_count == 17, "17 exclusions per row");
  }
  return c.failures == 0;
}

// ---- criterion 2: main-theorem instance verification at n = 4 -------------

bool criterion_2() {
  Check c;
  const DomainSize n4(4);
  const auto report = verify_theorem(n4);
  c.require(report.ok, "verify 4 reported: " + report.failure);
  c.require(report.rows.size() == 9, "expected 9 parameter rows");
  const std::size_t central_count = enumerate_class(RelationClass::BinaryCentral, n4).size();
  const std::size_t order_count = enumerate_class(RelationClass::BoundedOrder, n4).size();
  c.require(order_count <= 4096, "bounded orders stay under the filtered bound");
  for (const auto& row : report.rows) {
    c.require(row.included_count == 1, "exactly one inclusion per row");
    std::size_t unary = 0, equivalences = 0, central = 0, orders = 0;
    for (const auto& cand : row.candidates) {
      switch (cand.source_class) {
        case RelationClass::UnaryCentral: ++unary; break;
        case RelationClass::NontrivialEquivalence: ++equivalences; break;
        case RelationClass::BinaryCentral: ++central; break;
        case RelationClass::BoundedOrder: ++orders; break;
      }
      if (cand.verdict == CandidateVerdict::Excluded)
        c.require(cand.exclusion && verify_certificate(*cand.exclusion),
                  "every exclusion carries a verified certificate");
    }
    c.require(unary == 14, "14 unary central candidates");
    c.require(equivalences == 13, "13 non-trivial equivalences (Bell(4) - 2)");
    c.require(central == central_count, "all deduplicated binary central relations");
    c.require(orders == order_count, "all enumerated bounded orders");
  }
  return c.failures == 0;
}

// ---- criterion 3: the n = 2 endpoint ---------------------------------------

bool criterion_3() {
  Check c;
  const DomainSize n2(2);
  const std::vector<Relation> clausal{clausal_rel(1, 0, n2)};
  Relation leq(n2, 2);
  leq.insert(Tuple{0, 0});
  leq.insert(Tuple{0, 1});
  leq.insert(Tuple{1, 1});
  const std::vector<Relation> monotone{leq};
  const std::size_t expected[] = {3, 6, 20};
  for (int k = 1; k <= 3; ++k) {
    const auto ops = pol_k(n2, clausal, k);
    c.require(ops.size() == expected[k - 1],
              "pol_" + std::to_string(k) + " count must be " + std::to_string(expected[k - 1]));
    c.require(ops == pol_k(n2, monotone, k),
              "pol_" + std::to_string(k) + " must equal the monotone Boolean operations");
  }
  return c.failures == 0;
}

// ---- criterion 4: oracle equivalence of refutations at n = 3 --------------

bool criterion_4() {
  Check c;
  const DomainSize n3(3);
  for (int a = 1; a < 3; ++a)
    for (int b = 0; b < 2; ++b) {
      const MaxCCloneParams params(a, b, n3);
      const Relation designated = classify(params).relation;
      for (RelationClass cls : all_relation_classes())
        for (const Relation& candidate : enumerate_class(cls, n3)) {
          const bool subset = brute_force_subset_check(params, candidate, 2);
          if (candidate == designated) {
            c.require(subset, "inclusion implies the bounded-arity subset condition");
            continue;
          }
          bool refuted = false;
          try {
            refuted = verify_certificate(refute_inclusion(params, candidate));
          } catch (const std::exception&) {
            refuted = false;
          }
          c.require(refuted, "refutation must succeed for a non-designated candidate");
          c.require(refuted == !subset,
                    "refutation success must coincide with bounded-arity subset failure");
        }
    }
  return c.failures == 0;
}

// ---- criterion 5: the unary witness conditions, exhaustively --------------

bool criterion_5() {
  Check c;
  for (int n = 3; n <= 4; ++n) {
    const DomainSize dom(n);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        const std::vector<Relation> q{clausal_rel(a, b, dom)};
        for (const Operation& f : pol_k(dom, q, 1))
          c.require(unary_witness_properties(f, a, b).all(),
                    "unary polymorphism violating the witness conditions at n=" +
                        std::to_string(n) + " a=" + std::to_string(a) + " b=" +
                        std::to_string(b));
      }
  }
  return c.failures == 0;
}

// ---- criterion 6: the intersection identities up to n = 6 -----------------

bool criterion_6() {
  Check c;
  for (int n = 2; n <= 6; ++n) {
    const DomainSize dom(n);
    for (int a = 1; a < n; ++a)
      for (int b = 0; b + 1 < n; ++b) {
        const Relation r = build_binary_clausal(MaxCCloneParams(a, b, dom));
        const Relation meet = relation_intersect(r, relation_inverse(r));
        if (a <= b)
          c.require(meet == sigma(a, b, dom), "sigma identity at n=" + std::to_string(n));
        if (a == b + 1) {
          Relation blocks(dom, 2);
          for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
              if ((x <= b) == (y <= b)) blocks.insert(Tuple{x, y});
          c.require(meet == blocks, "two-block identity at n=" + std::to_string(n));
          if (n >= 3)
            c.require(meet == two_block_equivalence(b, dom),
                      "two-block builder identity at n=" + std::to_string(n));
        }
        if (a - b >= 2)
          c.require(diagonal_restriction(meet) == unary_interval_union(a, b, dom).relation,
                    "interval union identity at n=" + std::to_string(n));
      }
  }
  return c.failures == 0;
}

// ---- criterion 7: certificate integrity and the mutation test -------------

bool criterion_7() {
  Check c;
  const auto report = verify_theorem(DomainSize(3));
  c.require(report.ok, "verify 3 must pass before the integrity sweep");
  std::size_t total = 0, caught = 0;
  for (const auto& row : report.rows)
    for (const auto& cand : row.candidates) {
      if (!cand.exclusion) continue;
      ++total;
      c.require(verify_certificate(*cand.exclusion), "every emitted certificate re-verifies");

      // corrupt, one at a time, each witness table cell the violation reads;
      // the recomputed image changes, so re-verification must catch it
      const WitnessCertificate& cert = *cand.exclusion;
      bool all_caught = true;
      const int m = cert.target.arity();
      for (int row_idx = 0; row_idx < m; ++row_idx) {
        Tuple args;
        for (const Tuple& col : cert.violation.columns) args.push_back(col[row_idx]);
        const std::size_t cell = encode_tuple(args, cert.witness.domain());
        WitnessCertificate mutated = cert;
        std::vector<int> table = cert.witness.table();
        table[cell] = (table[cell] + 1) % cert.witness.domain().value();
        mutated.witness = Operation(cert.witness.domain(), cert.witness.arity(), table);
        if (verify_certificate(mutated)) all_caught = false;
      }
      if (all_caught) ++caught;
    }
  c.require(total > 0, "the n=3 report must carry certificates");
  c.require(caught == total, "a corrupted witness cell must always be caught");
  return c.failures == 0;
}

// ---- criterion 8: completeness criterion against the obstruction list -----

bool criterion_8() {
  Check c;
  const DomainSize n3(3);
  const auto obstructions = obstruction_relations(n3);
  std::vector<std::vector<int>> a_blocks, b_blocks;
  for (int p = 1; p <= 2; ++p)
    for (int a1 = 0; a1 < 3; ++a1)
      for (int a2 = 0; a2 < (p == 2 ? 3 : 1); ++a2)
        a_blocks.push_back(p == 1 ? std::vector<int>{a1} : std::vector<int>{a1, a2});
  b_blocks = a_blocks;

  for (const auto& a : a_blocks)
    for (const auto& b : b_blocks) {
      const ClausalSpec spec(n3, a, b);
      if (is_complete(std::vector<ClausalSpec>{spec})) continue;
      const std::vector<Relation> q{build_clausal(spec)};

      std::vector<bool> survives(obstructions.size(), true);
      auto filter = [&](const Operation& f) {
        for (std::size_t i = 0; i < obstructions.size(); ++i)
          if (survives[i] && !preserves(f, obstructions[i])) survives[i] = false;
        return true;
      };
      for (int k = 1; k <= 2; ++k) for_each_pol_k(n3, q, k, filter);
      bool some = false;
      for (bool s : survives) some = some || s;
      c.require(some, "incomplete spec " + clausal_spec_to_text(spec) +
                          " must leave some obstruction invariant");
    }
  return c.failures == 0;
}

}  // namespace

int main() {
  struct Criterion {
    const char* label;
    double budget_seconds;
    std::function<bool()> run;
  };
  const std::vector<Criterion> criteria{
      {"1: exhaustive classification verification, n=3 (exact)", 5.0, criterion_1},
      {"2: exhaustive classification verification, n=4 (exact)", 120.0, criterion_2},
      {"3: n=2 endpoint equals monotone Boolean operations, counts 3/6/20", 60.0, criterion_3},
      {"4: refutation <=> bounded-arity subset failure at n=3 (exact)", 30.0, criterion_4},
      {"5: unary witness conditions exhaustive for n in {3,4} (exact)", 60.0, criterion_5},
      {"6: intersection identity suite for n <= 6 (exact)", 1.0, criterion_6},
      {"7: certificate integrity incl. mutation detection (100%)", 60.0, criterion_7},
      {"8: completeness criterion vs obstruction list, n=3, p,q <= 2 (exact)", 60.0,
       criterion_8},
  };

  int passed = 0;
  for (const auto& criterion : criteria) {
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    std::string error;
    try {
      ok = criterion.run();
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (ok && seconds > criterion.budget_seconds) {
      ok = false;
      error = "exceeded the " + std::to_string(criterion.budget_seconds) + "s budget";
    }
    std::printf("[%s] criterion %s (%.2fs)%s%s\n", ok ? "PASS" : "FAIL", criterion.label,
                seconds, error.empty() ? "" : " error: ", error.c_str());
    if (ok) ++passed;
  }
  std::printf("acceptance: %d/%zu criteria passed\n", passed, criteria.size());
  return passed == static_cast<int>(criteria.size()) ? 0 : 1;
}
