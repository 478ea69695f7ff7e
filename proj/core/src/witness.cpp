#include "cclone/witness.hpp"

#include <algorithm>
#include <string>

namespace cclone {

namespace {

// R(a,b) for arbitrary a, b (not restricted to maximal parameters).
Relation clausal_ab(int a, int b, DomainSize n) {
  return build_clausal(ClausalSpec(n, {a}, {b}));
}

std::size_t pair_code(int x, int y, DomainSize n) {
  return static_cast<std::size_t>(x) * static_cast<std::size_t>(n.value()) +
         static_cast<std::size_t>(y);
}

void require_preserves(const Operation& f, const Relation& clausal, const char* who) {
  if (!preserves(f, clausal))
    throw VerificationError(std::string(who) +
                            ": constructed operation fails to preserve the clausal relation");
}

}  // namespace

bool verify_certificate(const WitnessCertificate& cert) {
  if (!(cert.witness.domain() == cert.clausal.domain()) ||
      !(cert.witness.domain() == cert.target.domain()))
    return false;
  if (!cert.preservation_check) return false;
  if (!preserves(cert.witness, cert.clausal)) return false;
  if (static_cast<int>(cert.violation.columns.size()) != cert.witness.arity()) return false;
  for (const Tuple& col : cert.violation.columns) {
    if (static_cast<int>(col.size()) != cert.target.arity()) return false;
    if (!cert.target.contains(col)) return false;
  }
  Tuple image;
  try {
    image = apply_componentwise(cert.witness, cert.violation.columns);
  } catch (const std::invalid_argument&) {
    return false;
  }
  if (image != cert.violation.image) return false;
  return !cert.target.contains(image);
}

WitnessCertificate make_certificate(Operation witness, Relation clausal, Relation target,
                                    std::vector<Tuple> columns) {
  WitnessCertificate cert{std::move(witness), std::move(clausal), std::move(target), false, {}};
  cert.preservation_check = preserves(cert.witness, cert.clausal);
  cert.violation.columns = std::move(columns);
  cert.violation.image = apply_componentwise(cert.witness, cert.violation.columns);
  if (!verify_certificate(cert))
    throw VerificationError("make_certificate: certificate failed independent re-verification");
  return cert;
}

WitnessCertificate make_certificate(Operation witness, Relation clausal, Relation target) {
  const auto violation = find_violation(witness, target);
  if (!violation)
    throw VerificationError("make_certificate: operation preserves the target relation");
  return make_certificate(std::move(witness), std::move(clausal), std::move(target),
                          violation->columns);
}

Operation unary_image_bounded(DomainSize n, int a, int b, std::vector<int> values) {
  check_element(a, n);
  check_element(b, n);
  Operation f = Operation::unary(n, std::move(values));
  if (!f.image_within(0, b) && !f.image_within(a, n.value() - 1))
    throw std::invalid_argument(
        "unary_image_bounded: image fits neither {0..b} nor {a..n-1}");
  require_preserves(f, clausal_ab(a, b, n), "unary_image_bounded");
  return f;
}

UnaryWitnessProperties unary_witness_properties(const Operation& f, int a, int b) {
  if (f.arity() != 1) throw std::invalid_argument("unary_witness_properties: f must be unary");
  const int top = f.domain().value() - 1;
  const bool keeps_low = f.maps_range_into_itself(0, b);
  const bool keeps_high = f.maps_range_into_itself(a, top);
  const bool image_low = f.image_within(0, b);
  const bool image_high = f.image_within(a, top);
  return UnaryWitnessProperties{keeps_low || image_high, keeps_high || image_low,
                                keeps_high || keeps_low};
}

namespace {

// Allowed value range for a template cell; {a,b} where both sides constrain.
std::pair<int, int> template_cell_range(int a, int b, int n, TemplateForm form, int x, int y) {
  bool low, high;
  if (form == TemplateForm::Low) {
    low = x <= b || y <= b;
    high = x >= a && y >= a;
  } else {
    high = x >= a || y >= a;
    low = x <= b && y <= b;
  }
  if (low && high) return {a, b};
  if (low) return {0, b};
  if (high) return {a, n - 1};
  return {0, n - 1};
}

bool template_cell_free(int a, int b, TemplateForm form, int x, int y) {
  if (form == TemplateForm::Low) return !(x <= b || y <= b) && !(x >= a && y >= a);
  return !(x >= a || y >= a) && !(x <= b && y <= b);
}

}  // namespace

Operation binary_template(int a, int b, DomainSize n, TemplateForm form, int low_default,
                          int high_default,
                          const std::map<std::pair<int, int>, int>& overrides) {
  check_element(a, n);
  check_element(b, n);
  if (low_default < 0 || low_default > b)
    throw std::invalid_argument("binary_template: low_default must lie in {0..b}");
  if (high_default < a || high_default > n.value() - 1)
    throw std::invalid_argument("binary_template: high_default must lie in {a..n-1}");

  std::vector<int> table(checked_power(n.value(), 2));
  for (int x = 0; x < n.value(); ++x)
    for (int y = 0; y < n.value(); ++y) {
      bool low, high;
      if (form == TemplateForm::Low) {
        low = x <= b || y <= b;
        high = x >= a && y >= a;
      } else {
        high = x >= a || y >= a;
        low = x <= b && y <= b;
      }
      int v;
      if (low && high)  // only possible when a <= b
        v = std::clamp(form == TemplateForm::Low ? high_default : low_default, a, b);
      else if (low)
        v = low_default;
      else if (high)
        v = high_default;
      else
        v = form == TemplateForm::Low ? low_default : high_default;
      table[pair_code(x, y, n)] = v;
    }

  for (const auto& [cell, value] : overrides) {
    const auto [x, y] = cell;
    check_element(x, n);
    check_element(y, n);
    check_element(value, n);
    if (!template_cell_free(a, b, form, x, y))
      throw std::invalid_argument("binary_template: override touches a constrained cell");
    table[pair_code(x, y, n)] = value;
  }

  Operation f(n, 2, std::move(table));
  for (int x = 0; x < n.value(); ++x)
    for (int y = 0; y < n.value(); ++y) {
      const auto [lo, hi] = template_cell_range(a, b, n.value(), form, x, y);
      const int v = f.value_at(pair_code(x, y, n));
      if (v < lo || v > hi)
        throw std::logic_error("binary_template: built table violates the form");
    }
  require_preserves(f, clausal_ab(a, b, n), "binary_template");
  return f;
}

WitnessCertificate middle_element_refuter(const Relation& rho, int a, int b) {
  if (rho.arity() != 1) throw std::invalid_argument("middle_element_refuter: rho must be unary");
  const DomainSize n = rho.domain();
  check_element(a, n);
  check_element(b, n);
  if (rho.is_full()) throw std::invalid_argument("middle_element_refuter: rho must be proper");

  int x = -1;
  for (int v = b + 1; v < a; ++v)
    if (rho.contains_code(static_cast<std::size_t>(v))) {
      x = v;
      break;
    }
  if (x < 0)
    throw std::invalid_argument("middle_element_refuter: rho has no element strictly between b and a");
  int y = -1;
  for (int v = 0; v < n.value(); ++v)
    if (!rho.contains_code(static_cast<std::size_t>(v))) {
      y = v;
      break;
    }

  const Operation f =
      binary_template(a, b, n, TemplateForm::Low, 0, a, {{{x, x}, y}});
  const Tuple member{x};
  return make_certificate(f, clausal_ab(a, b, n), rho, {member, member});
}

WitnessCertificate reflexive_refuter(const Relation& rho, int a, int b, std::pair<int, int> xy,
                                     std::pair<int, int> uv) {
  if (rho.arity() != 2) throw std::invalid_argument("reflexive_refuter: rho must be binary");
  const DomainSize n = rho.domain();
  check_element(a, n);
  check_element(b, n);
  if (a - b < 2) throw std::invalid_argument("reflexive_refuter: needs a - b >= 2");
  for (int v = 0; v < n.value(); ++v)
    if (!rho.contains_code(pair_code(v, v, n)))
      throw std::invalid_argument("reflexive_refuter: rho must be reflexive");
  const auto [x, y] = xy;
  const auto [u, v] = uv;
  if (x == y || !rho.contains_code(pair_code(x, y, n)))
    throw std::invalid_argument("reflexive_refuter: (x,y) must be an off-diagonal member");
  if (rho.contains_code(pair_code(u, v, n)))
    throw std::invalid_argument("reflexive_refuter: (u,v) must not be a member");

  std::vector<int> table(checked_power(n.value(), 2));
  for (int w = 0; w < n.value(); ++w)
    for (int z = 0; z < n.value(); ++z) {
      int val;
      if (z <= b)
        val = 0;
      else if (z >= a)
        val = n.value() - 1;
      else
        val = (w == x) ? u : v;
      table[pair_code(w, z, n)] = val;
    }
  Operation g(n, 2, std::move(table));

  const int z = b + 1;  // any middle element works; take the least
  return make_certificate(g, clausal_ab(a, b, n), rho,
                          {Tuple{x, y}, Tuple{z, z}});
}

WitnessCertificate reflexive_refuter(const Relation& rho, int a, int b) {
  if (rho.arity() != 2) throw std::invalid_argument("reflexive_refuter: rho must be binary");
  const DomainSize n = rho.domain();
  std::pair<int, int> xy{-1, -1}, uv{-1, -1};
  for (std::size_t code = 0; code < rho.cell_count(); ++code) {
    const Tuple t = decode_tuple(code, 2, n);
    if (xy.first < 0 && t[0] != t[1] && rho.contains_code(code)) xy = {t[0], t[1]};
    if (uv.first < 0 && !rho.contains_code(code)) uv = {t[0], t[1]};
  }
  if (xy.first < 0)
    throw std::invalid_argument("reflexive_refuter: rho has no off-diagonal member");
  if (uv.first < 0) throw std::invalid_argument("reflexive_refuter: rho is the full relation");
  return reflexive_refuter(rho, a, b, xy, uv);
}

Operation interval_preserving_unary(const Operation& f, int a, int b) {
  if (f.arity() != 1)
    throw std::invalid_argument("interval_preserving_unary: f must be unary");
  const DomainSize n = f.domain();
  check_element(a, n);
  check_element(b, n);
  if (!f.maps_range_into_itself(0, b) || !f.maps_range_into_itself(a, n.value() - 1))
    throw std::invalid_argument(
        "interval_preserving_unary: f must map {0..b} and {a..n-1} into themselves");
  require_preserves(f, clausal_ab(a, b, n), "interval_preserving_unary");
  return f;
}

Operation order_exception_witness(char case_id, DomainSize n) {
  if (n.value() < 3) throw std::invalid_argument("order_exception_witness: needs n >= 3");
  const int top = n.value() - 1;
  std::vector<int> table(static_cast<std::size_t>(n.value()));
  for (int x = 0; x < n.value(); ++x) table[static_cast<std::size_t>(x)] = x;
  int a, b;
  switch (case_id) {
    case 'a':
    case 'e':
      table[0] = 1;
      a = 1, b = 1;
      break;
    case 'b':
      table[static_cast<std::size_t>(top)] = 0;
      a = 1, b = top - 1;
      break;
    case 'c':
      table[0] = top;
      a = 1, b = top - 1;
      break;
    case 'd':
    case 'f':
      table[static_cast<std::size_t>(top)] = top - 1;
      a = top - 1, b = top - 1;
      break;
    default:
      throw std::invalid_argument("order_exception_witness: case_id must be 'a'..'f'");
  }
  return unary_image_bounded(n, a, b, std::move(table));
}

WitnessCertificate order_refuter(const BoundedOrder& order, int a, int b) {
  const DomainSize n = order.order.domain();
  if (n.value() < 3) throw std::invalid_argument("order_refuter: needs n >= 3");
  check_element(a, n);
  check_element(b, n);

  if (a - b >= 2) return reflexive_refuter(order.order, a, b);

  const Relation clausal = clausal_ab(a, b, n);
  std::vector<Operation> candidates;
  for (int x = 0; x < n.value(); ++x)
    if (x != order.bottom) candidates.push_back(Operation::transposition(n, x, order.bottom));
  for (int x = 0; x < n.value(); ++x)
    if (x != order.top) candidates.push_back(Operation::transposition(n, x, order.top));
  for (char c = 'a'; c <= 'f'; ++c) candidates.push_back(order_exception_witness(c, n));

  for (const Operation& f : candidates) {
    if (!preserves(f, clausal)) continue;
    if (find_violation(f, order.order))
      return make_certificate(f, clausal, order.order);
  }

  if (is_maximal_cclone_params(a, b, n)) {
    const auto fallback = family_search(MaxCCloneParams(a, b, n), order.order);
    if (fallback.certificate) return *fallback.certificate;
  }
  throw RefutationError("order_refuter: no verified witness among the candidates");
}

std::pair<Operation, Operation> equivalence_refuters(int a, int b, DomainSize n) {
  check_element(a, n);
  check_element(b, n);
  if (!(0 < a && a <= b + 1 && b + 1 <= n.value() - 1))
    throw std::invalid_argument("equivalence_refuters: need 0 < a <= b+1 <= n-1");

  std::vector<int> f_table(checked_power(n.value(), 2));
  std::vector<int> g_table(f_table.size());
  for (int x = 0; x < n.value(); ++x)
    for (int y = 0; y < n.value(); ++y) {
      int fv = (x > b && y > b) ? a : b;
      if (x == b + 1 && y == 0) fv = 0;
      int gv = (x < a && y < a) ? b : a;
      if (x == a - 1 && y == n.value() - 1) gv = n.value() - 1;
      f_table[pair_code(x, y, n)] = fv;
      g_table[pair_code(x, y, n)] = gv;
    }
  Operation f(n, 2, std::move(f_table));
  Operation g(n, 2, std::move(g_table));
  const Relation clausal = clausal_ab(a, b, n);
  require_preserves(f, clausal, "equivalence_refuters(f)");
  require_preserves(g, clausal, "equivalence_refuters(g)");
  return {std::move(f), std::move(g)};
}

WitnessCertificate central_refuter(const Relation& rho, int c, int a, int b) {
  if (rho.arity() != 2) throw std::invalid_argument("central_refuter: rho must be binary");
  const DomainSize n = rho.domain();
  check_element(c, n);
  check_element(a, n);
  check_element(b, n);
  if (a - b > 1) throw std::invalid_argument("central_refuter: needs a - b <= 1");
  if (!(c < a || c > b))
    throw std::invalid_argument("central_refuter: center must satisfy c < a or c > b");
  const ValidationReport report = validate(rho);
  if (report.classification != Classification::BinaryCentral)
    throw std::invalid_argument("central_refuter: rho is not a non-trivial binary central relation");
  if (std::find(report.centers.begin(), report.centers.end(), c) == report.centers.end())
    throw std::invalid_argument("central_refuter: c is not a center of rho");

  const int d = (c < a) ? n.value() - 1 : 0;
  int u = -1, v = -1;
  for (std::size_t code = 0; code < rho.cell_count(); ++code)
    if (!rho.contains_code(code)) {
      const Tuple t = decode_tuple(code, 2, n);
      u = t[0], v = t[1];
      break;
    }
  if (u < 0) throw std::invalid_argument("central_refuter: rho is the full relation");

  const bool both_low = u <= b && v <= b;
  const bool both_high = u >= a && v >= a;
  int z;
  std::vector<int> table(checked_power(n.value(), 2));
  if (both_low) {
    z = (c < a) ? c : d;
    for (int x = 0; x < n.value(); ++x)
      for (int y = 0; y < n.value(); ++y)
        table[pair_code(x, y, n)] = (x >= a && y >= a) ? std::min(x, y)
                                    : (x == c && y == z) ? v
                                                         : u;
  } else if (both_high) {
    z = (c > b) ? c : d;
    for (int x = 0; x < n.value(); ++x)
      for (int y = 0; y < n.value(); ++y)
        table[pair_code(x, y, n)] = (x <= b && y <= b) ? std::max(x, y)
                                    : (x == c && y == z) ? v
                                                         : u;
  } else {
    // mixed: normalise to u <= b and v >= a (rho is symmetric)
    if (u > b) std::swap(u, v);
    z = c;
    if (c < a) {
      for (int x = 0; x < n.value(); ++x)
        for (int y = 0; y < n.value(); ++y)
          table[pair_code(x, y, n)] = (x == c && y == z)    ? u
                                      : (x <= b && y <= b) ? std::max(x, y)
                                                           : v;
    } else {
      for (int x = 0; x < n.value(); ++x)
        for (int y = 0; y < n.value(); ++y)
          table[pair_code(x, y, n)] = (x == c && y == z)    ? v
                                      : (x >= a && y >= a) ? std::min(x, y)
                                                           : u;
    }
  }

  Operation f(n, 2, std::move(table));
  return make_certificate(f, clausal_ab(a, b, n), rho,
                          {Tuple{c, d}, Tuple{z, z}});
}

Operation complement_mapper(int a, int b, int x1, int x2, int y1, int y2, DomainSize n) {
  check_element(a, n);
  check_element(b, n);
  if (a > b) throw std::invalid_argument("complement_mapper: needs a <= b");
  if (!(x1 < a && x2 < a && y1 > b && y2 > b))
    throw std::invalid_argument("complement_mapper: need x1,x2 < a and y1,y2 > b");
  check_element(x1, n);
  check_element(x2, n);
  check_element(y1, n);
  check_element(y2, n);

  std::vector<int> table(static_cast<std::size_t>(n.value()));
  for (int x = 0; x < n.value(); ++x) table[static_cast<std::size_t>(x)] = x;
  table[static_cast<std::size_t>(x1)] = x2;
  table[static_cast<std::size_t>(y1)] = y2;
  Operation f = interval_preserving_unary(Operation::unary(n, std::move(table)), a, b);
  return f;
}

Operation dualize(const Operation& f) {
  const DomainSize n = f.domain();
  const int top = n.value() - 1;
  std::vector<int> table(f.cell_count());
  for (std::size_t code = 0; code < f.cell_count(); ++code) {
    Tuple args = decode_tuple(code, f.arity(), n);
    for (int& x : args) x = top - x;
    table[code] = top - f.apply(args);
  }
  return Operation(n, f.arity(), std::move(table));
}

namespace {

// Odometer over per-cell value ranges, ascending table order. Returns false
// when the visitor stopped the walk.
bool walk_tables(const std::vector<std::pair<int, int>>& ranges,
                 const std::function<bool(const std::vector<int>&)>& visit) {
  std::vector<int> table(ranges.size());
  for (std::size_t i = 0; i < ranges.size(); ++i) table[i] = ranges[i].first;
  for (;;) {
    if (!visit(table)) return false;
    std::size_t i = ranges.size();
    while (i > 0 && table[i - 1] == ranges[i - 1].second) {
      table[i - 1] = ranges[i - 1].first;
      --i;
    }
    if (i == 0) return true;
    ++table[i - 1];
  }
}

}  // namespace

FamilySearchResult family_search(const MaxCCloneParams& params, const Relation& target,
                                 const FamilySearchBudget& budget) {
  const DomainSize n = params.n;
  const int a = params.a, b = params.b;
  const Relation clausal = build_binary_clausal(params);
  const int top = n.value() - 1;

  FamilySearchResult result;
  std::size_t visited = 0;  // raw walk length, including family-filter skips
  const std::size_t visit_cap = budget.max_candidates * 64;
  auto over_walk_cap = [&]() -> bool {
    if (++visited > visit_cap) {
      result.budget_exhausted = true;
      return true;
    }
    return false;
  };
  auto try_candidate = [&](const Operation& f) -> bool {  // true = stop the walk
    if (result.examined >= budget.max_candidates) {
      result.budget_exhausted = true;
      return true;
    }
    ++result.examined;
    if (!preserves(f, clausal)) return false;
    const auto violation = find_violation(f, target);
    if (!violation) return false;
    result.certificate = make_certificate(f, clausal, target, violation->columns);
    return true;
  };

  const std::vector<std::pair<int, int>> unary_ranges(static_cast<std::size_t>(n.value()),
                                                      {0, top});
  const auto image_bounded = [&](const Operation& f) {
    return f.image_within(0, b) || f.image_within(a, top);
  };
  const auto interval_preserving = [&](const Operation& f) {
    return f.maps_range_into_itself(0, b) && f.maps_range_into_itself(a, top);
  };

  // image-bounded unary maps
  bool done = !walk_tables(unary_ranges, [&](const std::vector<int>& table) {
    if (over_walk_cap()) return false;
    Operation f = Operation::unary(n, table);
    if (!image_bounded(f)) return true;
    return !try_candidate(f);
  });
  // interval-preserving unary maps (those not already image-bounded)
  if (!done)
    done = !walk_tables(unary_ranges, [&](const std::vector<int>& table) {
      if (over_walk_cap()) return false;
      Operation f = Operation::unary(n, table);
      if (image_bounded(f) || !interval_preserving(f)) return true;
      return !try_candidate(f);
    });
  // the full low-form and high-form binary template families
  if (!done) {
    std::vector<std::pair<int, int>> low_ranges, high_ranges;
    for (int x = 0; x < n.value(); ++x)
      for (int y = 0; y < n.value(); ++y) {
        low_ranges.push_back(template_cell_range(a, b, n.value(), TemplateForm::Low, x, y));
        high_ranges.push_back(template_cell_range(a, b, n.value(), TemplateForm::High, x, y));
      }
    done = !walk_tables(low_ranges, [&](const std::vector<int>& table) {
      if (over_walk_cap()) return false;
      return !try_candidate(Operation(n, 2, table));
    });
    if (!done) {
      const auto satisfies_low = [&](const std::vector<int>& table) {
        for (int x = 0; x < n.value(); ++x)
          for (int y = 0; y < n.value(); ++y) {
            const auto [lo, hi] = template_cell_range(a, b, n.value(), TemplateForm::Low, x, y);
            const int val = table[pair_code(x, y, n)];
            if (val < lo || val > hi) return false;
          }
        return true;
      };
      walk_tables(high_ranges, [&](const std::vector<int>& table) {
        if (over_walk_cap()) return false;
        if (satisfies_low(table)) return true;  // already tried in the low family
        return !try_candidate(Operation(n, 2, table));
      });
    }
  }
  if (result.certificate) result.budget_exhausted = false;
  return result;
}

}  // namespace cclone
