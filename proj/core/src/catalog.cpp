#include "cclone/catalog.hpp"

#include <algorithm>

namespace cclone {

namespace {

std::size_t pair_code(int x, int y, DomainSize n) {
  return static_cast<std::size_t>(x) * static_cast<std::size_t>(n.value()) +
         static_cast<std::size_t>(y);
}

// {lo..hi}^2 added into rel
void add_square(Relation& rel, int lo, int hi, DomainSize n) {
  for (int x = lo; x <= hi; ++x)
    for (int y = lo; y <= hi; ++y) rel.insert_code(pair_code(x, y, n));
}

}  // namespace

UnaryIntervalUnion unary_interval_union(int a, int b, DomainSize n) {
  check_element(a, n);
  check_element(b, n);
  Relation rel(n, 1);
  for (int x = 0; x <= b; ++x) rel.insert_code(static_cast<std::size_t>(x));
  for (int x = a; x < n.value(); ++x) rel.insert_code(static_cast<std::size_t>(x));
  return UnaryIntervalUnion{std::move(rel), a - b >= 2};
}

Relation two_block_equivalence(int b, DomainSize n) {
  if (b < 0 || b > n.value() - 2)
    throw std::invalid_argument("two_block_equivalence: need 0 <= b <= n-2");
  if (b == 0 && n.value() == 2)
    throw std::invalid_argument("two_block_equivalence: both blocks are singletons (= diagonal)");
  Relation rel(n, 2);
  add_square(rel, 0, b, n);
  add_square(rel, b + 1, n.value() - 1, n);
  return rel;
}

Relation sigma(int a, int b, DomainSize n) {
  if (!(0 < a && a <= b && b < n.value() - 1))
    throw std::invalid_argument("sigma: need 0 < a <= b < n-1");
  Relation rel(n, 2);
  for (int c = a; c <= b; ++c) {
    add_square(rel, 0, c, n);
    add_square(rel, c, n.value() - 1, n);
  }
  Relation two_square(n, 2);
  add_square(two_square, 0, b, n);
  add_square(two_square, a, n.value() - 1, n);
  if (!(rel == two_square))
    throw std::logic_error("sigma: union-over-centers form disagrees with two-square form");
  return rel;
}

Relation rho_c(int c, DomainSize n) {
  check_element(c, n);
  Relation rel = Relation::diagonal(n);
  for (int x = 0; x < n.value(); ++x) {
    rel.insert_code(pair_code(c, x, n));
    rel.insert_code(pair_code(x, c, n));
  }
  return rel;
}

std::vector<std::pair<int, int>> upper_noncentral_pairs(int c, DomainSize n) {
  check_element(c, n);
  std::vector<std::pair<int, int>> out;
  for (int x = 0; x < n.value(); ++x)
    for (int y = x + 1; y < n.value(); ++y)
      if (x != c && y != c) out.emplace_back(x, y);
  return out;
}

CentralStructure binary_central(int c, const std::vector<std::pair<int, int>>& s, DomainSize n) {
  const std::vector<std::pair<int, int>> pool = upper_noncentral_pairs(c, n);
  for (const auto& [x, y] : s)
    if (std::find(pool.begin(), pool.end(), std::make_pair(x, y)) == pool.end())
      throw std::invalid_argument("binary_central: pair outside A_c");
  std::vector<std::pair<int, int>> dedup(s);
  std::sort(dedup.begin(), dedup.end());
  dedup.erase(std::unique(dedup.begin(), dedup.end()), dedup.end());
  if (dedup.size() == pool.size())
    throw std::invalid_argument("binary_central: S must be a proper subset of A_c");

  Relation rel = rho_c(c, n);
  for (const auto& [x, y] : dedup) {
    rel.insert_code(pair_code(x, y, n));
    rel.insert_code(pair_code(y, x, n));
  }
  std::vector<int> centers = centers_of(rel);
  const ValidationReport report = validate(rel);
  if (report.classification != Classification::BinaryCentral)
    throw std::logic_error("binary_central: construction failed its own validation");
  if (std::find(centers.begin(), centers.end(), c) == centers.end())
    throw std::logic_error("binary_central: c is not a center of the built relation");
  return CentralStructure{std::move(rel), std::move(centers)};
}

std::vector<int> centers_of(const Relation& rho) {
  if (rho.arity() != 2) throw std::invalid_argument("centers_of: arity must be 2");
  const DomainSize n = rho.domain();
  std::vector<int> out;
  for (int c = 0; c < n.value(); ++c) {
    bool central = true;
    for (int x = 0; x < n.value() && central; ++x)
      central = rho.contains_code(pair_code(x, c, n)) && rho.contains_code(pair_code(c, x, n));
    if (central) out.push_back(c);
  }
  return out;
}

std::string_view class_token(RelationClass c) {
  switch (c) {
    case RelationClass::UnaryCentral: return "unary-central";
    case RelationClass::NontrivialEquivalence: return "equivalence";
    case RelationClass::BinaryCentral: return "binary-central";
    case RelationClass::BoundedOrder: return "bounded-order";
  }
  return "?";
}

std::optional<RelationClass> class_from_token(std::string_view token) {
  for (RelationClass c : all_relation_classes())
    if (token == class_token(c)) return c;
  return std::nullopt;
}

std::vector<RelationClass> all_relation_classes() {
  return {RelationClass::UnaryCentral, RelationClass::NontrivialEquivalence,
          RelationClass::BinaryCentral, RelationClass::BoundedOrder};
}

namespace {

std::vector<Relation> enumerate_unary_central(DomainSize n) {
  std::vector<Relation> out;
  const std::size_t cells = static_cast<std::size_t>(n.value());
  for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << cells); ++mask) {
    Relation rel(n, 1);
    for (std::size_t c = 0; c < cells; ++c)
      if ((mask >> c) & 1u) rel.insert_code(c);
    out.push_back(std::move(rel));
  }
  return out;
}

// set partitions via restricted growth strings
std::vector<Relation> enumerate_equivalences(DomainSize n) {
  std::vector<Relation> out;
  const int k = n.value();
  std::vector<int> rgs(static_cast<std::size_t>(k), 0);
  for (;;) {
    const int blocks = 1 + *std::max_element(rgs.begin(), rgs.end());
    if (blocks != 1 && blocks != k) {  // skip the full relation and the diagonal
      Relation rel(n, 2);
      for (int x = 0; x < k; ++x)
        for (int y = 0; y < k; ++y)
          if (rgs[static_cast<std::size_t>(x)] == rgs[static_cast<std::size_t>(y)])
            rel.insert_code(pair_code(x, y, n));
      out.push_back(std::move(rel));
    }
    int i = k - 1;
    while (i > 0) {
      const int prefix_max =
          *std::max_element(rgs.begin(), rgs.begin() + i);
      if (rgs[static_cast<std::size_t>(i)] <= prefix_max) break;
      --i;
    }
    if (i == 0) break;
    ++rgs[static_cast<std::size_t>(i)];
    std::fill(rgs.begin() + i + 1, rgs.end(), 0);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Relation> enumerate_binary_central(DomainSize n) {
  std::vector<Relation> out;
  for (int c = 0; c < n.value(); ++c) {
    const auto pool = upper_noncentral_pairs(c, n);
    if (pool.empty()) continue;  // only the full relation arises; nothing non-trivial
    const std::uint64_t subsets = std::uint64_t{1} << pool.size();
    for (std::uint64_t mask = 0; mask + 1 < subsets; ++mask) {
      std::vector<std::pair<int, int>> s;
      for (std::size_t i = 0; i < pool.size(); ++i)
        if ((mask >> i) & 1u) s.push_back(pool[i]);
      out.push_back(binary_central(c, s, n).relation);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Relation> enumerate_bounded_orders(DomainSize n) {
  if (n.value() > 5)
    throw BudgetError("bounded-order enumeration is capped at n <= 5");
  std::vector<std::pair<int, int>> pairs;
  for (int x = 0; x < n.value(); ++x)
    for (int y = x + 1; y < n.value(); ++y) pairs.emplace_back(x, y);

  std::vector<Relation> out;
  std::vector<int> state(pairs.size(), 0);  // 0 incomparable, 1 x<y, 2 y<x
  for (;;) {
    Relation rel = Relation::diagonal(n);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if (state[i] == 1) rel.insert_code(pair_code(pairs[i].first, pairs[i].second, n));
      if (state[i] == 2) rel.insert_code(pair_code(pairs[i].second, pairs[i].first, n));
    }
    const ValidationReport report = validate(rel);
    if (report.classification == Classification::BoundedOrder) out.push_back(std::move(rel));

    std::size_t i = 0;
    while (i < state.size() && state[i] == 2) state[i++] = 0;
    if (i == state.size()) break;
    ++state[i];
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<Relation> enumerate_class(RelationClass c, DomainSize n) {
  switch (c) {
    case RelationClass::UnaryCentral: return enumerate_unary_central(n);
    case RelationClass::NontrivialEquivalence: return enumerate_equivalences(n);
    case RelationClass::BinaryCentral: return enumerate_binary_central(n);
    case RelationClass::BoundedOrder: return enumerate_bounded_orders(n);
  }
  throw std::invalid_argument("enumerate_class: unknown class");
}

BoundedOrder::BoundedOrder(Relation order_relation) : order(std::move(order_relation)), bottom(-1), top(-1) {
  const ValidationReport report = validate(order);
  if (!report.is_order || !report.bottom || !report.top)
    throw std::invalid_argument("BoundedOrder: relation is not a bounded partial order");
  bottom = *report.bottom;
  top = *report.top;
}

std::string_view classification_name(Classification c) {
  switch (c) {
    case Classification::Diagonal: return "diagonal";
    case Classification::UnaryCentral: return "unary-central";
    case Classification::NontrivialEquivalence: return "equivalence";
    case Classification::BinaryCentral: return "binary-central";
    case Classification::BoundedOrder: return "bounded-order";
    case Classification::Unclassified: return "unclassified";
  }
  return "?";
}

ValidationReport validate(const Relation& rho) {
  ValidationReport report;
  report.arity = rho.arity();
  const DomainSize n = rho.domain();

  if (rho.arity() == 1) {
    const bool trivial = rho.empty() || rho.is_full();
    report.classification = trivial ? Classification::Diagonal : Classification::UnaryCentral;
    // for h = 1, the central elements are exactly the members
    for (std::size_t c : rho.member_codes()) report.centers.push_back(static_cast<int>(c));
    return report;
  }
  if (rho.arity() != 2)
    throw std::invalid_argument("validate: arity must be <= 2");

  report.symmetric = rho == relation_inverse(rho);
  report.reflexive = true;
  report.antisymmetric = true;
  report.transitive = true;
  for (int x = 0; x < n.value(); ++x) {
    if (!rho.contains_code(pair_code(x, x, n))) report.reflexive = false;
    for (int y = 0; y < n.value(); ++y) {
      if (x != y && rho.contains_code(pair_code(x, y, n)) &&
          rho.contains_code(pair_code(y, x, n)))
        report.antisymmetric = false;
      if (!rho.contains_code(pair_code(x, y, n))) continue;
      for (int z = 0; z < n.value(); ++z)
        if (rho.contains_code(pair_code(y, z, n)) && !rho.contains_code(pair_code(x, z, n)))
          report.transitive = false;
    }
  }
  report.centers = centers_of(rho);
  report.is_equivalence = report.reflexive && report.symmetric && report.transitive;
  report.is_order = report.reflexive && report.antisymmetric && report.transitive;
  if (report.is_order) {
    for (int c = 0; c < n.value(); ++c) {
      bool least = true, greatest = true;
      for (int x = 0; x < n.value(); ++x) {
        least = least && rho.contains_code(pair_code(c, x, n));
        greatest = greatest && rho.contains_code(pair_code(x, c, n));
      }
      if (least && !report.bottom) report.bottom = c;
      if (greatest && !report.top) report.top = c;
    }
  }

  const bool trivial = is_trivial(rho);
  if (trivial)
    report.classification = Classification::Diagonal;
  else if (report.is_equivalence)
    report.classification = Classification::NontrivialEquivalence;
  else if (report.reflexive && report.symmetric && !report.centers.empty())
    report.classification = Classification::BinaryCentral;
  else if (report.is_order && report.bottom && report.top)
    report.classification = Classification::BoundedOrder;
  else
    report.classification = Classification::Unclassified;
  return report;
}

}  // namespace cclone
