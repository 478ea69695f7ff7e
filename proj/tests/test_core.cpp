#include <doctest.h>

#include "cclone/clausal.hpp"
#include "cclone/enumerate.hpp"
#include "oracles.hpp"

using namespace cclone;

namespace {
const DomainSize N2{2}, N3{3};

Relation clausal_rel(int a, int b, DomainSize n) {
  return build_clausal(ClausalSpec(n, {a}, {b}));
}
}  // namespace

TEST_CASE("tuple codes are mixed radix, coordinate 0 most significant") {
  CHECK(encode_tuple(Tuple{0, 0}, N3) == 0);
  CHECK(encode_tuple(Tuple{2, 1}, N3) == 7);
  CHECK(encode_tuple(Tuple{1, 0, 2}, N3) == 11);
  CHECK_THROWS_AS(encode_tuple(Tuple{3, 0}, N3), std::invalid_argument);
  CHECK_THROWS_AS(encode_tuple(Tuple{-1}, N3), std::invalid_argument);
}

TEST_CASE("encode/decode is a bijection for m <= 4, n <= 5") {
  for (int n = 1; n <= 5; ++n)
    for (int m = 1; m <= 4; ++m) {
      const DomainSize dom(n);
      const std::size_t cells = checked_power(n, m);
      for (std::size_t code = 0; code < cells; ++code) {
        const Tuple t = decode_tuple(code, m, dom);
        CHECK(encode_tuple(t, dom) == code);
      }
    }
}

TEST_CASE("apply_componentwise works row-wise") {
  // binary min on n=3
  std::vector<int> min_table(9);
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y) min_table[static_cast<std::size_t>(3 * x + y)] = std::min(x, y);
  const Operation min_op(N3, 2, min_table);
  CHECK(apply_componentwise(min_op, std::vector<Tuple>{{0, 1}, {2, 2}}) == Tuple{0, 1});

  CHECK(apply_componentwise(Operation::identity(N3), std::vector<Tuple>{{2, 0}}) == Tuple{2, 0});
  CHECK(apply_componentwise(Operation::constant(N3, 1, 1), std::vector<Tuple>{{2, 2}}) ==
        Tuple{1, 1});
  CHECK_THROWS_AS(apply_componentwise(min_op, std::vector<Tuple>{{0, 1}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(apply_componentwise(min_op, std::vector<Tuple>{{0, 1}, {2}}),
                  std::invalid_argument);
}

TEST_CASE("projections preserve every relation") {
  auto rng = oracle::seeded_rng(11);
  for (int n = 2; n <= 4; ++n)
    for (int arity = 1; arity <= 3; ++arity)
      for (int trial = 0; trial < 8; ++trial) {
        const DomainSize dom(n);
        const Relation rho = oracle::random_relation(dom, arity, rng);
        for (int k = 1; k <= 2; ++k)
          for (int i = 0; i < k; ++i)
            CHECK(preserves(Operation::projection(dom, k, i), rho));
      }
}

TEST_CASE("preservation counterexamples are least and oracle-derived") {
  const Relation r20 = clausal_rel(2, 0, N3);

  // c1 fails; the least violating choice is the single column (0,0)
  const Operation c1 = Operation::constant(N3, 1, 1);
  CHECK_FALSE(oracle::naive_preserves(c1, r20));
  const auto violation = find_violation(c1, r20);
  REQUIRE(violation.has_value());
  CHECK(violation->columns == std::vector<Tuple>{{0, 0}});
  CHECK(violation->image == Tuple{1, 1});

  // c0 has image inside {0..b} and preserves
  CHECK(preserves(Operation::constant(N3, 1, 0), r20));
  CHECK(oracle::naive_preserves(Operation::constant(N3, 1, 0), r20));

  CHECK_THROWS_AS(preserves(Operation::identity(N2), r20), std::invalid_argument);
}

TEST_CASE("empty relation is preserved vacuously") {
  const Relation empty(N3, 2);
  CHECK(preserves(Operation::constant(N3, 2, 1), empty));
  CHECK(oracle::naive_preserves(Operation::constant(N3, 2, 1), empty));
}

TEST_CASE("preserves agrees with the naive oracle") {
  // exhaustively at n=2 over arity <= 2 operations and relations
  std::vector<Operation> ops2;
  for (int k = 1; k <= 2; ++k) {
    auto all = oracle::naive_pol(N2, std::vector<Relation>{}, k);
    ops2.insert(ops2.end(), all.begin(), all.end());
  }
  std::vector<Relation> rels2;
  for (int m = 1; m <= 2; ++m) {
    const std::size_t cells = checked_power(2, m);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << cells); ++mask) {
      Relation rho(N2, m);
      for (std::size_t c = 0; c < cells; ++c)
        if ((mask >> c) & 1u) rho.insert_code(c);
      rels2.push_back(std::move(rho));
    }
  }
  for (const Operation& f : ops2)
    for (const Relation& rho : rels2) CHECK(preserves(f, rho) == oracle::naive_preserves(f, rho));

  // at n=3: all unary operations against a dense deterministic sample of
  // relations, plus sampled binary operations
  auto rng = oracle::seeded_rng(202);
  std::vector<Relation> rels3;
  for (std::uint64_t mask = 0; mask < 8; ++mask) {
    Relation rho(N3, 1);
    for (std::size_t c = 0; c < 3; ++c)
      if ((mask >> c) & 1u) rho.insert_code(c);
    rels3.push_back(std::move(rho));
  }
  for (int trial = 0; trial < 40; ++trial) rels3.push_back(oracle::random_relation(N3, 2, rng));
  const auto unary3 = oracle::naive_pol(N3, std::vector<Relation>{}, 1);
  for (const Operation& f : unary3)
    for (const Relation& rho : rels3) CHECK(preserves(f, rho) == oracle::naive_preserves(f, rho));
  for (int trial = 0; trial < 60; ++trial) {
    const Operation f = oracle::random_operation(N3, 2, rng);
    for (const Relation& rho : rels3) CHECK(preserves(f, rho) == oracle::naive_preserves(f, rho));
  }
}

TEST_CASE("pol_k: trivial relation constrains nothing") {
  const std::vector<Relation> q{Relation::full(N2, 2)};
  CHECK(pol_k(N2, q, 1).size() == 4);
}

TEST_CASE("pol_k of the binary clausal relation at n=2 is the monotone unary clone") {
  const std::vector<Relation> q{clausal_rel(1, 0, N2)};
  const auto ops = pol_k(N2, q, 1);
  REQUIRE(ops.size() == 3);
  CHECK(ops[0].table() == std::vector<int>{0, 0});  // constant 0
  CHECK(ops[1].table() == std::vector<int>{0, 1});  // identity
  CHECK(ops[2].table() == std::vector<int>{1, 1});  // constant 1
}

TEST_CASE("pol_1 of R(1,1) at n=3 has 16 members (regression, oracle-derived)") {
  const std::vector<Relation> q{clausal_rel(1, 1, N3)};
  const auto ops = pol_k(N3, q, 1);
  const auto reference = oracle::naive_pol(N3, q, 1);
  CHECK(ops == reference);
  CHECK(ops.size() == 16);
}

TEST_CASE("pruned pol_k equals the unpruned filter") {
  // every single-relation set at n=2, k <= 2
  for (int m = 1; m <= 2; ++m) {
    const std::size_t cells = checked_power(2, m);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << cells); ++mask) {
      Relation rho(N2, m);
      for (std::size_t c = 0; c < cells; ++c)
        if ((mask >> c) & 1u) rho.insert_code(c);
      const std::vector<Relation> q{rho};
      for (int k = 1; k <= 2; ++k) CHECK(pol_k(N2, q, k) == oracle::naive_pol(N2, q, k));
    }
  }
  // the clausal relations and a deterministic sample at n=3
  auto rng = oracle::seeded_rng(7);
  std::vector<Relation> pool;
  for (int a = 1; a <= 2; ++a)
    for (int b = 0; b <= 1; ++b) pool.push_back(clausal_rel(a, b, N3));
  for (int trial = 0; trial < 6; ++trial) pool.push_back(oracle::random_relation(N3, 2, rng));
  for (const Relation& rho : pool) {
    const std::vector<Relation> q{rho};
    CHECK(pol_k(N3, q, 1) == oracle::naive_pol(N3, q, 1));
    CHECK(pol_k(N3, q, 2) == oracle::naive_pol(N3, q, 2));
  }
}

TEST_CASE("inv_m examples") {
  CHECK(inv_m(N2, std::vector<Operation>{}, 1).size() == 4);

  // a single constant: the empty set (vacuously), {0} and the full set
  const std::vector<Operation> c0{Operation::constant(N2, 1, 0)};
  const auto inv_c0 = inv_m(N2, c0, 1);
  REQUIRE(inv_c0.size() == 3);
  CHECK(inv_c0[0].empty());
  CHECK(inv_c0[1].member_codes() == std::vector<std::size_t>{0});
  CHECK(inv_c0[2].is_full());
  CHECK(inv_c0 == oracle::naive_inv(N2, c0, 1));

  // all unary operations leave exactly the binary diagonal relations
  const auto all_unary = oracle::naive_pol(N2, std::vector<Relation>{}, 1);
  const auto invariant = inv_m(N2, all_unary, 2);
  REQUIRE(invariant.size() == 3);
  CHECK(invariant[0].empty());
  CHECK(invariant[1] == Relation::diagonal(N2));
  CHECK(invariant[2] == Relation::full(N2, 2));
  CHECK(invariant == oracle::naive_inv(N2, all_unary, 2));
}

TEST_CASE("Galois round trip: inv_m output is preserved by all inputs") {
  auto rng = oracle::seeded_rng(31);
  for (int n = 2; n <= 3; ++n) {
    const DomainSize dom(n);
    std::vector<Operation> fs;
    for (int trial = 0; trial < 3; ++trial) {
      fs.push_back(oracle::random_operation(dom, 1, rng));
      fs.push_back(oracle::random_operation(dom, 2, rng));
    }
    for (int m = 1; m <= 2; ++m)
      for (const Relation& rho : inv_m(dom, fs, m))
        for (const Operation& f : fs) CHECK(preserves(f, rho));
  }
}

TEST_CASE("relation inverse") {
  CHECK(relation_inverse(Relation::diagonal(N3)) == Relation::diagonal(N3));

  Relation single(N3, 2);
  single.insert(Tuple{0, 2});
  Relation swapped(N3, 2);
  swapped.insert(Tuple{2, 0});
  CHECK(relation_inverse(single) == swapped);

  Relation r11 = clausal_rel(1, 1, N3);  // everything but (0,2)
  Relation expected = Relation::full(N3, 2);
  expected.erase_code(encode_tuple(Tuple{2, 0}, N3));
  CHECK(relation_inverse(r11) == expected);

  CHECK_THROWS_AS(relation_inverse(Relation(N3, 1)), std::invalid_argument);
}

TEST_CASE("intersection and diagonal restriction") {
  CHECK(diagonal_restriction(Relation::diagonal(N3)) == Relation::full(N3, 1));

  const Relation r20 = clausal_rel(2, 0, N3);
  const Relation meet = relation_intersect(r20, relation_inverse(r20));
  CHECK(meet == Relation::from_tuples(N3, 2, {{0, 0}, {2, 2}}));
  CHECK(diagonal_restriction(meet) == Relation::from_tuples(N3, 1, {{0}, {2}}));

  CHECK_THROWS_AS(relation_intersect(r20, Relation(N3, 1)), std::invalid_argument);
}

TEST_CASE("triviality of low-arity relations") {
  CHECK(is_trivial(Relation::full(N3, 2)));
  CHECK(is_trivial(Relation::diagonal(DomainSize(4))));
  CHECK(is_trivial(Relation(N3, 1)));
  CHECK(is_trivial(Relation::full(N3, 1)));
  CHECK_FALSE(is_trivial(Relation::from_tuples(N3, 1, {{0}, {2}})));
  CHECK_FALSE(is_trivial(clausal_rel(1, 1, N3)));
  CHECK_THROWS_AS(is_trivial(Relation(N3, 3)), std::invalid_argument);
}

TEST_CASE("enumeration budgets refuse explosive searches") {
  const std::vector<Relation> q3{clausal_rel(1, 1, N3)};
  CHECK_THROWS_AS(pol_k(N3, q3, 3), BudgetError);
  const DomainSize n4(4);
  const std::vector<Relation> q4{build_clausal(ClausalSpec(n4, {1}, {0}))};
  CHECK_THROWS_AS(pol_k(n4, q4, 2), BudgetError);
  CHECK_THROWS_AS(inv_m(N3, std::vector<Operation>{Operation::identity(N3)}, 3), BudgetError);

  // n=2, k=4 stays inside the default budget (16 bits)
  std::size_t count = 0;
  for_each_pol_k(N2, std::vector<Relation>{Relation::full(N2, 2)}, 4,
                 [&](const Operation&) {
                   ++count;
                   return true;
                 });
  CHECK(count == 65536);
}
