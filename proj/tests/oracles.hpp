#pragma once

// Naive reference implementations used as independent oracles by the test
// suites. They share nothing with the library's pruned/optimized paths:
// preservation is checked by materializing member tuples and looping over all
// column choices, pol/inv by enumerating every table and filtering.

#include <random>
#include <span>
#include <vector>

#include "cclone/enumerate.hpp"

namespace oracle {

inline bool naive_preserves(const cclone::Operation& f, const cclone::Relation& rho) {
  const std::vector<cclone::Tuple> members = rho.members();
  if (members.empty()) return true;
  const int k = f.arity();
  const int m = rho.arity();
  std::vector<std::size_t> pick(static_cast<std::size_t>(k), 0);
  std::vector<int> args(static_cast<std::size_t>(k));
  cclone::Tuple image(static_cast<std::size_t>(m));
  for (;;) {
    for (int row = 0; row < m; ++row) {
      for (int j = 0; j < k; ++j)
        args[static_cast<std::size_t>(j)] =
            members[pick[static_cast<std::size_t>(j)]][static_cast<std::size_t>(row)];
      image[static_cast<std::size_t>(row)] = f.apply(args);
    }
    if (!rho.contains(image)) return false;
    int j = k - 1;
    while (j >= 0 && pick[static_cast<std::size_t>(j)] + 1 == members.size()) {
      pick[static_cast<std::size_t>(j)] = 0;
      --j;
    }
    if (j < 0) return true;
    ++pick[static_cast<std::size_t>(j)];
  }
}

// every k-ary table, ascending, filtered with naive_preserves
inline std::vector<cclone::Operation> naive_pol(cclone::DomainSize n,
                                                std::span<const cclone::Relation> q, int k) {
  std::vector<cclone::Operation> out;
  const std::size_t cells = cclone::checked_power(n.value(), k);
  std::vector<int> table(cells, 0);
  for (;;) {
    cclone::Operation f(n, k, table);
    bool ok = true;
    for (const cclone::Relation& rho : q)
      if (!naive_preserves(f, rho)) {
        ok = false;
        break;
      }
    if (ok) out.push_back(std::move(f));
    std::size_t i = cells;
    while (i > 0 && table[i - 1] == n.value() - 1) table[--i] = 0;
    if (i == 0) break;
    ++table[i - 1];
  }
  return out;
}

inline std::vector<cclone::Relation> naive_inv(cclone::DomainSize n,
                                               std::span<const cclone::Operation> fs, int m) {
  std::vector<cclone::Relation> out;
  const std::size_t cells = cclone::checked_power(n.value(), m);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << cells); ++mask) {
    cclone::Relation rho(n, m);
    for (std::size_t c = 0; c < cells; ++c)
      if ((mask >> c) & 1u) rho.insert_code(c);
    bool ok = true;
    for (const cclone::Operation& f : fs)
      if (!naive_preserves(f, rho)) {
        ok = false;
        break;
      }
    if (ok) out.push_back(std::move(rho));
  }
  return out;
}

// rank of a table in the ascending enumeration of all k-ary tables
inline std::size_t table_rank(const cclone::Operation& f) {
  std::size_t r = 0;
  for (int v : f.table())
    r = r * static_cast<std::size_t>(f.domain().value()) + static_cast<std::size_t>(v);
  return r;
}

// membership mask over all k-ary tables for pol_k({rho}), via the library
// stream (the mask consumers cross-check against naive_pol separately)
inline std::vector<bool> pol_mask(cclone::DomainSize n, const cclone::Relation& rho, int k) {
  std::size_t total = 1;  // n^(n^k) tables
  const std::size_t cells = cclone::checked_power(n.value(), k);
  for (std::size_t i = 0; i < cells; ++i) total *= static_cast<std::size_t>(n.value());
  std::vector<bool> mask(total, false);
  const std::vector<cclone::Relation> q{rho};
  cclone::for_each_pol_k(n, q, k, [&](const cclone::Operation& f) {
    mask[table_rank(f)] = true;
    return true;
  });
  return mask;
}

inline std::mt19937 seeded_rng(unsigned seed = 0x5eed) { return std::mt19937(seed); }

inline cclone::Relation random_relation(cclone::DomainSize n, int arity, std::mt19937& rng) {
  cclone::Relation rho(n, arity);
  std::bernoulli_distribution keep(0.5);
  for (std::size_t c = 0; c < rho.cell_count(); ++c)
    if (keep(rng)) rho.insert_code(c);
  return rho;
}

inline cclone::Operation random_operation(cclone::DomainSize n, int arity, std::mt19937& rng) {
  std::uniform_int_distribution<int> value(0, n.value() - 1);
  std::vector<int> table(cclone::checked_power(n.value(), arity));
  for (int& v : table) v = value(rng);
  return cclone::Operation(n, arity, std::move(table));
}

}  // namespace oracle
