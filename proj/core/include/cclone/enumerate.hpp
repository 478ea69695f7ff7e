#pragma once

#include <functional>
#include <span>
#include <vector>

#include "cclone/operation.hpp"
#include "cclone/preserves.hpp"
#include "cclone/relation.hpp"

namespace cclone {

// Hard guard on enumeration sizes: a search is admitted only when the log2 of
// its candidate space stays within max_bits (default 2^24 candidate tables).
struct EnumerationBudget {
  double max_bits = 24.0;
};

double pol_search_bits(DomainSize n, int k);  // n^k * log2(n)
double inv_search_bits(DomainSize n, int m);  // n^m

// All k-ary operations preserving every relation in q, in ascending table
// order. Enumeration prunes on table prefixes: a partial table that already
// violates some relation on fully assigned column choices is cut.
// The visitor returns false to stop early.
void for_each_pol_k(DomainSize n, std::span<const Relation> q, int k,
                    const std::function<bool(const Operation&)>& visit,
                    const EnumerationBudget& budget = {});

std::vector<Operation> pol_k(DomainSize n, std::span<const Relation> q, int k,
                             const EnumerationBudget& budget = {});

// All m-ary relations preserved by every operation in f, in ascending bitmap
// order (2^(n^m) candidates).
std::vector<Relation> inv_m(DomainSize n, std::span<const Operation> f, int m,
                            const EnumerationBudget& budget = {});

}  // namespace cclone
