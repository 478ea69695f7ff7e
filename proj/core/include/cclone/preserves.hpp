#pragma once

#include <optional>
#include <vector>

#include "cclone/operation.hpp"
#include "cclone/relation.hpp"

namespace cclone {

// A failed preservation instance: k member tuples of the relation whose
// row-wise image under the operation is not a member.
struct Counterexample {
  std::vector<Tuple> columns;
  Tuple image;
};

// f preserves rho iff every choice of arity(f) members of rho has its
// row-wise image inside rho. The empty relation is preserved vacuously.
bool preserves(const Operation& f, const Relation& rho);

// Lexicographically least violating choice of columns, or nullopt.
std::optional<Counterexample> find_violation(const Operation& f, const Relation& rho);

}  // namespace cclone
