#pragma once

#include <span>
#include <vector>

#include "cclone/domain.hpp"
#include "cclone/relation.hpp"

namespace cclone {

// A total k-ary operation D^k -> D as a flat value table indexed by the
// mixed-radix tuple code of the argument tuple. Immutable once built.
class Operation {
 public:
  Operation(DomainSize n, int arity, std::vector<int> table);

  static Operation projection(DomainSize n, int arity, int coordinate);
  static Operation constant(DomainSize n, int arity, int value);
  static Operation identity(DomainSize n);
  static Operation unary(DomainSize n, std::vector<int> values);
  static Operation transposition(DomainSize n, int x, int y);

  DomainSize domain() const { return n_; }
  int arity() const { return arity_; }
  const std::vector<int>& table() const { return table_; }
  std::size_t cell_count() const { return table_.size(); }

  int value_at(std::size_t code) const { return table_[code]; }
  int apply(std::span<const int> args) const;

  // true iff every value of f lies in {lo, ..., hi}
  bool image_within(int lo, int hi) const;
  // true iff f maps {lo..hi} into itself (unary only)
  bool maps_range_into_itself(int lo, int hi) const;

  friend bool operator==(const Operation&, const Operation&) = default;
  bool operator<(const Operation& other) const;  // by arity, then table

 private:
  DomainSize n_;
  int arity_;
  std::vector<int> table_;
};

// Row-wise application: columns are k tuples of equal length m, the result is
// the m-tuple whose row i is f(columns[0][i], ..., columns[k-1][i]).
Tuple apply_componentwise(const Operation& f, std::span<const Tuple> columns);

}  // namespace cclone
