#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "cclone/domain.hpp"

namespace cclone {

using Tuple = std::vector<int>;

// n^exp with an overflow/size guard (relations are desk-scale by design).
std::size_t checked_power(int base, int exp, std::size_t limit = std::size_t{1} << 26);

// Mixed-radix tuple code, coordinate 0 most significant:
//   code(t) = sum_i t[i] * n^(m-1-i)
std::size_t encode_tuple(std::span<const int> t, DomainSize n);
Tuple decode_tuple(std::size_t code, int arity, DomainSize n);

// An m-ary relation on D as a tuple-code-indexed membership bitmap.
// Immutable once built; safe to share across threads.
class Relation {
 public:
  Relation(DomainSize n, int arity);  // empty relation
  static Relation full(DomainSize n, int arity);
  static Relation diagonal(DomainSize n);  // binary {(x,x)}
  static Relation from_tuples(DomainSize n, int arity, const std::vector<Tuple>& tuples);
  static Relation from_codes(DomainSize n, int arity, const std::vector<std::size_t>& codes);

  DomainSize domain() const { return n_; }
  int arity() const { return arity_; }
  std::size_t cell_count() const { return cells_; }  // n^arity
  std::size_t size() const;                          // number of members
  bool empty() const { return size() == 0; }
  bool is_full() const { return size() == cells_; }

  bool contains_code(std::size_t code) const {
    return (bits_[code >> 6] >> (code & 63)) & 1u;
  }
  bool contains(std::span<const int> t) const;

  void insert_code(std::size_t code);
  void erase_code(std::size_t code);
  void insert(std::span<const int> t);

  std::vector<std::size_t> member_codes() const;  // ascending
  std::vector<Tuple> members() const;             // ascending code order

  friend bool operator==(const Relation&, const Relation&) = default;
  // Total order for deterministic sorting/deduplication: by arity, then by
  // the membership bitmap read from tuple code 0 upwards.
  bool operator<(const Relation& other) const;

 private:
  DomainSize n_;
  int arity_;
  std::size_t cells_;
  std::vector<std::uint64_t> bits_;
};

// {(y,x) : (x,y) in rho}; arity 2 only.
Relation relation_inverse(const Relation& rho);

// Set intersection of two relations of equal arity over the same domain.
Relation relation_intersect(const Relation& a, const Relation& b);

// {x : (x,x) in rho}; arity 2 -> arity 1.
Relation diagonal_restriction(const Relation& rho);

// Trivial (= preserved by every operation). Unary: empty or D.
// Binary: the diagonal or the full relation. Arity >= 3 is unsupported.
bool is_trivial(const Relation& rho);

// The unary relation {lo, ..., hi} (empty when lo > hi).
Relation unary_range(int lo, int hi, DomainSize n);

}  // namespace cclone
