#include "cclone/relation.hpp"

#include <algorithm>
#include <bit>

namespace cclone {

std::size_t checked_power(int base, int exp, std::size_t limit) {
  if (base < 1 || exp < 0) throw std::invalid_argument("checked_power: bad arguments");
  std::size_t r = 1;
  for (int i = 0; i < exp; ++i) {
    if (r > limit / static_cast<std::size_t>(base))
      throw BudgetError("table of size " + std::to_string(base) + "^" +
                        std::to_string(exp) + " exceeds the size limit");
    r *= static_cast<std::size_t>(base);
  }
  return r;
}

std::size_t encode_tuple(std::span<const int> t, DomainSize n) {
  std::size_t code = 0;
  for (int x : t) {
    check_element(x, n);
    code = code * static_cast<std::size_t>(n.value()) + static_cast<std::size_t>(x);
  }
  return code;
}

Tuple decode_tuple(std::size_t code, int arity, DomainSize n) {
  if (arity < 1) throw std::invalid_argument("decode_tuple: arity must be >= 1");
  Tuple t(static_cast<std::size_t>(arity));
  for (int i = arity - 1; i >= 0; --i) {
    t[static_cast<std::size_t>(i)] = static_cast<int>(code % static_cast<std::size_t>(n.value()));
    code /= static_cast<std::size_t>(n.value());
  }
  if (code != 0) throw std::invalid_argument("decode_tuple: code out of range");
  return t;
}

Relation::Relation(DomainSize n, int arity)
    : n_(n), arity_(arity), cells_(checked_power(n.value(), arity)) {
  if (arity < 1) throw std::invalid_argument("relation arity must be >= 1");
  bits_.assign((cells_ + 63) / 64, 0);
}

Relation Relation::full(DomainSize n, int arity) {
  Relation r(n, arity);
  for (std::size_t c = 0; c < r.cells_; ++c) r.insert_code(c);
  return r;
}

Relation Relation::diagonal(DomainSize n) {
  Relation r(n, 2);
  for (int x = 0; x < n.value(); ++x) {
    const int t[2] = {x, x};
    r.insert(t);
  }
  return r;
}

Relation Relation::from_tuples(DomainSize n, int arity, const std::vector<Tuple>& tuples) {
  Relation r(n, arity);
  for (const Tuple& t : tuples) r.insert(t);
  return r;
}

Relation Relation::from_codes(DomainSize n, int arity, const std::vector<std::size_t>& codes) {
  Relation r(n, arity);
  for (std::size_t c : codes) r.insert_code(c);
  return r;
}

std::size_t Relation::size() const {
  std::size_t s = 0;
  for (std::uint64_t w : bits_) s += static_cast<std::size_t>(std::popcount(w));
  return s;
}

bool Relation::contains(std::span<const int> t) const {
  if (static_cast<int>(t.size()) != arity_)
    throw std::invalid_argument("tuple length does not match relation arity");
  return contains_code(encode_tuple(t, n_));
}

void Relation::insert_code(std::size_t code) {
  if (code >= cells_) throw std::invalid_argument("tuple code out of range");
  bits_[code >> 6] |= std::uint64_t{1} << (code & 63);
}

void Relation::erase_code(std::size_t code) {
  if (code >= cells_) throw std::invalid_argument("tuple code out of range");
  bits_[code >> 6] &= ~(std::uint64_t{1} << (code & 63));
}

void Relation::insert(std::span<const int> t) {
  if (static_cast<int>(t.size()) != arity_)
    throw std::invalid_argument("tuple length does not match relation arity");
  insert_code(encode_tuple(t, n_));
}

std::vector<std::size_t> Relation::member_codes() const {
  std::vector<std::size_t> out;
  out.reserve(size());
  for (std::size_t c = 0; c < cells_; ++c)
    if (contains_code(c)) out.push_back(c);
  return out;
}

std::vector<Tuple> Relation::members() const {
  std::vector<Tuple> out;
  out.reserve(size());
  for (std::size_t c = 0; c < cells_; ++c)
    if (contains_code(c)) out.push_back(decode_tuple(c, arity_, n_));
  return out;
}

bool Relation::operator<(const Relation& other) const {
  if (arity_ != other.arity_) return arity_ < other.arity_;
  if (n_.value() != other.n_.value()) return n_.value() < other.n_.value();
  for (std::size_t c = 0; c < cells_; ++c) {
    const bool a = contains_code(c), b = other.contains_code(c);
    if (a != b) return !a;
  }
  return false;
}

Relation relation_inverse(const Relation& rho) {
  if (rho.arity() != 2) throw std::invalid_argument("relation_inverse: arity must be 2");
  const int n = rho.domain().value();
  Relation out(rho.domain(), 2);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const std::size_t xy = static_cast<std::size_t>(x) * static_cast<std::size_t>(n) +
                             static_cast<std::size_t>(y);
      if (rho.contains_code(xy))
        out.insert_code(static_cast<std::size_t>(y) * static_cast<std::size_t>(n) +
                        static_cast<std::size_t>(x));
    }
  return out;
}

Relation relation_intersect(const Relation& a, const Relation& b) {
  if (a.arity() != b.arity()) throw std::invalid_argument("relation_intersect: arity mismatch");
  if (!(a.domain() == b.domain()))
    throw std::invalid_argument("relation_intersect: domain size mismatch");
  Relation out(a.domain(), a.arity());
  for (std::size_t c = 0; c < a.cell_count(); ++c)
    if (a.contains_code(c) && b.contains_code(c)) out.insert_code(c);
  return out;
}

Relation diagonal_restriction(const Relation& rho) {
  if (rho.arity() != 2) throw std::invalid_argument("diagonal_restriction: arity must be 2");
  const int n = rho.domain().value();
  Relation out(rho.domain(), 1);
  for (int x = 0; x < n; ++x) {
    const int t[2] = {x, x};
    if (rho.contains(t)) out.insert_code(static_cast<std::size_t>(x));
  }
  return out;
}

bool is_trivial(const Relation& rho) {
  switch (rho.arity()) {
    case 1:
      return rho.empty() || rho.is_full();
    case 2:
      return rho.is_full() || rho == Relation::diagonal(rho.domain());
    default:
      throw std::invalid_argument(
          "is_trivial: diagonal recognition is only supported for arity <= 2");
  }
}

Relation unary_range(int lo, int hi, DomainSize n) {
  Relation out(n, 1);
  if (lo > hi) return out;
  check_element(lo, n);
  check_element(hi, n);
  for (int x = lo; x <= hi; ++x) out.insert_code(static_cast<std::size_t>(x));
  return out;
}

}  // namespace cclone
