#include "cclone/operation.hpp"

#include <algorithm>

namespace cclone {

Operation::Operation(DomainSize n, int arity, std::vector<int> table)
    : n_(n), arity_(arity), table_(std::move(table)) {
  if (arity < 1) throw std::invalid_argument("operation arity must be >= 1");
  const std::size_t cells = checked_power(n.value(), arity);
  if (table_.size() != cells)
    throw std::invalid_argument("operation table must have n^arity entries");
  for (int v : table_) check_element(v, n);
}

Operation Operation::projection(DomainSize n, int arity, int coordinate) {
  if (coordinate < 0 || coordinate >= arity)
    throw std::invalid_argument("projection coordinate out of range");
  const std::size_t cells = checked_power(n.value(), arity);
  std::vector<int> table(cells);
  for (std::size_t c = 0; c < cells; ++c)
    table[c] = decode_tuple(c, arity, n)[static_cast<std::size_t>(coordinate)];
  return Operation(n, arity, std::move(table));
}

Operation Operation::constant(DomainSize n, int arity, int value) {
  check_element(value, n);
  const std::size_t cells = checked_power(n.value(), arity);
  return Operation(n, arity, std::vector<int>(cells, value));
}

Operation Operation::identity(DomainSize n) {
  std::vector<int> table(static_cast<std::size_t>(n.value()));
  for (int x = 0; x < n.value(); ++x) table[static_cast<std::size_t>(x)] = x;
  return Operation(n, 1, std::move(table));
}

Operation Operation::unary(DomainSize n, std::vector<int> values) {
  return Operation(n, 1, std::move(values));
}

Operation Operation::transposition(DomainSize n, int x, int y) {
  check_element(x, n);
  check_element(y, n);
  std::vector<int> table(static_cast<std::size_t>(n.value()));
  for (int v = 0; v < n.value(); ++v) table[static_cast<std::size_t>(v)] = v;
  std::swap(table[static_cast<std::size_t>(x)], table[static_cast<std::size_t>(y)]);
  return Operation(n, 1, std::move(table));
}

int Operation::apply(std::span<const int> args) const {
  if (static_cast<int>(args.size()) != arity_)
    throw std::invalid_argument("argument count does not match operation arity");
  return table_[encode_tuple(args, n_)];
}

bool Operation::image_within(int lo, int hi) const {
  return std::all_of(table_.begin(), table_.end(),
                     [&](int v) { return lo <= v && v <= hi; });
}

bool Operation::maps_range_into_itself(int lo, int hi) const {
  if (arity_ != 1)
    throw std::invalid_argument("maps_range_into_itself: unary operations only");
  for (int x = std::max(lo, 0); x <= std::min(hi, n_.value() - 1); ++x) {
    const int v = table_[static_cast<std::size_t>(x)];
    if (v < lo || v > hi) return false;
  }
  return true;
}

bool Operation::operator<(const Operation& other) const {
  if (arity_ != other.arity_) return arity_ < other.arity_;
  return table_ < other.table_;
}

Tuple apply_componentwise(const Operation& f, std::span<const Tuple> columns) {
  if (static_cast<int>(columns.size()) != f.arity())
    throw std::invalid_argument("apply_componentwise: need arity(f) columns");
  const std::size_t m = columns.empty() ? 0 : columns[0].size();
  for (const Tuple& col : columns)
    if (col.size() != m)
      throw std::invalid_argument("apply_componentwise: columns differ in length");
  Tuple image(m);
  std::vector<int> args(columns.size());
  for (std::size_t row = 0; row < m; ++row) {
    for (std::size_t j = 0; j < columns.size(); ++j) args[j] = columns[j][row];
    image[row] = f.apply(args);
  }
  return image;
}

}  // namespace cclone
