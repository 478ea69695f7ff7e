#include "cclone/preserves.hpp"

namespace cclone {

namespace {

// Odometer over all choices of k members (with repetition), ascending in
// lexicographic column order. Returns the first violating choice found,
// which is therefore the lexicographically least one.
std::optional<Counterexample> scan(const Operation& f, const Relation& rho) {
  if (!(f.domain() == rho.domain()))
    throw std::invalid_argument("preserves: domain size mismatch");
  const std::size_t n = static_cast<std::size_t>(f.domain().value());
  const int k = f.arity();
  const int m = rho.arity();

  const std::vector<std::size_t> members = rho.member_codes();
  if (members.empty()) return std::nullopt;  // vacuously preserved

  // digits[i*m + r] = coordinate r of member i
  std::vector<std::size_t> digits(members.size() * static_cast<std::size_t>(m));
  for (std::size_t i = 0; i < members.size(); ++i) {
    const Tuple t = decode_tuple(members[i], m, rho.domain());
    for (int r = 0; r < m; ++r)
      digits[i * static_cast<std::size_t>(m) + static_cast<std::size_t>(r)] =
          static_cast<std::size_t>(t[static_cast<std::size_t>(r)]);
  }

  std::vector<std::size_t> pick(static_cast<std::size_t>(k), 0);
  Tuple image(static_cast<std::size_t>(m));
  const auto& table = f.table();

  for (;;) {
    std::size_t image_code = 0;
    for (int r = 0; r < m; ++r) {
      std::size_t arg_code = 0;
      for (int j = 0; j < k; ++j)
        arg_code = arg_code * n + digits[pick[static_cast<std::size_t>(j)] *
                                             static_cast<std::size_t>(m) +
                                         static_cast<std::size_t>(r)];
      const int v = table[arg_code];
      image[static_cast<std::size_t>(r)] = v;
      image_code = image_code * n + static_cast<std::size_t>(v);
    }

    if (!rho.contains_code(image_code)) {
      Counterexample ce;
      ce.columns.reserve(static_cast<std::size_t>(k));
      for (int j = 0; j < k; ++j)
        ce.columns.push_back(
            decode_tuple(members[pick[static_cast<std::size_t>(j)]], m, rho.domain()));
      ce.image = image;
      return ce;
    }

    int j = k - 1;
    while (j >= 0 && pick[static_cast<std::size_t>(j)] + 1 == members.size()) {
      pick[static_cast<std::size_t>(j)] = 0;
      --j;
    }
    if (j < 0) break;
    ++pick[static_cast<std::size_t>(j)];
  }
  return std::nullopt;
}

}  // namespace

bool preserves(const Operation& f, const Relation& rho) { return !scan(f, rho).has_value(); }

std::optional<Counterexample> find_violation(const Operation& f, const Relation& rho) {
  return scan(f, rho);
}

}  // namespace cclone
