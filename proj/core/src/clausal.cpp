#include "cclone/clausal.hpp"

#include <algorithm>

#include "cclone/catalog.hpp"
#include "cclone/preserves.hpp"

namespace cclone {

ClausalSpec::ClausalSpec(DomainSize n_, std::vector<int> a_, std::vector<int> b_)
    : n(n_), a(std::move(a_)), b(std::move(b_)) {
  if (a.empty() || b.empty())
    throw std::invalid_argument("clausal spec needs p >= 1 and q >= 1");
  for (int x : a) check_element(x, n);
  for (int y : b) check_element(y, n);
}

MaxCCloneParams::MaxCCloneParams(int a_, int b_, DomainSize n_) : a(a_), b(b_), n(n_) {
  if (!is_maximal_cclone_params(a_, b_, n_))
    throw std::invalid_argument("maximal C-clone parameters need a != 0 and b != n-1");
}

bool is_maximal_cclone_params(int a, int b, DomainSize n) {
  check_element(a, n);
  check_element(b, n);
  return a != 0 && b != n.value() - 1;
}

Relation build_clausal(const ClausalSpec& spec) {
  const int arity = spec.p() + spec.q();
  Relation out(spec.n, arity);
  for (std::size_t code = 0; code < out.cell_count(); ++code) {
    const Tuple t = decode_tuple(code, arity, spec.n);
    bool holds = false;
    for (int i = 0; i < spec.p() && !holds; ++i)
      holds = t[static_cast<std::size_t>(i)] >= spec.a[static_cast<std::size_t>(i)];
    for (int j = 0; j < spec.q() && !holds; ++j)
      holds = t[static_cast<std::size_t>(spec.p() + j)] <= spec.b[static_cast<std::size_t>(j)];
    if (holds) out.insert_code(code);
  }
  return out;
}

Relation build_binary_clausal(const MaxCCloneParams& params) {
  return build_clausal(ClausalSpec(params.n, {params.a}, {params.b}));
}

namespace {

bool spec_is_tautological(const ClausalSpec& spec) {
  return std::any_of(spec.a.begin(), spec.a.end(), [](int x) { return x == 0; }) ||
         std::any_of(spec.b.begin(), spec.b.end(),
                     [&](int y) { return y == spec.n.value() - 1; });
}

}  // namespace

std::vector<MaxCCloneParams> dominating_params(std::span<const ClausalSpec> q) {
  std::vector<MaxCCloneParams> out;
  for (const ClausalSpec& spec : q) {
    if (spec_is_tautological(spec)) continue;
    const int a = *std::min_element(spec.a.begin(), spec.a.end());
    const int b = *std::max_element(spec.b.begin(), spec.b.end());
    out.emplace_back(a, b, spec.n);
  }
  return out;
}

bool is_complete(std::span<const ClausalSpec> q) {
  return std::all_of(q.begin(), q.end(), spec_is_tautological);
}

std::vector<Relation> obstruction_relations(DomainSize n) {
  if (n.value() < 3)
    throw std::invalid_argument("obstruction_relations: needs n >= 3");
  std::vector<Relation> out;
  for (int b = 0; b < n.value() - 1; ++b) out.push_back(two_block_equivalence(b, n));
  for (int a = 1; a < n.value() - 1; ++a)
    for (int b = a; b < n.value() - 1; ++b) out.push_back(sigma(a, b, n));
  for (int b = 0; b <= n.value() - 3; ++b)
    for (int k = 2; k <= n.value() - 1 - b; ++k)
      out.push_back(unary_interval_union(b + k, b, n).relation);
  return out;
}

std::vector<ObstructionStatus> corollary_hypotheses_hold(std::span<const Operation> f,
                                                         DomainSize n) {
  std::vector<ObstructionStatus> out;
  for (Relation& rho : obstruction_relations(n)) {
    bool violated = false;
    for (const Operation& op : f)
      if (!preserves(op, rho)) {
        violated = true;
        break;
      }
    out.push_back(ObstructionStatus{std::move(rho), violated});
  }
  return out;
}

}  // namespace cclone
