#include "cclone/enumerate.hpp"

#include <cmath>
#include <cstdio>
#include <string>

namespace cclone {

double pol_search_bits(DomainSize n, int k) {
  return std::pow(static_cast<double>(n.value()), k) * std::log2(static_cast<double>(n.value()));
}

double inv_search_bits(DomainSize n, int m) {
  return std::pow(static_cast<double>(n.value()), m);
}

namespace {

std::string bits_str(double bits) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f", bits);
  return buf;
}

void require_budget(double bits, const EnumerationBudget& budget, const char* what) {
  if (bits > budget.max_bits)
    throw BudgetError(std::string(what) + " needs 2^" + bits_str(bits) +
                      " candidates, over the budget of 2^" + bits_str(budget.max_bits));
}

// Per-relation pruning plan: every choice of k members, keyed by the largest
// argument-tuple code its image depends on. Once that cell of the table is
// assigned, the choice is checkable.
struct Plan {
  const Relation* rho;
  int m;
  // row codes of all choices, m entries per choice, grouped by key cell
  std::vector<std::size_t> rows;
  std::vector<std::size_t> bucket_begin;  // per cell, offsets in units of choices
};

Plan build_plan(const Relation& rho, DomainSize n, int k, std::size_t cells) {
  Plan plan;
  plan.rho = &rho;
  plan.m = rho.arity();
  const std::size_t nn = static_cast<std::size_t>(n.value());
  const int m = plan.m;

  const std::vector<std::size_t> members = rho.member_codes();
  std::vector<std::size_t> digits(members.size() * static_cast<std::size_t>(m));
  for (std::size_t i = 0; i < members.size(); ++i) {
    const Tuple t = decode_tuple(members[i], m, n);
    for (int r = 0; r < m; ++r)
      digits[i * static_cast<std::size_t>(m) + static_cast<std::size_t>(r)] =
          static_cast<std::size_t>(t[static_cast<std::size_t>(r)]);
  }

  std::size_t choice_count = 1;
  for (int j = 0; j < k; ++j) {
    if (members.size() != 0 && choice_count > (std::size_t{1} << 26) / members.size())
      throw BudgetError("pol enumeration: too many column choices to precompute");
    choice_count *= members.size();
  }
  if (members.empty()) choice_count = 0;

  std::vector<std::size_t> keys(choice_count);
  std::vector<std::size_t> row_codes(choice_count * static_cast<std::size_t>(m));
  std::vector<std::size_t> pick(static_cast<std::size_t>(k), 0);
  for (std::size_t ci = 0; ci < choice_count; ++ci) {
    std::size_t key = 0;
    for (int r = 0; r < m; ++r) {
      std::size_t arg_code = 0;
      for (int j = 0; j < k; ++j)
        arg_code = arg_code * nn + digits[pick[static_cast<std::size_t>(j)] *
                                              static_cast<std::size_t>(m) +
                                          static_cast<std::size_t>(r)];
      row_codes[ci * static_cast<std::size_t>(m) + static_cast<std::size_t>(r)] = arg_code;
      if (arg_code > key) key = arg_code;
    }
    keys[ci] = key;
    int j = k - 1;
    while (j >= 0 && pick[static_cast<std::size_t>(j)] + 1 == members.size()) {
      pick[static_cast<std::size_t>(j)] = 0;
      --j;
    }
    if (j >= 0) ++pick[static_cast<std::size_t>(j)];
  }

  std::vector<std::size_t> counts(cells + 1, 0);
  for (std::size_t ci = 0; ci < choice_count; ++ci) ++counts[keys[ci] + 1];
  plan.bucket_begin.assign(cells + 1, 0);
  for (std::size_t c = 1; c <= cells; ++c)
    plan.bucket_begin[c] = plan.bucket_begin[c - 1] + counts[c];
  plan.rows.assign(choice_count * static_cast<std::size_t>(m), 0);
  std::vector<std::size_t> cursor(plan.bucket_begin.begin(), plan.bucket_begin.end() - 1);
  for (std::size_t ci = 0; ci < choice_count; ++ci) {
    const std::size_t slot = cursor[keys[ci]]++;
    for (int r = 0; r < m; ++r)
      plan.rows[slot * static_cast<std::size_t>(m) + static_cast<std::size_t>(r)] =
          row_codes[ci * static_cast<std::size_t>(m) + static_cast<std::size_t>(r)];
  }
  return plan;
}

struct PolSearch {
  DomainSize n;
  int k;
  std::size_t cells;
  std::vector<Plan> plans;
  std::vector<int> table;
  const std::function<bool(const Operation&)>* visit;
  bool stopped = false;

  bool cell_consistent(std::size_t c) const {
    const std::size_t nn = static_cast<std::size_t>(n.value());
    for (const Plan& plan : plans) {
      const std::size_t m = static_cast<std::size_t>(plan.m);
      for (std::size_t ci = plan.bucket_begin[c]; ci < plan.bucket_begin[c + 1]; ++ci) {
        std::size_t image_code = 0;
        for (std::size_t r = 0; r < m; ++r)
          image_code = image_code * nn +
                       static_cast<std::size_t>(table[plan.rows[ci * m + r]]);
        if (!plan.rho->contains_code(image_code)) return false;
      }
    }
    return true;
  }

  void run(std::size_t c) {
    if (stopped) return;
    if (c == cells) {
      if (!(*visit)(Operation(n, k, table))) stopped = true;
      return;
    }
    for (int v = 0; v < n.value(); ++v) {
      table[c] = v;
      if (cell_consistent(c)) {
        run(c + 1);
        if (stopped) return;
      }
    }
  }
};

}  // namespace

void for_each_pol_k(DomainSize n, std::span<const Relation> q, int k,
                    const std::function<bool(const Operation&)>& visit,
                    const EnumerationBudget& budget) {
  if (k < 1) throw std::invalid_argument("pol_k: arity must be >= 1");
  require_budget(pol_search_bits(n, k), budget, "pol enumeration");
  const std::size_t cells = checked_power(n.value(), k);

  PolSearch search{n, k, cells, {}, std::vector<int>(cells, 0), &visit};
  search.plans.reserve(q.size());
  for (const Relation& rho : q) {
    if (!(rho.domain() == n)) throw std::invalid_argument("pol_k: domain size mismatch");
    search.plans.push_back(build_plan(rho, n, k, cells));
  }
  search.run(0);
}

std::vector<Operation> pol_k(DomainSize n, std::span<const Relation> q, int k,
                             const EnumerationBudget& budget) {
  std::vector<Operation> out;
  for_each_pol_k(
      n, q, k,
      [&](const Operation& f) {
        out.push_back(f);
        return true;
      },
      budget);
  return out;
}

std::vector<Relation> inv_m(DomainSize n, std::span<const Operation> f, int m,
                            const EnumerationBudget& budget) {
  if (m < 1) throw std::invalid_argument("inv_m: arity must be >= 1");
  require_budget(inv_search_bits(n, m), budget, "inv enumeration");
  const std::size_t cells = checked_power(n.value(), m);
  if (cells >= 63) throw BudgetError("inv enumeration: relation bitmap too wide");

  for (const Operation& op : f)
    if (!(op.domain() == n)) throw std::invalid_argument("inv_m: domain size mismatch");

  std::vector<Relation> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << cells); ++mask) {
    Relation rho(n, m);
    for (std::size_t c = 0; c < cells; ++c)
      if ((mask >> c) & 1u) rho.insert_code(c);
    bool ok = true;
    for (const Operation& op : f)
      if (!preserves(op, rho)) {
        ok = false;
        break;
      }
    if (ok) out.push_back(std::move(rho));
  }
  return out;
}

}  // namespace cclone
