#pragma once

#include <span>
#include <vector>

#include "cclone/operation.hpp"
#include "cclone/relation.hpp"

namespace cclone {

// Parameters a in D^p, b in D^q of the clausal relation of arity p+q whose
// members are the tuples (x, y) satisfying
//   (x_1 >= a_1) or ... or (x_p >= a_p) or (y_1 <= b_1) or ... or (y_q <= b_q).
struct ClausalSpec {
  ClausalSpec(DomainSize n, std::vector<int> a, std::vector<int> b);

  DomainSize n;
  std::vector<int> a;
  std::vector<int> b;

  int p() const { return static_cast<int>(a.size()); }
  int q() const { return static_cast<int>(b.size()); }
  friend bool operator==(const ClausalSpec&, const ClausalSpec&) = default;
};

// Parameters of a binary clausal relation R(a,b) = {(x,y) : x >= a or y <= b}
// describing a maximal C-clone; requires a != 0 and b != n-1, which is exactly
// the condition for Pol(R(a,b)) to be a co-atom of the C-clone lattice.
struct MaxCCloneParams {
  MaxCCloneParams(int a, int b, DomainSize n);

  int a;
  int b;
  DomainSize n;
  friend bool operator==(const MaxCCloneParams&, const MaxCCloneParams&) = default;
};

// true iff a != 0 and b != n-1; throws on out-of-range inputs.
bool is_maximal_cclone_params(int a, int b, DomainSize n);

Relation build_clausal(const ClausalSpec& spec);
Relation build_binary_clausal(const MaxCCloneParams& params);

// For each spec whose entries satisfy a_i > 0 and b_j < n-1 throughout, the
// dominating parameters (min a_i, max b_j); other specs are full relations and
// contribute nothing. Empty result means Pol(Q) is the full operation clone.
std::vector<MaxCCloneParams> dominating_params(std::span<const ClausalSpec> q);

// Exact completeness test: Pol(Q) contains every operation iff every spec in
// q has some a_i = 0 or some b_j = n-1 (each such clause is a tautology).
bool is_complete(std::span<const ClausalSpec> q);

// The obstruction list of the completeness criterion, for n >= 3:
//   two-block equivalences theta_b            (0 <= b < n-1),
//   binary central sigma_{a,b}                (0 < a <= b < n-1),
//   unary {0..b} + {b+k..n-1}                 (0 <= b <= n-3, 2 <= k <= n-1-b).
std::vector<Relation> obstruction_relations(DomainSize n);

struct ObstructionStatus {
  Relation relation;
  bool violated;  // some f in F fails to preserve it
};

// For each obstruction, whether some operation in f violates it. When every
// obstruction is violated, Pol of the underlying clausal set is everything.
std::vector<ObstructionStatus> corollary_hypotheses_hold(std::span<const Operation> f,
                                                         DomainSize n);

}  // namespace cclone
