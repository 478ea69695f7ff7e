#pragma once

#include <map>
#include <optional>
#include <utility>

#include "cclone/catalog.hpp"
#include "cclone/clausal.hpp"
#include "cclone/preserves.hpp"

namespace cclone {

// A checkable refutation of Pol(R(a,b)) <= Pol(target): an operation together
// with evidence that it preserves the binary clausal relation and violates
// the target. Never trusted from construction; verify_certificate recomputes
// everything through the preservation kernel.
struct WitnessCertificate {
  Operation witness;
  Relation clausal;  // the preserved R(a,b)
  Relation target;
  bool preservation_check = false;  // set true by the verified constructors
  Counterexample violation;         // against the target
};

bool verify_certificate(const WitnessCertificate& cert);

// Assemble + verify, with the violation found automatically (least choice) or
// supplied by the caller (a construction's own columns). Throws
// VerificationError when the pieces do not check out.
WitnessCertificate make_certificate(Operation witness, Relation clausal, Relation target);
WitnessCertificate make_certificate(Operation witness, Relation clausal, Relation target,
                                    std::vector<Tuple> columns);

// Unary map with all values <= b or all values >= a; such maps always
// preserve R(a,b). Re-verified.
Operation unary_image_bounded(DomainSize n, int a, int b, std::vector<int> values);

// The three necessary conditions every unary member of Pol(R(a,b)) satisfies:
//  (a) f maps {0..b} into itself, or im(f) <= {a..n-1}
//  (b) f maps {a..n-1} into itself, or im(f) <= {0..b}
//  (c) f maps {a..n-1} into itself, or f maps {0..b} into itself
struct UnaryWitnessProperties {
  bool cond_a = false;
  bool cond_b = false;
  bool cond_c = false;
  bool all() const { return cond_a && cond_b && cond_c; }
};
UnaryWitnessProperties unary_witness_properties(const Operation& f, int a, int b);

// Binary operations preserving R(a,b) by the two-sided template condition:
//   low form:  f(x,y) <= b whenever x <= b or y <= b, f(x,y) >= a when x,y >= a
//   high form: f(x,y) >= a whenever x >= a or y >= a, f(x,y) <= b when x,y <= b
// Cells constrained by one side take that side's default, cells constrained by
// both take the dominant default clamped into [a,b], unconstrained cells take
// the form's default and are the only ones overrides may touch. Re-verified.
enum class TemplateForm { Low, High };
Operation binary_template(int a, int b, DomainSize n, TemplateForm form, int low_default,
                          int high_default,
                          const std::map<std::pair<int, int>, int>& overrides = {});

// For a proper unary rho containing some x with b < x < a: the binary map
// with value a on {a..}^2, y (a non-member) at (x,x) and 0 elsewhere.
WitnessCertificate middle_element_refuter(const Relation& rho, int a, int b);

// For a - b >= 2 and reflexive non-trivial rho: g keyed on the second
// argument (0 when z <= b, n-1 when z >= a, u at (x, z) and v elsewhere in the
// middle band), violating rho on the columns (x,y), (z,z).
WitnessCertificate reflexive_refuter(const Relation& rho, int a, int b,
                                     std::pair<int, int> xy, std::pair<int, int> uv);
// convenience: least (x,y) in rho minus the diagonal, least (u,v) outside rho
WitnessCertificate reflexive_refuter(const Relation& rho, int a, int b);

// Checks that unary f maps {0..b} and {a..n-1} each into itself, which
// guarantees f preserves R(a,b); returns f after re-verification.
Operation interval_preserving_unary(const Operation& f, int a, int b);

// The six exceptional unary maps used against bounded orders whose bottom/top
// leave no transposition partner; case_id in 'a'..'f'. Each preserves the
// case's R(a,b) through its bounded image; re-verified.
Operation order_exception_witness(char case_id, DomainSize n);

// Refutes Pol(R(a,b)) <= Pol(order) for any bounded order, n >= 3. Delegates
// to reflexive_refuter when a - b >= 2; otherwise tries, in order, the
// transpositions (x, bottom), (x, top), the six exceptional maps and finally
// family_search, verifying every candidate before accepting it.
WitnessCertificate order_refuter(const BoundedOrder& order, int a, int b);

// The explicit pair refuting non-designated equivalences, 0 < a <= b+1 <= n-1:
//   f: (b+1, 0) -> 0, (x,y) -> a when x,y > b, -> b otherwise
//   g: (a-1, n-1) -> n-1, (x,y) -> b when x,y < a, -> a otherwise
// Both preserve R(a,b); re-verified.
std::pair<Operation, Operation> equivalence_refuters(int a, int b, DomainSize n);

// For a - b <= 1 and a binary central rho with a center c < a or c > b:
// the case construction over the least non-member pair (u,v). Re-verified,
// violating rho on the columns (c,d), (z,z).
WitnessCertificate central_refuter(const Relation& rho, int c, int a, int b);

// For a <= b: the unary map x1 -> x2, y1 -> y2, identity elsewhere
// (x1, x2 < a, y1, y2 > b) preserves R(a,b). Re-verified.
Operation complement_mapper(int a, int b, int x1, int x2, int y1, int y2, DomainSize n);

// Conjugation by the order-reversing permutation x -> n-1-x.
Operation dualize(const Operation& f);

struct FamilySearchBudget {
  std::size_t max_candidates = std::size_t{1} << 20;
};

struct FamilySearchResult {
  std::optional<WitnessCertificate> certificate;
  bool budget_exhausted = false;
  std::size_t examined = 0;
};

// Deterministic search for a witness in Pol(R(a,b)) violating the target,
// restricted to families known to preserve R(a,b): image-bounded unary maps,
// interval-preserving unary maps, then the full low/high binary template
// families, each in ascending table order. First verified hit wins.
FamilySearchResult family_search(const MaxCCloneParams& params, const Relation& target,
                                 const FamilySearchBudget& budget = {});

}  // namespace cclone
