#pragma once

#include <string>
#include <vector>

#include "cclone/enumerate.hpp"
#include "cclone/witness.hpp"

namespace cclone {

// The unique maximal clone containing Pol(R(a,b)): for n = 2 the monotone
// Boolean clone, for n >= 3 keyed by the regime of a - b.
enum class MaxCloneKind {
  UnaryNonTrivial,      // a - b > 1: Pol({0..b} + {a..n-1})
  TwoBlockEquivalence,  // a - b = 1: Pol(theta_b)
  BinaryCentral,        // a - b < 1: Pol(sigma_{a,b})
  BooleanMonotone,      // n = 2:     Pol(<=)
};

std::string_view kind_token(MaxCloneKind kind);

struct MaximalCloneDescriptor {
  MaxCloneKind kind;
  Relation relation;
  MaxCCloneParams params;
};

MaximalCloneDescriptor classify(const MaxCCloneParams& params);

// Evidence that the designated relation is constructible from R(a,b): the
// intersection with the inverse (plus the diagonal restriction when
// a - b > 1; the plain inverse at n = 2) must equal the designated relation.
struct InclusionCertificate {
  Relation constructed;
  Relation expected;
  bool equal;
};

InclusionCertificate inclusion_certificate(const MaxCCloneParams& params);

// Verified exclusion certificate for Pol(R(a,b)) not<= Pol(target), produced
// by dispatching on the target's classification (constants / middle-element /
// reflexive / order / equivalence pair / central cases / complement mapper)
// with family_search as the fallback. Throws RefutationError when no witness
// is found, std::invalid_argument when the target designates the included
// maximal clone.
struct RefutationOutcome {
  WitnessCertificate certificate;
  std::string route;  // which construction produced the witness
};

RefutationOutcome refute_inclusion_detailed(const MaxCCloneParams& params,
                                            const Relation& target,
                                            const FamilySearchBudget& search = {});
WitnessCertificate refute_inclusion(const MaxCCloneParams& params, const Relation& target,
                                    const FamilySearchBudget& search = {});

// pol_j({R(a,b)}) <= pol_j({target}) for every j <= max_arity. A necessary
// condition for Pol(R(a,b)) <= Pol(target); full enumeration, budget-guarded.
bool brute_force_subset_check(const MaxCCloneParams& params, const Relation& target,
                              int max_arity, const EnumerationBudget& budget = {});

// pol_j sets coincide for every j <= max_arity.
bool bounded_pol_equal(const Relation& r1, const Relation& r2, int max_arity,
                       const EnumerationBudget& budget = {});

enum class CandidateVerdict {
  Included,       // equals the designated relation
  IncludedAlias,  // different relation, same polymorphisms at bounded arity (n = 2)
  Excluded,       // carries a verified exclusion certificate
};

struct CandidateOutcome {
  Relation relation;
  RelationClass source_class;
  CandidateVerdict verdict;
  std::string route;  // construction route for exclusions
  std::optional<WitnessCertificate> exclusion;
};

struct VerificationRow {
  MaxCCloneParams params;
  MaximalCloneDescriptor designated;
  InclusionCertificate inclusion;
  bool pol_cross_checked = false;  // n = 2: pol_k equality verified for k <= 2
  std::vector<CandidateOutcome> candidates;
  std::size_t included_count = 0;  // aliases fold into the designated clone
  std::size_t excluded_count = 0;
};

struct VerificationReport {
  DomainSize n;
  std::vector<RelationClass> classes;
  std::vector<VerificationRow> rows;
  bool ok = false;
  std::string failure;  // locus of the first failed certificate
};

struct VerifyOptions {
  std::vector<RelationClass> classes = all_relation_classes();
  EnumerationBudget enum_budget;
  FamilySearchBudget search_budget;
};

// Instance verification of the classification: for every admissible (a,b),
// the inclusion certificate must hold and every other enumerated candidate
// must carry a verified exclusion certificate; each row must end up with
// exactly one included clone. Stops at the first failure (ok = false and
// failure carries the locus).
VerificationReport verify_theorem(DomainSize n, const VerifyOptions& options = {});

std::string render_text(const VerificationReport& report, bool verbose = false);
std::string report_to_json(const VerificationReport& report);

}  // namespace cclone
