#pragma once

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "cclone/relation.hpp"

namespace cclone {

// {0..b} + {a..n-1}; a proper subset of D exactly when a - b >= 2.
struct UnaryIntervalUnion {
  Relation relation;
  bool nontrivial;
};
UnaryIntervalUnion unary_interval_union(int a, int b, DomainSize n);

// Equivalence with blocks {0..b} and {b+1..n-1}; rejects the trivial case
// where both blocks are singletons (n = 2).
Relation two_block_equivalence(int b, DomainSize n);

// sigma_{a,b} = {0..b}^2 + {a..n-1}^2 for 0 < a <= b < n-1, computed as the
// union over a <= c <= b of {0..c}^2 + {c..n-1}^2 and checked against the
// two-square form.
Relation sigma(int a, int b, DomainSize n);

// rho_c = diagonal + {c} x D + D x {c}.
Relation rho_c(int c, DomainSize n);

// A_c = {(x,y) : x, y != c, x < y}, ascending.
std::vector<std::pair<int, int>> upper_noncentral_pairs(int c, DomainSize n);

// A binary central relation together with its full center set.
struct CentralStructure {
  Relation relation;
  std::vector<int> centers;
};

// rho_c + S + S^-1 for a proper subset S of A_c. S = A_c would give the full
// relation and is rejected, as are pairs outside A_c.
CentralStructure binary_central(int c, const std::vector<std::pair<int, int>>& s, DomainSize n);

// Elements whose full row and column lie inside rho (arity 2).
std::vector<int> centers_of(const Relation& rho);

enum class RelationClass {
  UnaryCentral,
  NontrivialEquivalence,
  BinaryCentral,
  BoundedOrder,
};

std::string_view class_token(RelationClass c);  // stable CLI tokens
std::optional<RelationClass> class_from_token(std::string_view token);
std::vector<RelationClass> all_relation_classes();

// Every relation of the class over D, deduplicated, ascending. Bounded orders
// are found by filtered brute force over off-diagonal pair states and are
// capped at n <= 5.
std::vector<Relation> enumerate_class(RelationClass c, DomainSize n);

// A reflexive antisymmetric transitive binary relation with global least and
// greatest elements.
struct BoundedOrder {
  explicit BoundedOrder(Relation order_relation);

  Relation order;
  int bottom;
  int top;
};

enum class Classification {
  Diagonal,
  UnaryCentral,
  NontrivialEquivalence,
  BinaryCentral,
  BoundedOrder,
  Unclassified,
};

std::string_view classification_name(Classification c);

struct ValidationReport {
  int arity = 0;
  bool symmetric = false;
  bool reflexive = false;
  bool antisymmetric = false;
  bool transitive = false;
  bool is_equivalence = false;
  bool is_order = false;
  std::vector<int> centers;
  std::optional<int> bottom;
  std::optional<int> top;
  Classification classification = Classification::Unclassified;
};

// Axiom-by-axiom report for a relation of arity <= 2, classifying it into the
// four catalog classes, the trivial diagonals, or "unclassified".
ValidationReport validate(const Relation& rho);

}  // namespace cclone
