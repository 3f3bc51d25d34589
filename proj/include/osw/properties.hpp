#pragma once

// Witnessed decision procedures for the defined classes of (idempotent)
// ordered semigroups, and verifiers for the structural theorems relating
// them. Every decider evaluates its quantified formula exhaustively on an
// arbitrary ordered semigroup; the idempotent-ordered hypothesis is imposed
// only by the theorem verifiers, so searches can probe whether a hypothesis
// is necessary.

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "osw/core.hpp"
#include "osw/verdict.hpp"

namespace osw {

/// Quantified formulas decided by check(). In each, a,b,c are universally
/// quantified and x,y,u,s,t existentially:
///   IdempotentOrdered  a <= a*a
///   Rectangular        a <= a*x*b*y*a
///   RectangularAlt1    a <= a*x*b*x*a
///   RectangularAlt2    a*c <= a*x*b*x*c
///   LeftZero           a <= a*x*b
///   RightZero          a <= b*x*a
///   LeftSimple         (S*a] = S
///   RightSimple        (a*S] = S
///   TSimple            left simple and right simple
///   Simple             (S^1*a*S^1] = S
///   LeftRegular        a*b <= a*x*b*x*a
///   LeftRegularAlt1    a*b <= (a*b)*x*(b*a)
///   LeftRegularAlt3    a*b <= a*x*b*y*a
///   HCommutative       a*b in (b*S*a]
///   HCommutativeAlt    a*b in (b*a*S] and a*b in (S*b*a]
///   WeaklyCommutative  a*b <= b*u*a
///   Normal             a*b*c*a <= a*c*x*b*a
///   LeftNormal         a*b*c <= a*c*x*b
///   RightNormal        a*b*c <= b*x*a*c
enum class PropertyId {
  IdempotentOrdered,
  Rectangular,
  RectangularAlt1,
  RectangularAlt2,
  LeftZero,
  RightZero,
  LeftSimple,
  RightSimple,
  TSimple,
  Simple,
  LeftRegular,
  LeftRegularAlt1,
  LeftRegularAlt3,
  HCommutative,
  HCommutativeAlt,
  WeaklyCommutative,
  Normal,
  LeftNormal,
  RightNormal,
};

inline constexpr int kPropertyCount = 19;

std::span<const PropertyId> all_properties();
std::string_view to_string(PropertyId p);  // kebab-case id
std::optional<PropertyId> property_from_string(std::string_view name);

/// Exhaustively decides the property. Quantifier evaluation order is
/// lexicographic over element indices, so witnesses and counterexamples are
/// reproducible.
Verdict check(const OrderedSemigroup& s, PropertyId p);

/// Weak commutativity of a product-closed subset T viewed inside S: for all
/// p,q in T there is u in T with p*q <= q*u*p. Witnesses are drawn from T.
Verdict check_subset_weakly_commutative(const OrderedSemigroup& s, Subset t);

enum class TheoremId {
  T1PowerBand,   // P_f(B) idempotent ordered iff B is a band
  Lcr18,         // rectangular equivalences
  Tcr19,         // complete semilattice of rectangulars via J
  Pcr20,         // left zero iff left simple
  Lcr21,         // left regular equivalences
  Tcr22,         // left regular iff L = J = least csc
  Tcr23,         // left regular iff (complete) semilattice of left zeros
  Lcr24,         // H-commutative equivalences (t-simple classes)
  TWeakComm,     // weakly commutative equivalences
  TNormal,       // normal iff sandwich sets weakly commutative
  TNormalGreen,  // normal iff L right-normal and R left-normal band congruences
  TLeftNormal,   // left normal implies L = least csc with left zero classes
};

inline constexpr int kTheoremCount = 12;

std::span<const TheoremId> all_theorems();
std::string_view to_string(TheoremId t);  // kebab-case id
std::optional<TheoremId> theorem_from_string(std::string_view name);

/// Logical shape relating a theorem's conditions.
enum class TheoremShape {
  IffChain,        // all conditions equivalent
  Conjunction,     // all conditions asserted
  Implication,     // first condition implies the rest
  IffConjunction,  // first condition iff conjunction of the rest
};

std::string_view to_string(TheoremShape shape);

struct TheoremCondition {
  std::string label;
  bool holds;
  Verdict verdict;
};

struct TheoremReport {
  TheoremId theorem;
  TheoremShape shape;
  std::vector<TheoremCondition> conditions;
  bool relation_respected;
};

/// Pure function of the condition booleans and the declared shape.
bool shape_respected(TheoremShape shape, std::span<const bool> values);

/// Evaluates every condition of the theorem independently and reports
/// whether the declared relation between them is respected. All theorems
/// except T1PowerBand require an idempotent ordered input
/// (HypothesisNotMetError otherwise); T1PowerBand reads the input's table as
/// a plain semigroup.
TheoremReport verify_theorem(const OrderedSemigroup& s, TheoremId t);

/// Whether verify_theorem can run on s: the idempotent-ordered hypothesis
/// plus size prerequisites (power construction n <= 4, congruence
/// enumeration n <= 8).
bool theorem_applicable(const OrderedSemigroup& s, TheoremId t);

}  // namespace osw
