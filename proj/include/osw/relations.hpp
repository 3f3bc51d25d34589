#pragma once

// Equivalence relations and congruences on a finite ordered semigroup:
// Green's relations, congruence classification, congruence closure, the
// least complete semilattice congruence, and exhaustive enumeration of
// semilattice congruences.

#include <optional>
#include <utility>
#include <vector>

#include "osw/core.hpp"
#include "osw/subset.hpp"

namespace osw {

/// A partition of {0..n-1}. Classes are numbered by first appearance, so
/// `class_of` is the canonical restricted-growth encoding and two partitions
/// are equal iff their `class_of` arrays are.
struct Partition {
  std::vector<int> class_of;
  std::vector<Subset> classes;

  static Partition from_class_of(std::vector<int> ids);
  static Partition identity(int n);
  static Partition universal(int n);
  static Partition common_refinement(const Partition& a, const Partition& b);

  int size() const { return static_cast<int>(class_of.size()); }
  int num_classes() const { return static_cast<int>(classes.size()); }
  bool same_class(int a, int b) const { return class_of[a] == class_of[b]; }

  /// True if every class of this partition is contained in a class of
  /// `coarser`.
  bool refines(const Partition& coarser) const;

  bool operator==(const Partition& o) const { return class_of == o.class_of; }
};

enum class GreenRelation { L, R, J, H };

/// Green's relation as equality of principal order-ideals; H is the common
/// refinement of L and R.
Partition green(const OrderedSemigroup& s, GreenRelation rel);

/// The J relation computed from the sandwich characterization: a related to
/// b iff a <= a*x*b*y*a and b <= b*u*a*v*b for some x,y,u,v. Requires an
/// idempotent ordered structure. If the relation computed is not an
/// equivalence on the given input, that falsifies the characterization there
/// and InternalCheckFailedError is thrown rather than the relation repaired.
Partition j_via_sandwich(const OrderedSemigroup& s);

struct CongruenceFlags {
  bool left_congruence = true;
  bool right_congruence = true;
  bool congruence = true;           // left && right
  bool semilattice = true;          // congruence && a~a^2 && ab~ba
  bool complete_semilattice = true; // semilattice && (a<=b implies a~ab)

  // Lexicographically first failing tuple per flag. Left/right witnesses are
  // (a, b, c) with a~b and c the translating element; the semilattice
  // witness is (a) for a law a~a^2 failure or (a, b) for ab~ba; the
  // completeness witness is (a, b) with a <= b.
  std::optional<std::vector<int>> left_witness;
  std::optional<std::vector<int>> right_witness;
  std::optional<std::vector<int>> semilattice_witness;
  std::optional<std::vector<int>> complete_witness;
};

CongruenceFlags congruence_kind(const OrderedSemigroup& s, const Partition& p);

/// Least congruence containing the given pairs: union-find seeded with the
/// pairs, then every merge (a,b) propagates (ca,cb) and (ac,bc) for all c to
/// a fixpoint.
Partition congruence_closure(const OrderedSemigroup& s,
                             const std::vector<std::pair<int, int>>& pairs);

/// Least complete semilattice congruence: congruence closure of
/// {(a,a^2)} u {(ab,ba)} u {(a,ab) : a <= b}, re-seeded with any violated
/// generator instance until the flags pass (the seed set already contains
/// every instance, so re-seeding is a terminating safeguard).
Partition least_complete_semilattice_congruence(const OrderedSemigroup& s);

/// All semilattice congruences, by filtering every partition of the element
/// set (Bell-number enumeration; n <= 8). Returned in lexicographic
/// class_of order.
std::vector<Partition> all_semilattice_congruences(const OrderedSemigroup& s);

}  // namespace osw
