#pragma once

// Finite ordered semigroups: a Cayley table over n elements together with a
// compatible partial order. Structures are validated once and immutable
// afterwards; every operation in the library is a pure function of its
// inputs, so structures can be shared freely across threads.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "osw/subset.hpp"
#include "osw/verdict.hpp"

namespace osw {

/// Hard element cap. Subsets fit a 16-bit mask and the power construction of
/// a 4-element semigroup (15 elements) is still representable. General-use
/// bounds elsewhere are tighter (builders 12, enumeration 4).
inline constexpr int kMaxElements = 15;

enum class IdealSide { Left, Right, TwoSided };

class OrderedSemigroup {
 public:
  const std::string& name() const { return name_; }
  int size() const { return n_; }
  const std::vector<std::string>& labels() const { return labels_; }

  int mul(int a, int b) const { return table_[a * n_ + b]; }
  bool leq(int a, int b) const { return below_[b].contains(a); }

  /// All elements t with t <= a.
  Subset below(int a) const { return below_[a]; }
  /// All elements t with a <= t.
  Subset above(int a) const { return above_[a]; }
  Subset universe() const { return Subset::full(n_); }

  const std::vector<std::uint8_t>& table() const { return table_; }

  /// Caller guarantees all invariants (associativity, partial order,
  /// compatibility). Used by the validator and by constructions that are
  /// valid by construction; tests re-validate such outputs.
  static OrderedSemigroup from_parts_unchecked(std::string name, int n,
                                               std::vector<std::uint8_t> table,
                                               std::vector<Subset> below,
                                               std::vector<std::string> labels = {});

  bool same_data(const OrderedSemigroup& o) const {
    return n_ == o.n_ && table_ == o.table_ && below_ == o.below_;
  }

 private:
  OrderedSemigroup() = default;
  std::string name_;
  int n_ = 0;
  std::vector<std::uint8_t> table_;  // row-major, table_[a*n+b] = a*b
  std::vector<Subset> below_;        // below_[a] = {t : t <= a}
  std::vector<Subset> above_;        // above_[a] = {t : a <= t}
  std::vector<std::string> labels_;
};

/// An unvalidated structure as read from a file: the order is given as
/// pairs [i,j] meaning i <= j, and is closed reflexively and transitively by
/// the validator before the remaining axioms are checked.
struct RawStructure {
  std::string name;
  int n = 0;
  std::vector<std::vector<int>> table;
  std::vector<std::pair<int, int>> order;
  std::vector<std::string> labels;
};

enum class ValidationKind {
  NonAssociative,
  NotReflexive,
  NotAntisymmetric,
  NotTransitive,
  Incompatible,
  MalformedTable,
  IndexOutOfRange,
};

std::string_view validation_kind_name(ValidationKind kind);

/// One violated invariant with the lexicographically first witness tuple
/// locating it in the input.
struct ValidationError {
  ValidationKind kind;
  std::vector<int> witness;
  std::string detail;
};

struct ValidationResult {
  std::optional<OrderedSemigroup> structure;
  std::vector<ValidationError> errors;

  bool ok() const { return structure.has_value(); }
  const OrderedSemigroup& value() const { return structure.value(); }
};

/// Validates a raw structure. Every violated invariant is reported (one
/// error per kind, first witness), not just the first.
ValidationResult validate(const RawStructure& raw);

/// Validates from an explicit order matrix (row-major, leq[a*n+b] nonzero
/// means a <= b). Unlike the pair form this checks reflexivity and
/// transitivity instead of closing them.
ValidationResult validate_order_matrix(std::string name, int n,
                                       const std::vector<std::uint8_t>& table,
                                       const std::vector<std::uint8_t>& leq,
                                       std::vector<std::string> labels = {});

/// (H] = {t : t <= h for some h in H}.
Subset downset(const OrderedSemigroup& s, Subset h);

/// Principal order-ideal of a: Left (S^1 a], Right (a S^1], TwoSided
/// (S^1 a S^1]. The adjoined identity is never materialized; its effect is
/// the inclusion of a itself.
Subset principal_ideal(const OrderedSemigroup& s, int a, IdealSide side);

/// The sandwich set {a*x*b : x in S}; always closed under the product of S.
Subset sandwich(const OrderedSemigroup& s, int a, int b);

/// Checks a^m <= a^n for all a and 1 <= m <= n <= 2n+1. Powers of an element
/// of an n-element semigroup cycle within the first 2n+1 exponents, so the
/// bound is exhaustive. The counterexample, if any, is the first (a, m, n).
Verdict check_power_monotonicity(const OrderedSemigroup& s);

/// The sub-structure on a nonempty product-closed subset: table and order
/// restricted to the members, indexed in ascending element order. Throws
/// ClassNotClosedError if the subset is empty or not product-closed.
OrderedSemigroup restrict_to_subset(const OrderedSemigroup& s, Subset members,
                                    std::string name);

}  // namespace osw
