#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace osw {

/// Requested size exceeds a documented bound (enumeration, power
/// construction, partition enumeration, builder parameters).
class SizeBoundError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnknownTemplateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotIdempotentOrderedError : public std::runtime_error {
 public:
  explicit NotIdempotentOrderedError(int witness)
      : std::runtime_error("structure is not idempotent ordered (element " +
                           std::to_string(witness) + " is not below its square)"),
        witness_(witness) {}
  int witness() const { return witness_; }

 private:
  int witness_;
};

/// A relation that a theorem asserts to be an equivalence turned out not to
/// be one on a concrete instance. This falsifies the claim on that instance
/// and is surfaced instead of repaired.
class InternalCheckFailedError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class NotProductClosedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotSemilatticeCongruenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ClassNotClosedError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class HypothesisNotMetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotAHomomorphismError : public std::runtime_error {
 public:
  NotAHomomorphismError(int a, int b)
      : std::runtime_error("map is not a homomorphism: f(" + std::to_string(a) +
                           "*" + std::to_string(b) + ") != f(" + std::to_string(a) +
                           ")*f(" + std::to_string(b) + ")"),
        pair_{a, b} {}
  std::array<int, 2> pair() const { return pair_; }

 private:
  std::array<int, 2> pair_;
};

class JoinMissingError : public std::runtime_error {
 public:
  explicit JoinMissingError(std::uint32_t subset_mask)
      : std::runtime_error("subset has no least upper bound in the target order"),
        mask_(subset_mask) {}
  std::uint32_t subset_mask() const { return mask_; }

 private:
  std::uint32_t mask_;
};

class FileFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace osw
