#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace osw {

/// A subset of the elements {0..n-1} of a fixed structure, stored as a
/// bitmask. Structures are capped at 15 elements, so a 16-bit word suffices.
class Subset {
 public:
  constexpr Subset() = default;

  static constexpr Subset of_bits(std::uint16_t bits) { return Subset(bits); }
  static constexpr Subset single(int e) {
    return Subset(static_cast<std::uint16_t>(1u << e));
  }
  static constexpr Subset full(int n) {
    return Subset(static_cast<std::uint16_t>((1u << n) - 1u));
  }

  constexpr bool contains(int e) const { return (bits_ >> e) & 1u; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::uint16_t bits() const { return bits_; }
  int count() const { return std::popcount(bits_); }

  void add(int e) { bits_ |= static_cast<std::uint16_t>(1u << e); }

  constexpr bool subset_of(Subset o) const { return (bits_ & ~o.bits_) == 0; }

  std::vector<int> elements() const {
    std::vector<int> out;
    for (int e = 0; e < 16; ++e)
      if (contains(e)) out.push_back(e);
    return out;
  }

  friend constexpr Subset operator|(Subset a, Subset b) {
    return Subset(static_cast<std::uint16_t>(a.bits_ | b.bits_));
  }
  friend constexpr Subset operator&(Subset a, Subset b) {
    return Subset(static_cast<std::uint16_t>(a.bits_ & b.bits_));
  }
  Subset& operator|=(Subset o) {
    bits_ |= o.bits_;
    return *this;
  }
  constexpr bool operator==(const Subset&) const = default;

 private:
  explicit constexpr Subset(std::uint16_t bits) : bits_(bits) {}
  std::uint16_t bits_ = 0;
};

}  // namespace osw
