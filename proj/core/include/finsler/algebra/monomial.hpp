#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <cstring>
#include <functional>

#include "finsler/algebra/symbols.hpp"

namespace finsler::algebra {

/// A power product over the fixed symbol slots.
///
/// Ordering is graded lexicographic with s > u > C > T > c0 > dc0 > ...
class Monomial {
 public:
  using Exponent = std::uint8_t;

  Monomial() = default;

  static Monomial variable(Symbol v, unsigned power = 1);

  Exponent operator[](Symbol v) const { return exps_[v]; }
  unsigned degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }

  void set(Symbol v, unsigned power);

  /// Product of power products; throws std::overflow_error past 255 per slot.
  friend Monomial operator*(const Monomial& a, const Monomial& b);

  bool divides(const Monomial& other) const;

  /// Quotient other / *this; requires divides(other).
  Monomial quotient_of(const Monomial& other) const;

  /// Slot-wise minimum.
  static Monomial gcd(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.degree_ == b.degree_ && a.exps_ == b.exps_;
  }

  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    if (a.degree_ != b.degree_) return a.degree_ <=> b.degree_;
    const int c = std::memcmp(a.exps_.data(), b.exps_.data(), kNumSymbols);
    return c <=> 0;
  }

  std::size_t hash() const;

  const std::array<Exponent, kNumSymbols>& exponents() const { return exps_; }

 private:
  std::array<Exponent, kNumSymbols> exps_{};
  std::uint16_t degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

}  // namespace finsler::algebra
