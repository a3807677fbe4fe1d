#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace finsler::algebra {

/// Number of variable slots every monomial carries.
///
/// Slots 0..3 hold the ring variables s, u (with u^2 = b^2), C (the conformal
/// factor c) and T (the mean-Landsberg ratio c~). The remaining slots hold
/// generic coefficient functions c_k(b^2) and their b^2-derivatives, used when
/// a polynomial phi is analysed with unspecified coefficients.
inline constexpr std::size_t kNumSymbols = 32;
inline constexpr int kMaxCoeffFunctions = 7;   // c_0 .. c_6
inline constexpr int kMaxCoeffDerivative = 3;  // c_k, c_k', c_k'', c_k'''

using Symbol = std::uint8_t;

inline constexpr Symbol kS = 0;
inline constexpr Symbol kU = 1;
inline constexpr Symbol kC = 2;
inline constexpr Symbol kT = 3;
inline constexpr Symbol kFirstCoeffSymbol = 4;

/// Slot of d^order c_index / (d b^2)^order.
constexpr Symbol coeff_symbol(int index, int order) {
  return static_cast<Symbol>(kFirstCoeffSymbol + index * (kMaxCoeffDerivative + 1) + order);
}

constexpr bool is_coeff_symbol(Symbol v) { return v >= kFirstCoeffSymbol && v < kNumSymbols; }
constexpr int coeff_index(Symbol v) { return (v - kFirstCoeffSymbol) / (kMaxCoeffDerivative + 1); }
constexpr int coeff_order(Symbol v) { return (v - kFirstCoeffSymbol) % (kMaxCoeffDerivative + 1); }

static_assert(coeff_symbol(kMaxCoeffFunctions - 1, kMaxCoeffDerivative) == kNumSymbols - 1);

/// Text name of a slot: s, u, C, T, c0, dc0, d2c0, d3c0, c1, ...
std::string symbol_name(Symbol v);

/// Inverse of symbol_name.
std::optional<Symbol> parse_symbol(std::string_view name);

}  // namespace finsler::algebra
