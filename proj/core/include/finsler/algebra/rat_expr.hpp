#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "finsler/algebra/errors.hpp"
#include "finsler/algebra/polynomial.hpp"

namespace finsler::algebra {

/// Exact rational function over Q in s, u (u^2 = b^2), C, T and the generic
/// coefficient-function symbols.
///
/// Canonical form: integer numerator and denominator with no common factor,
/// no common integer content, and a denominator with positive leading
/// coefficient. The denominator is stored as unit * prod(base_i^exp_i) over
/// pairwise coprime primitive bases, which keeps gcd work on the small bases
/// instead of the expanded product. Values are immutable once built.
class RatExpr {
 public:
  struct Factor {
    Polynomial base;  // primitive, positive leading coefficient, non-constant
    unsigned exponent = 0;
  };

  RatExpr() = default;
  RatExpr(long c);  // NOLINT(google-explicit-constructor)
  explicit RatExpr(const Rational& q);
  explicit RatExpr(Polynomial p);

  /// num / den in canonical form; throws DivisionByZero for den = 0.
  static RatExpr fraction(const Polynomial& num, const Polynomial& den);
  static RatExpr symbol(Symbol v);
  static RatExpr s() { return symbol(kS); }
  static RatExpr u() { return symbol(kU); }
  static RatExpr C() { return symbol(kC); }
  static RatExpr T() { return symbol(kT); }
  /// b^2, represented as u^2.
  static RatExpr b2();
  /// Generic coefficient function d^order c_index / (d b^2)^order.
  static RatExpr coefficient_function(int index, int order = 0);

  const Polynomial& numerator() const { return num_; }
  /// Expanded canonical denominator.
  Polynomial denominator() const;
  const Integer& denominator_unit() const { return unit_; }
  const std::vector<Factor>& denominator_factors() const { return factors_; }

  bool is_zero() const { return num_.is_zero(); }
  std::optional<Rational> as_rational() const;
  SymbolSet symbols() const;
  bool depends_on(Symbol v) const { return (symbols() >> v) & 1u; }

  RatExpr inverse() const;
  RatExpr pow(int e) const;

  RatExpr operator-() const;
  friend RatExpr operator+(const RatExpr& a, const RatExpr& b);
  friend RatExpr operator-(const RatExpr& a, const RatExpr& b);
  friend RatExpr operator*(const RatExpr& a, const RatExpr& b);
  friend RatExpr operator/(const RatExpr& a, const RatExpr& b);
  RatExpr& operator+=(const RatExpr& b) { return *this = *this + b; }
  RatExpr& operator-=(const RatExpr& b) { return *this = *this - b; }
  RatExpr& operator*=(const RatExpr& b) { return *this = *this * b; }
  RatExpr& operator/=(const RatExpr& b) { return *this = *this / b; }

  friend bool operator==(const RatExpr& a, const RatExpr& b);

  /// Partial derivative treating every symbol as independent.
  RatExpr partial(Symbol v) const;

  /// Exact value; throws PoleError when the denominator vanishes.
  Rational evaluate(std::span<const Rational, kNumSymbols> values) const;

  template <class S>
  S evaluate_as(std::span<const S, kNumSymbols> values) const;

 private:
  RatExpr(Polynomial num, Integer unit, std::vector<Factor> factors);

  // Divides common factors out of the numerator and the listed bases.
  void cancel(std::vector<std::size_t> candidates);
  void cancel_all();
  void reduce_integers();

  static RatExpr combine(const RatExpr& a, const RatExpr& b, bool add);

  Polynomial num_;
  Integer unit_{1};
  std::vector<Factor> factors_;
};

/// d/ds.
RatExpr d_ds(const RatExpr& a);

/// d/d(b^2) = (1/(2u)) d/du plus the chain rule through every generic
/// coefficient function. Throws AlgebraError when a derivative beyond the
/// tracked order would be needed.
RatExpr d_db2(const RatExpr& a);

/// [v_0, ..., v_r] with a = sum v_i s^i and v_r != 0; empty for a = 0.
/// Throws NotPolynomial when s occurs in the denominator.
std::vector<RatExpr> coeffs_in_s(const RatExpr& a);

/// Primitive part of the canonical numerator with positive leading coefficient.
Polynomial numerator_normalized(const RatExpr& a);

/// Numerator divided by the integer unit of the denominator, i.e. the
/// numerator relative to a primitive denominator with positive leading
/// coefficient. Unlike numerator_normalized it keeps a well-defined scale.
RatExpr scaled_numerator(const RatExpr& a);

/// Exact value at (s, u, C, T); generic coefficient symbols are not allowed.
Rational eval_rational(const RatExpr& a, const Rational& s, const Rational& u, const Rational& c = 0,
                       const Rational& t = 0);

/// Floating value at (s, u, C, T).
double eval_double(const RatExpr& a, double s, double u, double c = 0.0, double t = 0.0);

/// Replaces symbol v by an expression.
RatExpr substitute(const RatExpr& a, Symbol v, const RatExpr& value);

template <class S>
S RatExpr::evaluate_as(std::span<const S, kNumSymbols> values) const {
  S den(unit_.get_d());
  for (const Factor& f : factors_) {
    const S b = f.base.evaluate_as<S>(values);
    S p(1.0);
    for (unsigned k = 0; k < f.exponent; ++k) p = p * b;
    den = den * p;
  }
  return num_.evaluate_as<S>(values) / den;
}

}  // namespace finsler::algebra
