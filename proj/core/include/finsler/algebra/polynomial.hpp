#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <span>
#include <type_traits>
#include <vector>

#include "finsler/algebra/monomial.hpp"

namespace finsler::algebra {

using Integer = mpz_class;
using Rational = mpq_class;

/// Bit v is set when symbol slot v occurs.
using SymbolSet = std::uint32_t;
static_assert(kNumSymbols <= 32);

struct Term {
  Monomial mono;
  Integer coeff;
};

/// Sparse multivariate polynomial with integer coefficients.
///
/// Terms are kept sorted by decreasing monomial order and never carry a zero
/// coefficient, so structural equality is polynomial equality.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(long c);  // NOLINT(google-explicit-constructor)
  explicit Polynomial(Integer c);

  static Polynomial variable(Symbol v, unsigned power = 1);
  static Polynomial monomial(Monomial m, Integer c);
  /// Sorts and merges arbitrary terms.
  static Polynomial from_terms(std::vector<Term> terms);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  /// Constant term value when is_constant().
  Integer constant_value() const;

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  const Term& leading() const { return terms_.front(); }
  int sign() const;  // sign of the leading coefficient, 0 for zero

  unsigned degree(Symbol v) const;
  unsigned total_degree() const;
  SymbolSet symbols() const;
  bool depends_on(Symbol v) const { return (symbols() >> v) & 1u; }

  /// Coefficients in v, index = power of v.
  std::vector<Polynomial> coefficients(Symbol v) const;
  static Polynomial from_coefficients(Symbol v, const std::vector<Polynomial>& coeffs);
  /// Leading coefficient with respect to v (a polynomial free of v).
  Polynomial leading_coefficient(Symbol v) const;

  Polynomial derivative(Symbol v) const;

  /// Positive gcd of the coefficients; zero for the zero polynomial.
  Integer content() const;
  /// Divides out the content and makes the leading coefficient positive.
  Polynomial primitive_part() const;
  Monomial monomial_content() const;
  Polynomial divide_monomial(const Monomial& m) const;
  /// Exact division by an integer; throws std::domain_error when inexact.
  Polynomial divide_integer(const Integer& d) const;

  /// Quotient when d divides *this exactly, std::nullopt otherwise.
  std::optional<Polynomial> divide_exact(const Polynomial& d) const;
  /// As divide_exact but throws std::domain_error when d does not divide.
  Polynomial divide_or_throw(const Polynomial& d) const;

  Polynomial pow(unsigned e) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& b);
  Polynomial& operator-=(const Polynomial& b);
  Polynomial& operator*=(const Polynomial& b);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial scaled(const Integer& c) const;
  Polynomial times_monomial(const Monomial& m, const Integer& c) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

  /// Exact evaluation; every symbol occurring must have a value.
  Rational evaluate(std::span<const Rational, kNumSymbols> values) const;

  /// Evaluation over any commutative ring type S constructible from double.
  template <class S>
  S evaluate_as(std::span<const S, kNumSymbols> values) const;

 private:
  std::vector<Term> terms_;  // strictly decreasing monomials
};

template <class S>
S Polynomial::evaluate_as(std::span<const S, kNumSymbols> values) const {
  const SymbolSet used = symbols();
  std::vector<std::vector<S>> powers(kNumSymbols);
  for (Symbol v = 0; v < kNumSymbols; ++v) {
    if (!((used >> v) & 1u)) continue;
    const unsigned d = degree(v);
    powers[v].reserve(d + 1);
    powers[v].push_back(S(1.0));
    for (unsigned k = 1; k <= d; ++k) powers[v].push_back(powers[v].back() * values[v]);
  }
  S total(0.0);
  for (const Term& t : terms_) {
    S acc(t.coeff.get_d());
    for (Symbol v = 0; v < kNumSymbols; ++v) {
      const unsigned e = t.mono[v];
      if (e != 0) acc = acc * powers[v][e];
    }
    total = total + acc;
  }
  return total;
}

}  // namespace finsler::algebra
