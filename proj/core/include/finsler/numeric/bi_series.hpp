#pragma once

#include "finsler/numeric/jet.hpp"

namespace finsler::numeric {

/// Truncated Taylor series in (b^2, s): first order in b^2, fifth in s.
/// Plugs into the closed-form templates of finsler::symbolic.
class BiSeries {
 public:
  BiSeries(double c = 0.0) : j_(c) {}  // NOLINT(google-explicit-constructor)
  explicit BiSeries(Jet j) : j_(std::move(j)) {}

  static const JetSpace& space() { return JetSpace::get(1, 1, 1, 5, 5); }
  static BiSeries b2(double value) { return BiSeries(Jet::variable(space(), 0, value)); }
  static BiSeries s(double value) { return BiSeries(Jet::variable(space(), 1, value)); }

  double value() const { return j_.value(); }
  const Jet& jet() const { return j_; }

  BiSeries operator-() const { return BiSeries(-j_); }
  friend BiSeries operator+(const BiSeries& a, const BiSeries& b) { return BiSeries(a.j_ + b.j_); }
  friend BiSeries operator-(const BiSeries& a, const BiSeries& b) { return BiSeries(a.j_ - b.j_); }
  friend BiSeries operator*(const BiSeries& a, const BiSeries& b) { return BiSeries(a.j_ * b.j_); }
  friend BiSeries operator/(const BiSeries& a, const BiSeries& b) { return BiSeries(a.j_ / b.j_); }
  BiSeries& operator+=(const BiSeries& b) { return *this = *this + b; }
  BiSeries& operator-=(const BiSeries& b) { return *this = *this - b; }
  BiSeries& operator*=(const BiSeries& b) { return *this = *this * b; }

  friend BiSeries d_ds(const BiSeries& a) { return BiSeries(partial(a.j_, 1)); }
  friend BiSeries d_db2(const BiSeries& a) { return BiSeries(partial(a.j_, 0)); }
  friend BiSeries sqrt(const BiSeries& a) { return BiSeries(numeric::sqrt(a.j_)); }
  friend BiSeries pow(const BiSeries& a, double p) { return BiSeries(numeric::pow(a.j_, p)); }
  friend BiSeries exp(const BiSeries& a) { return BiSeries(numeric::exp(a.j_)); }
  friend BiSeries log(const BiSeries& a) { return BiSeries(numeric::log(a.j_)); }

 private:
  Jet j_;
};

}  // namespace finsler::numeric
