#include "finsler/algebra/monomial.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace finsler::algebra {

std::string symbol_name(Symbol v) {
  switch (v) {
    case kS: return "s";
    case kU: return "u";
    case kC: return "C";
    case kT: return "T";
    default: break;
  }
  const int order = coeff_order(v);
  const std::string base = "c" + std::to_string(coeff_index(v));
  if (order == 0) return base;
  if (order == 1) return "d" + base;
  return "d" + std::to_string(order) + base;
}

std::optional<Symbol> parse_symbol(std::string_view name) {
  for (Symbol v = 0; v < kNumSymbols; ++v) {
    if (symbol_name(v) == name) return v;
  }
  return std::nullopt;
}

Monomial Monomial::variable(Symbol v, unsigned power) {
  Monomial m;
  m.set(v, power);
  return m;
}

void Monomial::set(Symbol v, unsigned power) {
  if (power > 255) throw std::overflow_error("monomial exponent exceeds 255");
  degree_ = static_cast<std::uint16_t>(degree_ - exps_[v] + power);
  exps_[v] = static_cast<Exponent>(power);
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < kNumSymbols; ++i) {
    const unsigned e = unsigned{a.exps_[i]} + b.exps_[i];
    if (e > 255) throw std::overflow_error("monomial exponent exceeds 255");
    r.exps_[i] = static_cast<Monomial::Exponent>(e);
  }
  r.degree_ = static_cast<std::uint16_t>(a.degree_ + b.degree_);
  return r;
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < kNumSymbols; ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

Monomial Monomial::quotient_of(const Monomial& other) const {
  Monomial r;
  for (std::size_t i = 0; i < kNumSymbols; ++i) {
    r.exps_[i] = static_cast<Exponent>(other.exps_[i] - exps_[i]);
  }
  r.degree_ = static_cast<std::uint16_t>(other.degree_ - degree_);
  return r;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
  Monomial r;
  unsigned d = 0;
  for (std::size_t i = 0; i < kNumSymbols; ++i) {
    r.exps_[i] = std::min(a.exps_[i], b.exps_[i]);
    d += r.exps_[i];
  }
  r.degree_ = static_cast<std::uint16_t>(d);
  return r;
}

std::size_t Monomial::hash() const {
  // FNV-1a over the exponent bytes.
  std::size_t h = 1469598103934665603ull;
  for (Exponent e : exps_) {
    h ^= e;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace finsler::algebra
