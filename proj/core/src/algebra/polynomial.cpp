#include "finsler/algebra/polynomial.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>
#include <unordered_map>

namespace finsler::algebra {

namespace {

bool term_greater(const Term& a, const Term& b) { return a.mono > b.mono; }

std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b, bool subtract) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].mono > b[j].mono)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].mono > a[i].mono) {
      out.push_back(subtract ? Term{b[j].mono, -b[j].coeff} : b[j]);
      ++j;
    } else {
      Integer c = subtract ? Integer(a[i].coeff - b[j].coeff) : Integer(a[i].coeff + b[j].coeff);
      if (c != 0) out.push_back(Term{a[i].mono, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Polynomial::Polynomial(long c) : Polynomial(Integer(c)) {}

Polynomial::Polynomial(Integer c) {
  if (c != 0) terms_.push_back(Term{Monomial{}, std::move(c)});
}

Polynomial Polynomial::variable(Symbol v, unsigned power) {
  return monomial(Monomial::variable(v, power), Integer(1));
}

Polynomial Polynomial::monomial(Monomial m, Integer c) {
  Polynomial p;
  if (c != 0) p.terms_.push_back(Term{m, std::move(c)});
  return p;
}

Polynomial Polynomial::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), term_greater);
  Polynomial p;
  p.terms_.reserve(terms.size());
  for (Term& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff += t.coeff;
      if (p.terms_.back().coeff == 0) p.terms_.pop_back();
    } else if (t.coeff != 0) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

Integer Polynomial::constant_value() const {
  if (terms_.empty()) return Integer(0);
  if (!terms_.back().mono.is_one()) return Integer(0);
  return terms_.back().coeff;
}

int Polynomial::sign() const {
  if (terms_.empty()) return 0;
  return sgn(terms_.front().coeff);
}

unsigned Polynomial::degree(Symbol v) const {
  unsigned d = 0;
  for (const Term& t : terms_) d = std::max<unsigned>(d, t.mono[v]);
  return d;
}

unsigned Polynomial::total_degree() const { return terms_.empty() ? 0 : terms_.front().mono.degree(); }

SymbolSet Polynomial::symbols() const {
  SymbolSet set = 0;
  for (const Term& t : terms_) {
    for (Symbol v = 0; v < kNumSymbols; ++v) {
      if (t.mono[v] != 0) set |= (1u << v);
    }
  }
  return set;
}

std::vector<Polynomial> Polynomial::coefficients(Symbol v) const {
  std::vector<std::vector<Term>> buckets(degree(v) + 1);
  for (const Term& t : terms_) {
    Monomial m = t.mono;
    const unsigned e = m[v];
    m.set(v, 0);
    buckets[e].push_back(Term{m, t.coeff});
  }
  std::vector<Polynomial> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) out.push_back(from_terms(std::move(b)));
  if (terms_.empty()) out.clear();
  return out;
}

Polynomial Polynomial::from_coefficients(Symbol v, const std::vector<Polynomial>& coeffs) {
  std::vector<Term> terms;
  for (std::size_t e = 0; e < coeffs.size(); ++e) {
    for (const Term& t : coeffs[e].terms_) {
      Monomial m = t.mono;
      m.set(v, static_cast<unsigned>(e));
      terms.push_back(Term{m, t.coeff});
    }
  }
  return from_terms(std::move(terms));
}

Polynomial Polynomial::leading_coefficient(Symbol v) const {
  const unsigned d = degree(v);
  std::vector<Term> terms;
  for (const Term& t : terms_) {
    if (t.mono[v] != d) continue;
    Monomial m = t.mono;
    m.set(v, 0);
    terms.push_back(Term{m, t.coeff});
  }
  return from_terms(std::move(terms));
}

Polynomial Polynomial::derivative(Symbol v) const {
  std::vector<Term> terms;
  for (const Term& t : terms_) {
    const unsigned e = t.mono[v];
    if (e == 0) continue;
    Monomial m = t.mono;
    m.set(v, e - 1);
    terms.push_back(Term{m, t.coeff * e});
  }
  return from_terms(std::move(terms));
}

Integer Polynomial::content() const {
  Integer g(0);
  for (const Term& t : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coeff.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

Polynomial Polynomial::primitive_part() const {
  if (terms_.empty()) return {};
  Integer c = content();
  if (sign() < 0) c = -c;
  if (c == 1) return *this;
  return divide_integer(c);
}

Monomial Polynomial::monomial_content() const {
  if (terms_.empty()) return {};
  Monomial g = terms_.front().mono;
  for (const Term& t : terms_) {
    g = Monomial::gcd(g, t.mono);
    if (g.is_one()) break;
  }
  return g;
}

Polynomial Polynomial::divide_monomial(const Monomial& m) const {
  Polynomial p;
  p.terms_.reserve(terms_.size());
  for (const Term& t : terms_) {
    if (!m.divides(t.mono)) throw std::domain_error("monomial does not divide polynomial");
    p.terms_.push_back(Term{m.quotient_of(t.mono), t.coeff});
  }
  return p;
}

Polynomial Polynomial::divide_integer(const Integer& d) const {
  if (d == 0) throw std::domain_error("division by zero");
  Polynomial p;
  p.terms_.reserve(terms_.size());
  for (const Term& t : terms_) {
    if (!mpz_divisible_p(t.coeff.get_mpz_t(), d.get_mpz_t())) {
      throw std::domain_error("inexact integer division of polynomial");
    }
    Integer q;
    mpz_divexact(q.get_mpz_t(), t.coeff.get_mpz_t(), d.get_mpz_t());
    p.terms_.push_back(Term{t.mono, std::move(q)});
  }
  return p;
}

std::optional<Polynomial> Polynomial::divide_exact(const Polynomial& d) const {
  if (d.is_zero()) throw std::domain_error("polynomial division by zero");
  if (is_zero()) return Polynomial{};
  if (d.is_constant()) {
    const Integer c = d.constant_value();
    for (const Term& t : terms_) {
      if (!mpz_divisible_p(t.coeff.get_mpz_t(), c.get_mpz_t())) return std::nullopt;
    }
    return divide_integer(c);
  }
  if (d.size() == 1) {
    const Term& dt = d.terms_.front();
    Polynomial q;
    q.terms_.reserve(terms_.size());
    for (const Term& t : terms_) {
      if (!dt.mono.divides(t.mono) || !mpz_divisible_p(t.coeff.get_mpz_t(), dt.coeff.get_mpz_t())) {
        return std::nullopt;
      }
      Integer c;
      mpz_divexact(c.get_mpz_t(), t.coeff.get_mpz_t(), dt.coeff.get_mpz_t());
      q.terms_.push_back(Term{dt.mono.quotient_of(t.mono), std::move(c)});
    }
    return q;
  }
  const SymbolSet ds = d.symbols();
  for (Symbol v = 0; v < kNumSymbols; ++v) {
    if (((ds >> v) & 1u) && d.degree(v) > degree(v)) return std::nullopt;
  }
  if (d.total_degree() > total_degree()) return std::nullopt;

  std::map<Monomial, Integer, std::greater<>> rem;
  for (const Term& t : terms_) rem.emplace_hint(rem.end(), t.mono, t.coeff);
  const Term& lead = d.terms_.front();
  std::vector<Term> quotient;
  while (!rem.empty()) {
    auto it = rem.begin();
    if (!lead.mono.divides(it->first)) return std::nullopt;
    if (!mpz_divisible_p(it->second.get_mpz_t(), lead.coeff.get_mpz_t())) return std::nullopt;
    Integer qc;
    mpz_divexact(qc.get_mpz_t(), it->second.get_mpz_t(), lead.coeff.get_mpz_t());
    const Monomial qm = lead.mono.quotient_of(it->first);
    rem.erase(it);
    for (std::size_t k = 1; k < d.terms_.size(); ++k) {
      const Term& dt = d.terms_[k];
      const Monomial m = dt.mono * qm;
      auto [pos, inserted] = rem.try_emplace(m);
      mpz_submul(pos->second.get_mpz_t(), qc.get_mpz_t(), dt.coeff.get_mpz_t());
      if (pos->second == 0) rem.erase(pos);
    }
    quotient.push_back(Term{qm, std::move(qc)});
  }
  Polynomial q;
  q.terms_ = std::move(quotient);
  return q;
}

Polynomial Polynomial::divide_or_throw(const Polynomial& d) const {
  auto q = divide_exact(d);
  if (!q) throw std::domain_error("polynomial division is not exact");
  return std::move(*q);
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result(1);
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e > 0) base *= base;
  }
  return result;
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (Term& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

Polynomial& Polynomial::operator+=(const Polynomial& b) {
  if (b.is_zero()) return *this;
  if (is_zero()) return *this = b;
  terms_ = merge(terms_, b.terms_, false);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& b) {
  if (b.is_zero()) return *this;
  terms_ = merge(terms_, b.terms_, true);
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& b) { return *this = *this * b; }

Polynomial Polynomial::times_monomial(const Monomial& m, const Integer& c) const {
  Polynomial p;
  if (c == 0) return p;
  p.terms_.reserve(terms_.size());
  for (const Term& t : terms_) p.terms_.push_back(Term{t.mono * m, t.coeff * c});
  return p;
}

Polynomial Polynomial::scaled(const Integer& c) const { return times_monomial(Monomial{}, c); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.size() == 1) return b.times_monomial(a.terms_[0].mono, a.terms_[0].coeff);
  if (b.size() == 1) return a.times_monomial(b.terms_[0].mono, b.terms_[0].coeff);
  const Polynomial& big = a.size() >= b.size() ? a : b;
  const Polynomial& small = a.size() >= b.size() ? b : a;
  std::unordered_map<Monomial, Integer, MonomialHash> acc;
  acc.reserve(std::min<std::size_t>(big.size() * small.size(), 1u << 22));
  for (const Term& ts : small.terms_) {
    for (const Term& tb : big.terms_) {
      Integer& c = acc[ts.mono * tb.mono];
      mpz_addmul(c.get_mpz_t(), ts.coeff.get_mpz_t(), tb.coeff.get_mpz_t());
    }
  }
  Polynomial p;
  p.terms_.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (c != 0) p.terms_.push_back(Term{m, std::move(c)});
  }
  std::sort(p.terms_.begin(), p.terms_.end(), term_greater);
  return p;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (!(a.terms_[i].mono == b.terms_[i].mono) || a.terms_[i].coeff != b.terms_[i].coeff) return false;
  }
  return true;
}

Rational Polynomial::evaluate(std::span<const Rational, kNumSymbols> values) const {
  const SymbolSet used = symbols();
  std::vector<std::vector<Rational>> powers(kNumSymbols);
  for (Symbol v = 0; v < kNumSymbols; ++v) {
    if (!((used >> v) & 1u)) continue;
    const unsigned d = degree(v);
    powers[v].push_back(Rational(1));
    for (unsigned k = 1; k <= d; ++k) powers[v].push_back(Rational(powers[v].back() * values[v]));
  }
  Rational total(0);
  for (const Term& t : terms_) {
    Rational acc(t.coeff);
    for (Symbol v = 0; v < kNumSymbols; ++v) {
      if (t.mono[v] != 0) acc *= powers[v][t.mono[v]];
    }
    total += acc;
  }
  return total;
}

}  // namespace finsler::algebra
