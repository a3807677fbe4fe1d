#include "finsler/algebra/poly_gcd.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <random>
#include <vector>

namespace finsler::algebra {

namespace {

// ---------------------------------------------------------------------------
// Arithmetic modulo the Mersenne prime 2^61 - 1.

constexpr std::uint64_t kPrime = (std::uint64_t{1} << 61) - 1;

std::uint64_t add_mod(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = a + b;
  return r >= kPrime ? r - kPrime : r;
}

std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b) { return a >= b ? a - b : a + kPrime - b; }

__extension__ typedef unsigned __int128 u128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b) {
  const u128 r = static_cast<u128>(a) * b;
  std::uint64_t lo = static_cast<std::uint64_t>(r & kPrime);
  std::uint64_t hi = static_cast<std::uint64_t>(r >> 61);
  return add_mod(lo, hi);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e > 0) {
    if (e & 1u) r = mul_mod(r, a);
    a = mul_mod(a, a);
    e >>= 1u;
  }
  return r;
}

std::uint64_t inv_mod(std::uint64_t a) { return pow_mod(a, kPrime - 2); }

std::uint64_t reduce(const Integer& c) {
  const std::uint64_t r = mpz_fdiv_ui(c.get_mpz_t(), kPrime);
  return r;
}

using ModPoly = std::vector<std::uint64_t>;  // index = degree

void trim(ModPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Remainder of a by b; b non-zero and trimmed.
ModPoly mod_rem(ModPoly a, const ModPoly& b) {
  const std::uint64_t inv_lead = inv_mod(b.back());
  const std::size_t db = b.size() - 1;
  trim(a);
  while (a.size() >= b.size()) {
    const std::uint64_t q = mul_mod(a.back(), inv_lead);
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i <= db; ++i) a[shift + i] = sub_mod(a[shift + i], mul_mod(q, b[i]));
    trim(a);
  }
  return a;
}

std::size_t mod_gcd_degree(ModPoly a, ModPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    ModPoly r = mod_rem(std::move(a), b);
    a = std::move(b);
    b = std::move(r);
  }
  return a.empty() ? 0 : a.size() - 1;
}

// Image of p in Z_prime[x] after substituting point[v] for every other symbol.
ModPoly image(const Polynomial& p, Symbol x, const std::vector<std::vector<std::uint64_t>>& powers) {
  ModPoly out(p.degree(x) + 1, 0);
  for (const Term& t : p.terms()) {
    std::uint64_t acc = reduce(t.coeff);
    for (Symbol v = 0; v < kNumSymbols && acc != 0; ++v) {
      if (v == x || t.mono[v] == 0) continue;
      acc = mul_mod(acc, powers[v][t.mono[v]]);
    }
    out[t.mono[x]] = add_mod(out[t.mono[x]], acc);
  }
  return out;
}

// ---------------------------------------------------------------------------

Polynomial gcd_primitive(const Polynomial& a, const Polynomial& b);

// gcd(p, q) when p does not involve symbol v: the gcd divides every
// coefficient of q with respect to v.
Polynomial gcd_with_coefficients(const Polynomial& p, const Polynomial& q, Symbol v) {
  std::vector<Polynomial> coeffs = q.coefficients(v);
  std::erase_if(coeffs, [](const Polynomial& c) { return c.is_zero(); });
  std::sort(coeffs.begin(), coeffs.end(),
            [](const Polynomial& x, const Polynomial& y) { return x.size() < y.size(); });
  Polynomial g = p;
  for (const Polynomial& c : coeffs) {
    g = gcd(g, c);
    if (g.is_constant()) return Polynomial(1);
  }
  return g.primitive_part();
}

// Content with respect to v up to an integer factor: gcd of the coefficients,
// as a polynomial free of v.
Polynomial content_in(const std::vector<Polynomial>& coeffs) {
  std::vector<const Polynomial*> order;
  for (const auto& c : coeffs) {
    if (!c.is_zero()) order.push_back(&c);
  }
  std::sort(order.begin(), order.end(), [](auto* x, auto* y) { return x->size() < y->size(); });
  Polynomial g;
  for (const Polynomial* c : order) {
    g = gcd(g, *c);
    if (g.is_constant()) return Polynomial(1);
  }
  return g.primitive_part();
}

void trim(std::vector<Polynomial>& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

// Sparse pseudo-remainder in the recursive representation; the scale factor
// is irrelevant because the caller takes primitive parts.
std::vector<Polynomial> pseudo_remainder(std::vector<Polynomial> rem, const std::vector<Polynomial>& divisor) {
  const std::size_t d = divisor.size() - 1;
  const Polynomial& lead = divisor.back();
  trim(rem);
  while (rem.size() > d) {
    const Polynomial lr = rem.back();
    const std::size_t shift = rem.size() - 1 - d;
    for (auto& c : rem) c *= lead;
    for (std::size_t i = 0; i <= d; ++i) rem[shift + i] -= lr * divisor[i];
    trim(rem);
  }
  return rem;
}

std::vector<Polynomial> primitive_in(std::vector<Polynomial> p) {
  Polynomial cont = content_in(p);
  if (p.back().sign() < 0) cont = -cont;
  if (cont == Polynomial(1)) return p;
  for (auto& c : p) c = c.divide_or_throw(cont);
  return p;
}

Polynomial gcd_prs(const Polynomial& a, const Polynomial& b) {
  const SymbolSet shared = a.symbols() & b.symbols();
  Symbol x = 0;
  unsigned best_min = ~0u;
  unsigned best_max = ~0u;
  for (Symbol v = 0; v < kNumSymbols; ++v) {
    if (!((shared >> v) & 1u)) continue;
    const unsigned da = a.degree(v);
    const unsigned db = b.degree(v);
    const unsigned lo = std::min(da, db);
    const unsigned hi = std::max(da, db);
    if (lo < best_min || (lo == best_min && hi < best_max)) {
      best_min = lo;
      best_max = hi;
      x = v;
    }
  }
  std::vector<Polynomial> ca = a.coefficients(x);
  std::vector<Polynomial> cb = b.coefficients(x);
  const Polynomial cont_a = content_in(ca);
  const Polynomial cont_b = content_in(cb);
  const Polynomial cont_g = gcd(cont_a, cont_b);
  for (auto& c : ca) c = c.divide_or_throw(cont_a);
  for (auto& c : cb) c = c.divide_or_throw(cont_b);
  if (ca.size() < cb.size()) std::swap(ca, cb);

  std::vector<Polynomial> r0 = std::move(ca);
  std::vector<Polynomial> r1 = std::move(cb);
  while (true) {
    std::vector<Polynomial> r = pseudo_remainder(r0, r1);
    if (r.empty()) break;
    if (r.size() == 1) {
      r1 = {Polynomial(1)};
      break;
    }
    r0 = std::move(r1);
    r1 = primitive_in(std::move(r));
  }
  const Polynomial g = Polynomial::from_coefficients(x, r1).primitive_part();
  return (g * cont_g).primitive_part();
}

Polynomial gcd_primitive(const Polynomial& a, const Polynomial& b) {
  if (a.is_constant() || b.is_constant()) return Polynomial(1);
  if (a == b) return a;
  if (certified_coprime(a, b)) return Polynomial(1);
  if (b.size() <= a.size()) {
    if (a.divide_exact(b)) return b;
  } else {
    if (b.divide_exact(a)) return a;
  }
  const SymbolSet sa = a.symbols();
  const SymbolSet sb = b.symbols();
  if (const SymbolSet only_a = sa & ~sb; only_a != 0) {
    return gcd_with_coefficients(b, a, static_cast<Symbol>(std::countr_zero(only_a)));
  }
  if (const SymbolSet only_b = sb & ~sa; only_b != 0) {
    return gcd_with_coefficients(a, b, static_cast<Symbol>(std::countr_zero(only_b)));
  }
  return gcd_prs(a, b);
}

}  // namespace

bool certified_coprime(const Polynomial& a, const Polynomial& b) {
  const SymbolSet shared = a.symbols() & b.symbols();
  if (shared == 0) return true;
  std::mt19937_64 rng(0x5eedf1e1d5ULL);
  std::uniform_int_distribution<std::uint64_t> dist(2, kPrime - 1);
  std::vector<std::vector<std::uint64_t>> powers(kNumSymbols);
  const SymbolSet used = a.symbols() | b.symbols();
  for (Symbol x = 0; x < kNumSymbols; ++x) {
    if (!((shared >> x) & 1u)) continue;
    bool proven = false;
    for (int attempt = 0; attempt < 3 && !proven; ++attempt) {
      for (Symbol v = 0; v < kNumSymbols; ++v) {
        if (!((used >> v) & 1u)) continue;
        const unsigned d = std::max(a.degree(v), b.degree(v));
        const std::uint64_t val = dist(rng);
        powers[v].assign(d + 1, 1);
        for (unsigned k = 1; k <= d; ++k) powers[v][k] = mul_mod(powers[v][k - 1], val);
      }
      ModPoly ia = image(a, x, powers);
      ModPoly ib = image(b, x, powers);
      if (ia.back() == 0 || ib.back() == 0) continue;  // unlucky point, retry
      if (mod_gcd_degree(std::move(ia), std::move(ib)) != 0) return false;
      proven = true;
    }
    if (!proven) return false;
  }
  return true;
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero()) return b.sign() < 0 ? -b : b;
  if (b.is_zero()) return a.sign() < 0 ? -a : a;
  Integer c;
  mpz_gcd(c.get_mpz_t(), a.content().get_mpz_t(), b.content().get_mpz_t());
  Polynomial pa = a.primitive_part();
  Polynomial pb = b.primitive_part();
  const Monomial ma = pa.monomial_content();
  const Monomial mb = pb.monomial_content();
  const Monomial mg = Monomial::gcd(ma, mb);
  if (!ma.is_one()) pa = pa.divide_monomial(ma);
  if (!mb.is_one()) pb = pb.divide_monomial(mb);
  return gcd_primitive(pa, pb).times_monomial(mg, c);
}

}  // namespace finsler::algebra
