#include "finsler/algebra/rat_expr.hpp"

#include <algorithm>
#include <array>
#include <utility>

#include "finsler/algebra/poly_gcd.hpp"

namespace finsler::algebra {

namespace {

enum Group : int { kFromA = 0, kFromB = 1, kDirty = 2, kSettled = 3 };

struct Entry {
  Polynomial base;
  std::array<unsigned, 2> exp{0, 0};
  int group = kDirty;
};

bool needs_check(const Entry& x, const Entry& y) {
  if (x.group == kSettled || y.group == kSettled) return false;
  return !(x.group == y.group && x.group != kDirty);
}

// Makes the bases pairwise coprime while preserving prod(base^exp[k]) for
// both k. Entries of the same clean group are already coprime to each other.
void refine(std::vector<Entry>& es) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < es.size() && !changed; ++i) {
      for (std::size_t j = i + 1; j < es.size() && !changed; ++j) {
        if (!needs_check(es[i], es[j])) continue;
        if (es[i].base == es[j].base) {
          es[i].exp[0] += es[j].exp[0];
          es[i].exp[1] += es[j].exp[1];
          es[i].group = (es[i].group <= kFromB && es[j].group <= kFromB) ? kSettled : kDirty;
          es.erase(es.begin() + static_cast<std::ptrdiff_t>(j));
          changed = true;
          break;
        }
        const Polynomial g = gcd(es[i].base, es[j].base);
        if (g.is_constant()) continue;
        Entry common{g, {es[i].exp[0] + es[j].exp[0], es[i].exp[1] + es[j].exp[1]}, kDirty};
        Entry ri{es[i].base.divide_or_throw(g), es[i].exp, kDirty};
        Entry rj{es[j].base.divide_or_throw(g), es[j].exp, kDirty};
        es.erase(es.begin() + static_cast<std::ptrdiff_t>(j));
        es.erase(es.begin() + static_cast<std::ptrdiff_t>(i));
        es.push_back(std::move(common));
        if (!ri.base.is_constant()) es.push_back(std::move(ri));
        if (!rj.base.is_constant()) es.push_back(std::move(rj));
        changed = true;
      }
    }
  }
}

std::vector<Entry> entries_of(const std::vector<RatExpr::Factor>& fs, int slot, int group) {
  std::vector<Entry> out;
  out.reserve(fs.size());
  for (const auto& f : fs) {
    Entry e{f.base, {0, 0}, group};
    e.exp[static_cast<std::size_t>(slot)] = f.exponent;
    out.push_back(std::move(e));
  }
  return out;
}

Integer int_gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Integer int_lcm(const Integer& a, const Integer& b) {
  Integer g;
  mpz_lcm(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

// Splits a non-zero polynomial into sign * unit * prod(bases): symbols
// dividing every term become their own bases.
struct Split {
  int sign = 1;
  Integer unit{1};
  std::vector<RatExpr::Factor> factors;
};

Split split_denominator(const Polynomial& p) {
  Split out;
  out.sign = p.sign();
  out.unit = p.content();
  Polynomial q = p.primitive_part();
  const Monomial m = q.monomial_content();
  if (!m.is_one()) q = q.divide_monomial(m);
  for (Symbol v = 0; v < kNumSymbols; ++v) {
    if (m[v] != 0) out.factors.push_back({Polynomial::variable(v), m[v]});
  }
  if (!q.is_constant()) out.factors.push_back({std::move(q), 1});
  return out;
}

}  // namespace

RatExpr::RatExpr(long c) : num_(c) {}

RatExpr::RatExpr(const Rational& q) : num_(Integer(q.get_num())), unit_(q.get_den()) {}

RatExpr::RatExpr(Polynomial p) : num_(std::move(p)) {}

RatExpr::RatExpr(Polynomial num, Integer unit, std::vector<Factor> factors)
    : num_(std::move(num)), unit_(std::move(unit)), factors_(std::move(factors)) {}

RatExpr RatExpr::fraction(const Polynomial& num, const Polynomial& den) {
  if (den.is_zero()) throw DivisionByZero();
  if (num.is_zero()) return {};
  Split sp = split_denominator(den);
  RatExpr out(sp.sign < 0 ? -num : num, std::move(sp.unit), std::move(sp.factors));
  out.cancel_all();
  out.reduce_integers();
  return out;
}

RatExpr RatExpr::symbol(Symbol v) { return RatExpr(Polynomial::variable(v)); }

RatExpr RatExpr::b2() { return RatExpr(Polynomial::variable(kU, 2)); }

RatExpr RatExpr::coefficient_function(int index, int order) {
  if (index < 0 || index >= kMaxCoeffFunctions || order < 0 || order > kMaxCoeffDerivative) {
    throw AlgebraError("coefficient function index or derivative order out of range");
  }
  return symbol(coeff_symbol(index, order));
}

Polynomial RatExpr::denominator() const {
  Polynomial d(unit_);
  for (const Factor& f : factors_) d *= f.base.pow(f.exponent);
  return d;
}

std::optional<Rational> RatExpr::as_rational() const {
  if (!factors_.empty() || !num_.is_constant()) return std::nullopt;
  Rational q(num_.constant_value(), unit_);
  q.canonicalize();
  return q;
}

SymbolSet RatExpr::symbols() const {
  SymbolSet s = num_.symbols();
  for (const Factor& f : factors_) s |= f.base.symbols();
  return s;
}

void RatExpr::reduce_integers() {
  if (num_.is_zero()) {
    unit_ = 1;
    factors_.clear();
    return;
  }
  const Integer g = int_gcd(num_.content(), unit_);
  if (g != 1) {
    num_ = num_.divide_integer(g);
    unit_ /= g;
  }
}

void RatExpr::cancel_all() {
  std::vector<std::size_t> all(factors_.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  cancel(std::move(all));
}

void RatExpr::cancel(std::vector<std::size_t> candidates) {
  if (num_.is_zero()) {
    factors_.clear();
    return;
  }
  std::vector<char> pending(factors_.size(), 0);
  for (std::size_t i : candidates) pending[i] = 1;
  std::size_t i = 0;
  while (i < factors_.size()) {
    if (!pending[i]) {
      ++i;
      continue;
    }
    Factor& f = factors_[i];
    bool split = false;
    while (f.exponent > 0) {
      const Polynomial g = gcd(num_, f.base);
      if (g.is_constant()) break;
      if (g == f.base) {
        num_ = num_.divide_or_throw(f.base);
        --f.exponent;
        continue;
      }
      // Proper divisor: replace the base by a coprime refinement of g and
      // base / g, all of which must be re-examined.
      std::vector<Entry> parts{{g, {f.exponent, 0}, kDirty}, {f.base.divide_or_throw(g), {f.exponent, 0}, kDirty}};
      refine(parts);
      factors_.erase(factors_.begin() + static_cast<std::ptrdiff_t>(i));
      pending.erase(pending.begin() + static_cast<std::ptrdiff_t>(i));
      for (Entry& e : parts) {
        factors_.push_back({std::move(e.base), e.exp[0]});
        pending.push_back(1);
      }
      split = true;
      break;
    }
    if (split) continue;
    pending[i] = 0;
    ++i;
  }
  std::erase_if(factors_, [](const Factor& f) { return f.exponent == 0; });
}

RatExpr RatExpr::inverse() const {
  if (num_.is_zero()) throw DivisionByZero();
  Split sp = split_denominator(num_);
  Polynomial new_num = denominator();
  if (sp.sign < 0) new_num = -new_num;
  return RatExpr(std::move(new_num), std::move(sp.unit), std::move(sp.factors));
}

RatExpr RatExpr::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  if (e == 0) return RatExpr(1);
  if (e == 1) return *this;
  const auto ue = static_cast<unsigned>(e);
  Integer unit;
  mpz_pow_ui(unit.get_mpz_t(), unit_.get_mpz_t(), ue);
  std::vector<Factor> fs = factors_;
  for (Factor& f : fs) f.exponent *= ue;
  return RatExpr(num_.pow(ue), std::move(unit), std::move(fs));
}

RatExpr RatExpr::operator-() const { return RatExpr(-num_, unit_, factors_); }

RatExpr RatExpr::combine(const RatExpr& a, const RatExpr& b, bool add) {
  if (b.is_zero()) return a;
  if (a.is_zero()) return add ? b : -b;
  const Integer unit = int_lcm(a.unit_, b.unit_);
  const Integer sa = unit / a.unit_;
  const Integer sb = unit / b.unit_;
  if (a.factors_.empty() && b.factors_.empty()) {
    Polynomial num = add ? a.num_.scaled(sa) + b.num_.scaled(sb) : a.num_.scaled(sa) - b.num_.scaled(sb);
    RatExpr out(std::move(num), unit, {});
    out.reduce_integers();
    return out;
  }
  std::vector<Entry> es = entries_of(a.factors_, 0, kFromA);
  std::vector<Entry> eb = entries_of(b.factors_, 1, kFromB);
  es.insert(es.end(), std::make_move_iterator(eb.begin()), std::make_move_iterator(eb.end()));
  refine(es);

  Polynomial ma(sa);
  Polynomial mb(sb);
  std::vector<Factor> fs;
  std::vector<std::size_t> candidates;
  for (Entry& e : es) {
    const unsigned hi = std::max(e.exp[0], e.exp[1]);
    if (hi > e.exp[0]) ma *= e.base.pow(hi - e.exp[0]);
    if (hi > e.exp[1]) mb *= e.base.pow(hi - e.exp[1]);
    if (e.exp[0] == e.exp[1]) candidates.push_back(fs.size());
    fs.push_back({std::move(e.base), hi});
  }
  Polynomial num = a.num_ * ma;
  if (add) {
    num += b.num_ * mb;
  } else {
    num -= b.num_ * mb;
  }
  RatExpr out(std::move(num), unit, std::move(fs));
  out.cancel(std::move(candidates));
  out.reduce_integers();
  return out;
}

RatExpr operator+(const RatExpr& a, const RatExpr& b) { return RatExpr::combine(a, b, true); }

RatExpr operator-(const RatExpr& a, const RatExpr& b) { return RatExpr::combine(a, b, false); }

RatExpr operator*(const RatExpr& a, const RatExpr& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.factors_.empty() && b.factors_.empty()) {
    RatExpr out(a.num_ * b.num_, a.unit_ * b.unit_, {});
    out.reduce_integers();
    return out;
  }
  // Cross-cancel a's numerator with b's denominator and vice versa; the
  // halves are then coprime and only the denominators need merging.
  RatExpr x(a.num_, b.unit_, b.factors_);
  x.cancel_all();
  x.reduce_integers();
  RatExpr y(b.num_, a.unit_, a.factors_);
  y.cancel_all();
  y.reduce_integers();

  std::vector<Entry> es = entries_of(x.factors_, 0, kFromA);
  std::vector<Entry> ey = entries_of(y.factors_, 1, kFromB);
  es.insert(es.end(), std::make_move_iterator(ey.begin()), std::make_move_iterator(ey.end()));
  refine(es);
  std::vector<RatExpr::Factor> fs;
  fs.reserve(es.size());
  for (Entry& e : es) fs.push_back({std::move(e.base), e.exp[0] + e.exp[1]});
  return RatExpr(x.num_ * y.num_, x.unit_ * y.unit_, std::move(fs));
}

RatExpr operator/(const RatExpr& a, const RatExpr& b) { return a * b.inverse(); }

bool operator==(const RatExpr& a, const RatExpr& b) {
  if (a.num_ != b.num_ || a.unit_ != b.unit_) return false;
  if (a.factors_.size() == b.factors_.size()) {
    bool same = true;
    for (std::size_t i = 0; i < a.factors_.size() && same; ++i) {
      same = a.factors_[i].exponent == b.factors_[i].exponent && a.factors_[i].base == b.factors_[i].base;
    }
    if (same) return true;
  }
  return a.denominator() == b.denominator();
}

RatExpr RatExpr::partial(Symbol v) const {
  const Polynomial dn = num_.derivative(v);
  std::vector<std::size_t> dep;
  std::vector<Polynomial> dbase;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    Polynomial d = factors_[i].base.derivative(v);
    if (!d.is_zero()) {
      dep.push_back(i);
      dbase.push_back(std::move(d));
    }
  }
  if (dep.empty()) {
    if (dn.is_zero()) return {};
    RatExpr out(dn, unit_, factors_);
    out.cancel_all();
    out.reduce_integers();
    return out;
  }
  // d(N / prod f^e) = (N' P - N sum e_i f_i' P / f_i) / prod f^(e + [i dep]),
  // with P the product of the dependent bases.
  const std::size_t k = dep.size();
  std::vector<Polynomial> prefix(k + 1, Polynomial(1));
  std::vector<Polynomial> suffix(k + 1, Polynomial(1));
  for (std::size_t i = 0; i < k; ++i) prefix[i + 1] = prefix[i] * factors_[dep[i]].base;
  for (std::size_t i = k; i-- > 0;) suffix[i] = suffix[i + 1] * factors_[dep[i]].base;
  Polynomial sum;
  for (std::size_t i = 0; i < k; ++i) {
    sum += (prefix[i] * suffix[i + 1]) * dbase[i].scaled(Integer(factors_[dep[i]].exponent));
  }
  Polynomial num = dn * prefix[k] - num_ * sum;
  std::vector<Factor> fs = factors_;
  for (std::size_t i : dep) ++fs[i].exponent;
  RatExpr out(std::move(num), unit_, std::move(fs));
  out.cancel_all();
  out.reduce_integers();
  return out;
}

Rational RatExpr::evaluate(std::span<const Rational, kNumSymbols> values) const {
  Rational den(unit_);
  for (const Factor& f : factors_) {
    const Rational b = f.base.evaluate(values);
    if (b == 0) throw PoleError("denominator vanishes at the evaluation point");
    Rational p = 1;
    for (unsigned k = 0; k < f.exponent; ++k) p *= b;
    den *= p;
  }
  Rational out = num_.evaluate(values) / den;
  out.canonicalize();
  return out;
}

RatExpr d_ds(const RatExpr& a) { return a.partial(kS); }

RatExpr d_db2(const RatExpr& a) {
  const SymbolSet used = a.symbols();
  RatExpr out;
  if ((used >> kU) & 1u) out = a.partial(kU) / (RatExpr(2) * RatExpr::u());
  for (Symbol v = kFirstCoeffSymbol; v < kNumSymbols; ++v) {
    if (!((used >> v) & 1u)) continue;
    if (coeff_order(v) >= kMaxCoeffDerivative) {
      throw AlgebraError("coefficient function derivative beyond the tracked order");
    }
    out += a.partial(v) * RatExpr::symbol(static_cast<Symbol>(v + 1));
  }
  return out;
}

std::vector<RatExpr> coeffs_in_s(const RatExpr& a) {
  for (const auto& f : a.denominator_factors()) {
    if (f.base.depends_on(kS)) throw NotPolynomial("s occurs in the denominator");
  }
  if (a.is_zero()) return {};
  const std::vector<Polynomial> cs = a.numerator().coefficients(kS);
  const RatExpr inv_den = RatExpr(Polynomial(1)) / RatExpr::fraction(a.denominator(), Polynomial(1));
  std::vector<RatExpr> out;
  out.reserve(cs.size());
  for (const Polynomial& c : cs) out.push_back(RatExpr(c) * inv_den);
  return out;
}

Polynomial numerator_normalized(const RatExpr& a) { return a.numerator().primitive_part(); }

RatExpr scaled_numerator(const RatExpr& a) {
  return RatExpr(a.numerator()) / RatExpr(Rational(a.denominator_unit()));
}

Rational eval_rational(const RatExpr& a, const Rational& s, const Rational& u, const Rational& c,
                       const Rational& t) {
  if (a.symbols() >> kFirstCoeffSymbol) {
    throw AlgebraError("expression involves generic coefficient functions");
  }
  std::array<Rational, kNumSymbols> vals{};
  vals[kS] = s;
  vals[kU] = u;
  vals[kC] = c;
  vals[kT] = t;
  return a.evaluate(vals);
}

double eval_double(const RatExpr& a, double s, double u, double c, double t) {
  if (a.symbols() >> kFirstCoeffSymbol) {
    throw AlgebraError("expression involves generic coefficient functions");
  }
  std::array<double, kNumSymbols> vals{};
  vals[kS] = s;
  vals[kU] = u;
  vals[kC] = c;
  vals[kT] = t;
  return a.evaluate_as<double>(vals);
}

namespace {

RatExpr substitute_poly(const Polynomial& p, Symbol v, const RatExpr& value) {
  if (!p.depends_on(v)) return RatExpr(p);
  const std::vector<Polynomial> cs = p.coefficients(v);
  RatExpr acc;
  for (std::size_t k = cs.size(); k-- > 0;) acc = acc * value + RatExpr(cs[k]);
  return acc;
}

}  // namespace

RatExpr substitute(const RatExpr& a, Symbol v, const RatExpr& value) {
  if (!a.depends_on(v)) return a;
  RatExpr den(Rational(a.denominator_unit()));
  for (const auto& f : a.denominator_factors()) {
    den *= substitute_poly(f.base, v, value).pow(static_cast<int>(f.exponent));
  }
  return substitute_poly(a.numerator(), v, value) / den;
}

}  // namespace finsler::algebra
