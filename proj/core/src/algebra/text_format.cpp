#include "finsler/algebra/text_format.hpp"

#include <cctype>

namespace finsler::algebra {

namespace {

void append_term(std::string& out, const Term& t) {
  out += t.coeff.get_str();
  static constexpr Symbol kBase[] = {kS, kU, kC, kT};
  for (Symbol v : kBase) {
    out += '*';
    out += symbol_name(v);
    out += '^';
    out += std::to_string(t.mono[v]);
  }
  for (Symbol v = kFirstCoeffSymbol; v < kNumSymbols; ++v) {
    if (t.mono[v] == 0) continue;
    out += '*';
    out += symbol_name(v);
    out += '^';
    out += std::to_string(t.mono[v]);
  }
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Polynomial polynomial() {
    std::vector<Term> terms;
    skip_space();
    if (at_end()) fail("empty polynomial");
    bool negative = false;
    if (peek() == '+' || peek() == '-') negative = (get() == '-');
    while (true) {
      Term t = term();
      if (negative) t.coeff = -t.coeff;
      terms.push_back(std::move(t));
      skip_space();
      if (at_end()) break;
      const char c = peek();
      if (c != '+' && c != '-') break;
      get();
      negative = (c == '-');
      skip_space();
      // Signed coefficients after '+' ("+ -3*s^1") are accepted.
      if (!at_end() && (peek() == '-' || peek() == '+')) {
        if (get() == '-') negative = !negative;
      }
    }
    return Polynomial::from_terms(std::move(terms));
  }

  bool consume(std::string_view word) {
    skip_space();
    if (text_.substr(pos_, word.size()) == word) {
      pos_ += word.size();
      return true;
    }
    return false;
  }

  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_));
  }

 private:
  Term term() {
    Term t{Monomial(), Integer(1)};
    while (true) {
      skip_space();
      if (at_end()) fail("expected a factor");
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        t.coeff *= integer();
      } else if (std::isalpha(static_cast<unsigned char>(peek()))) {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        const std::string_view name = text_.substr(start, pos_ - start);
        const auto sym = parse_symbol(name);
        if (!sym) fail("unknown symbol '" + std::string(name) + "'");
        unsigned e = 1;
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == '^') {
          ++pos_;
          skip_space();
          const Integer ei = integer();
          if (ei > 255) fail("exponent too large");
          e = static_cast<unsigned>(ei.get_ui());
        }
        t.mono = t.mono * Monomial::variable(*sym, e);
      } else {
        fail("unexpected character '" + std::string(1, peek()) + "'");
      }
      skip_space();
      if (pos_ < text_.size() && text_[pos_] == '*') {
        ++pos_;
        continue;
      }
      return t;
    }
  }

  Integer integer() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  char peek() const { return text_[pos_]; }
  char get() { return text_[pos_++]; }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string to_text(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const Term& t : p.terms()) {
    if (!first) out += " + ";
    first = false;
    append_term(out, t);
  }
  return out;
}

std::string to_text(const RatExpr& a) {
  return "num: " + to_text(a.numerator()) + " / den: " + to_text(a.denominator());
}

Polynomial parse_polynomial(std::string_view text) {
  Parser p(text);
  Polynomial out = p.polynomial();
  if (!p.at_end()) p.fail("trailing input");
  return out;
}

RatExpr parse_rat_expr(std::string_view text) {
  Parser p(text);
  if (!p.consume("num:")) {
    Polynomial out = p.polynomial();
    if (!p.at_end()) p.fail("trailing input");
    return RatExpr(std::move(out));
  }
  Polynomial num = p.polynomial();
  if (!p.consume("/")) p.fail("expected '/'");
  if (!p.consume("den:")) p.fail("expected 'den:'");
  Polynomial den = p.polynomial();
  if (!p.at_end()) p.fail("trailing input");
  if (den.is_zero()) throw DivisionByZero();
  return RatExpr::fraction(num, den);
}

}  // namespace finsler::algebra
