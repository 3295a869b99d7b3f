#include "groupkit/algebraic.hpp"

#include <cctype>
#include <sstream>

namespace groupkit {

namespace {

/// n = s^2 * d with d square-free; returns (s, d).
std::pair<std::uint64_t, std::uint64_t> squarefree_split(std::uint64_t n) {
  std::uint64_t s = 1, d = 1;
  for (std::uint64_t q = 2; q * q <= n; ++q) {
    if (n % q != 0) continue;
    std::uint64_t e = 0;
    while (n % q == 0) {
      n /= q;
      ++e;
    }
    for (std::uint64_t i = 0; i + 1 < e; i += 2) s *= q;
    if (e % 2 == 1) d *= q;
  }
  d *= n; // leftover prime
  return {s, d};
}

void accumulate(AlgebraicValue::SurdTerms &terms, std::uint64_t d,
                const Rational &coeff) {
  auto it = terms.find(d);
  if (it == terms.end()) {
    if (coeff != 0) terms.emplace(d, coeff);
    return;
  }
  it->second += coeff;
  if (it->second == 0) terms.erase(it);
}

/// (rat1 + surds1) * (rat2 + surds2) over the reals.
void real_product(const Rational &a, const AlgebraicValue::SurdTerms &as,
                  const Rational &b, const AlgebraicValue::SurdTerms &bs,
                  Rational &out_rat, AlgebraicValue::SurdTerms &out_surds) {
  out_rat += a * b;
  for (const auto &[d, c] : bs) accumulate(out_surds, d, a * c);
  for (const auto &[d, c] : as) accumulate(out_surds, d, b * c);
  for (const auto &[d1, c1] : as) {
    for (const auto &[d2, c2] : bs) {
      auto [s, d] = squarefree_split(d1 * d2);
      Rational coeff = c1 * c2 * s;
      if (d == 1)
        out_rat += coeff;
      else
        accumulate(out_surds, d, coeff);
    }
  }
}

} // namespace

AlgebraicValue AlgebraicValue::surd(std::uint64_t d, const Rational &coeff) {
  if (d == 0) throw Error("sqrt argument must be positive");
  AlgebraicValue v;
  auto [s, sf] = squarefree_split(d);
  Rational c = coeff * s;
  if (sf == 1)
    v.real_rat_ = c;
  else if (c != 0)
    v.real_surds_.emplace(sf, c);
  return v;
}

AlgebraicValue AlgebraicValue::imaginary_unit() {
  AlgebraicValue v;
  v.imag_rat_ = 1;
  return v;
}

bool AlgebraicValue::is_zero() const {
  return real_rat_ == 0 && real_surds_.empty() && imag_rat_ == 0 &&
         imag_surds_.empty();
}

bool AlgebraicValue::is_complex() const {
  return imag_rat_ != 0 || !imag_surds_.empty();
}

bool AlgebraicValue::is_rational() const {
  return real_surds_.empty() && !is_complex();
}

bool AlgebraicValue::is_integer() const {
  return is_rational() && denominator(real_rat_) == 1;
}

std::optional<Rational> AlgebraicValue::as_rational() const {
  if (!is_rational()) return std::nullopt;
  return real_rat_;
}

AlgebraicValue AlgebraicValue::operator-() const {
  AlgebraicValue v;
  v.real_rat_ = -real_rat_;
  v.imag_rat_ = -imag_rat_;
  for (const auto &[d, c] : real_surds_) v.real_surds_.emplace(d, -c);
  for (const auto &[d, c] : imag_surds_) v.imag_surds_.emplace(d, -c);
  return v;
}

AlgebraicValue AlgebraicValue::operator+(const AlgebraicValue &rhs) const {
  AlgebraicValue v = *this;
  v += rhs;
  return v;
}

AlgebraicValue &AlgebraicValue::operator+=(const AlgebraicValue &rhs) {
  real_rat_ += rhs.real_rat_;
  imag_rat_ += rhs.imag_rat_;
  for (const auto &[d, c] : rhs.real_surds_) accumulate(real_surds_, d, c);
  for (const auto &[d, c] : rhs.imag_surds_) accumulate(imag_surds_, d, c);
  return *this;
}

AlgebraicValue AlgebraicValue::operator-(const AlgebraicValue &rhs) const {
  return *this + (-rhs);
}

AlgebraicValue AlgebraicValue::operator*(const AlgebraicValue &rhs) const {
  // (x + iy)(u + iv) = (xu - yv) + i(xv + yu)
  AlgebraicValue v;
  real_product(real_rat_, real_surds_, rhs.real_rat_, rhs.real_surds_,
               v.real_rat_, v.real_surds_);
  {
    Rational neg;
    SurdTerms neg_surds;
    real_product(imag_rat_, imag_surds_, rhs.imag_rat_, rhs.imag_surds_, neg,
                 neg_surds);
    v.real_rat_ -= neg;
    for (const auto &[d, c] : neg_surds) accumulate(v.real_surds_, d, -c);
  }
  real_product(real_rat_, real_surds_, rhs.imag_rat_, rhs.imag_surds_,
               v.imag_rat_, v.imag_surds_);
  real_product(imag_rat_, imag_surds_, rhs.real_rat_, rhs.real_surds_,
               v.imag_rat_, v.imag_surds_);
  return v;
}

AlgebraicValue &AlgebraicValue::operator*=(const AlgebraicValue &rhs) {
  *this = *this * rhs;
  return *this;
}

AlgebraicValue AlgebraicValue::operator/(const Rational &rhs) const {
  if (rhs == 0) throw Error("division by zero");
  AlgebraicValue v;
  v.real_rat_ = real_rat_ / rhs;
  v.imag_rat_ = imag_rat_ / rhs;
  for (const auto &[d, c] : real_surds_) v.real_surds_.emplace(d, c / rhs);
  for (const auto &[d, c] : imag_surds_) v.imag_surds_.emplace(d, c / rhs);
  return v;
}

AlgebraicValue AlgebraicValue::operator/(const AlgebraicValue &rhs) const {
  auto r = rhs.as_rational();
  if (!r) throw Error("division is only supported by rational values");
  return *this / *r;
}

AlgebraicValue AlgebraicValue::conj() const {
  AlgebraicValue v = *this;
  v.imag_rat_ = -v.imag_rat_;
  for (auto &[d, c] : v.imag_surds_) c = -c;
  return v;
}

// ---------------------------------------------------------------------------
// parsing

namespace {

struct Parser {
  std::string_view text;
  std::size_t pos = 0;

  [[noreturn]] void fail(const std::string &msg) const {
    throw ParseError("algebraic value \"" + std::string(text) + "\": " + msg);
  }

  void skip_ws() {
    while (pos < text.size() &&
           std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }

  bool peek(char c) {
    skip_ws();
    return pos < text.size() && text[pos] == c;
  }

  bool eat(char c) {
    if (!peek(c)) return false;
    ++pos;
    return true;
  }

  boost::multiprecision::cpp_int integer() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() &&
           std::isdigit(static_cast<unsigned char>(text[pos])))
      ++pos;
    if (pos == start) fail("expected a digit");
    return boost::multiprecision::cpp_int(
        std::string(text.substr(start, pos - start)));
  }

  AlgebraicValue primary() {
    skip_ws();
    if (pos >= text.size()) fail("unexpected end of input");
    char c = text[pos];
    if (c == '(') {
      ++pos;
      AlgebraicValue v = expr();
      if (!eat(')')) fail("expected ')'");
      return maybe_adjacent(v);
    }
    if (c == 'r') {
      ++pos;
      auto d = integer();
      if (d <= 0 || d > 1000000000) fail("sqrt argument out of range");
      return maybe_adjacent(
          AlgebraicValue::surd(d.convert_to<std::uint64_t>()));
    }
    if (c == 'i') {
      ++pos;
      return maybe_adjacent(AlgebraicValue::imaginary_unit());
    }
    if (std::isdigit(static_cast<unsigned char>(c)))
      return maybe_adjacent(AlgebraicValue(Rational(integer())));
    fail(std::string("unexpected character '") + c + "'");
  }

  /// Implicit multiplication: "2r5", "3i", "2(1+r5)".
  AlgebraicValue maybe_adjacent(AlgebraicValue v) {
    skip_ws();
    while (pos < text.size() &&
           (text[pos] == 'r' || text[pos] == 'i' || text[pos] == '(')) {
      v = v * primary();
      skip_ws();
    }
    return v;
  }

  AlgebraicValue unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return primary();
  }

  AlgebraicValue term() {
    AlgebraicValue v = unary();
    while (true) {
      if (eat('*')) {
        v = v * unary();
      } else if (eat('/')) {
        AlgebraicValue d = unary();
        auto r = d.as_rational();
        if (!r) fail("divisor must be rational");
        if (*r == 0) fail("division by zero");
        v = v / *r;
      } else {
        return v;
      }
    }
  }

  AlgebraicValue expr() {
    AlgebraicValue v = term();
    while (true) {
      if (eat('+'))
        v += term();
      else if (eat('-'))
        v += -term();
      else
        return v;
    }
  }
};

void render_rational(std::ostringstream &os, const Rational &q) {
  os << numerator(q).str();
  if (denominator(q) != 1) os << '/' << denominator(q).str();
}

/// Appends one product term like "3/2*r5" or "r5" with a leading sign when
/// `leading` is false.
void render_term(std::ostringstream &os, bool &leading, const Rational &coeff,
                 const std::string &symbol) {
  Rational c = coeff;
  if (c < 0) {
    os << '-';
    c = -c;
  } else if (!leading) {
    os << '+';
  }
  leading = false;
  if (symbol.empty()) {
    render_rational(os, c);
    return;
  }
  if (c != 1) {
    render_rational(os, c);
    os << '*';
  }
  os << symbol;
}

} // namespace

AlgebraicValue AlgebraicValue::parse(std::string_view text) {
  Parser p{text};
  AlgebraicValue v = p.expr();
  p.skip_ws();
  if (p.pos != text.size()) p.fail("trailing input");
  return v;
}

std::string AlgebraicValue::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool leading = true;
  if (real_rat_ != 0) render_term(os, leading, real_rat_, "");
  for (const auto &[d, c] : real_surds_)
    render_term(os, leading, c, "r" + std::to_string(d));
  if (imag_rat_ != 0) render_term(os, leading, imag_rat_, "i");
  for (const auto &[d, c] : imag_surds_)
    render_term(os, leading, c, "i*r" + std::to_string(d));
  return os.str();
}

} // namespace groupkit
