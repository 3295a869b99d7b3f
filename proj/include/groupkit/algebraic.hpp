#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "groupkit/errors.hpp"

namespace groupkit {

using Rational = boost::multiprecision::cpp_rational;

/// An exact value of the form
///     (a + sum b_D * sqrt(D))  +  i * (a' + sum b'_D * sqrt(D))
/// with rational coefficients and positive square-free D >= 2. The
/// representation is normalized (no zero terms, terms keyed by D), so
/// structural equality is exact value equality.
///
/// This covers every entry of the shipped character tables; values needing
/// general cyclotomic irrationalities are not representable and are rejected
/// at the parsing stage.
class AlgebraicValue {
public:
  using SurdTerms = std::map<std::uint64_t, Rational>;

  AlgebraicValue() = default;
  AlgebraicValue(long long v) : real_rat_(v) {} // NOLINT: implicit by design
  explicit AlgebraicValue(Rational v) : real_rat_(std::move(v)) {}

  /// coeff * sqrt(d); d > 0 need not be square-free, square factors are
  /// pulled out during normalization.
  static AlgebraicValue surd(std::uint64_t d, const Rational &coeff = 1);

  static AlgebraicValue imaginary_unit();

  /// Parses the table-entry grammar, e.g. "3", "-1/2", "r5", "(-1+r5)/2",
  /// "(-1+i*r3)/2". Throws ParseError.
  static AlgebraicValue parse(std::string_view text);

  const Rational &real_rational() const { return real_rat_; }
  const SurdTerms &real_surds() const { return real_surds_; }
  const Rational &imag_rational() const { return imag_rat_; }
  const SurdTerms &imag_surds() const { return imag_surds_; }

  bool is_zero() const;
  bool is_complex() const; // nonzero imaginary component
  bool is_rational() const;
  bool is_integer() const;

  /// Exact rational value, if the value has no surd or imaginary part.
  std::optional<Rational> as_rational() const;

  AlgebraicValue operator-() const;
  AlgebraicValue operator+(const AlgebraicValue &rhs) const;
  AlgebraicValue operator-(const AlgebraicValue &rhs) const;
  AlgebraicValue operator*(const AlgebraicValue &rhs) const;
  AlgebraicValue &operator+=(const AlgebraicValue &rhs);
  AlgebraicValue &operator*=(const AlgebraicValue &rhs);

  /// Division by a rational value (the only divisor shape the evaluators
  /// need). Throws Error for zero or non-rational divisors.
  AlgebraicValue operator/(const Rational &rhs) const;
  AlgebraicValue operator/(const AlgebraicValue &rhs) const;

  /// Complex conjugate.
  AlgebraicValue conj() const;

  /// Canonical rendering in the same grammar parse() accepts.
  std::string str() const;

  friend bool operator==(const AlgebraicValue &,
                         const AlgebraicValue &) = default;

private:
  Rational real_rat_ = 0;
  SurdTerms real_surds_;
  Rational imag_rat_ = 0;
  SurdTerms imag_surds_;
};

} // namespace groupkit
