#pragma once

#include <iosfwd>
#include <map>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace xbmat {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Parses "-3", "7/2" and similar into an exact rational.
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& q);

/// Univariate Laurent polynomial in t with arbitrary-precision integer
/// coefficients. Zero coefficients are never stored; the zero polynomial has
/// no terms.
class LaurentPoly {
 public:
  using TermMap = std::map<int, Integer>;

  LaurentPoly() = default;
  LaurentPoly(long long constant);  // NOLINT(google-explicit-constructor)
  LaurentPoly(const Integer& constant);  // NOLINT(google-explicit-constructor)

  static LaurentPoly monomial(const Integer& coeff, int exponent);
  static LaurentPoly t(int exponent = 1) { return monomial(1, exponent); }

  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const;
  Integer coeff(int exponent) const;
  /// Only meaningful when non-zero.
  int min_exponent() const;
  int max_exponent() const;
  bool has_negative_exponent() const { return !is_zero() && min_exponent() < 0; }
  const Integer& leading_coeff() const;

  /// Exact value at t = v. Throws std::domain_error if v = 0 and a negative
  /// exponent is present.
  Rational evaluate(const Rational& v) const;

  LaurentPoly pow(unsigned k) const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  /// Adds c * t^e.
  void add_term(const Integer& c, int exponent);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(LaurentPoly a);
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  /// Expanded, decreasing exponents, no spaces: "3t^2+9t", "1+t^-1", "-t".
  std::string to_string() const;

 private:
  TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

}  // namespace xbmat
