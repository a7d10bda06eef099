#pragma once

#include <iosfwd>
#include <map>
#include <string>

#include "xbmat/combinatorics.hpp"
#include "xbmat/laurent.hpp"

namespace xbmat {

/// Largest n accepted by p_to_e.
inline constexpr int kMaxPowerSum = 20;

/// Symmetric function in the elementary basis with Laurent-polynomial-in-t
/// coefficients: a finite sum of c_lambda(t) * e_lambda. The empty partition
/// indexes the unit e_() = 1. Zero terms are never stored.
class ESym {
 public:
  using TermMap = std::map<Partition, LaurentPoly>;

  ESym() = default;
  ESym(const LaurentPoly& scalar);  // NOLINT(google-explicit-constructor)
  ESym(long long scalar) : ESym(LaurentPoly(scalar)) {}  // NOLINT(google-explicit-constructor)

  /// e_k, with e_0 = 1.
  static ESym e(int k);
  static ESym basis(const Partition& lambda) { return term(lambda, LaurentPoly(1)); }
  static ESym term(const Partition& lambda, const LaurentPoly& coeff);

  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  LaurentPoly coeff(const Partition& lambda) const;
  void add_term(const Partition& lambda, const LaurentPoly& coeff);

  /// True when every term's partition has size n.
  bool is_homogeneous_of_degree(int n) const;
  bool is_t_free() const;
  bool has_negative_t_exponent() const;

  ESym& operator+=(const ESym& o);
  ESym& operator-=(const ESym& o);
  ESym& operator*=(const ESym& o);
  ESym& operator*=(const LaurentPoly& c);

  friend ESym operator+(ESym a, const ESym& b) { return a += b; }
  friend ESym operator-(ESym a, const ESym& b) { return a -= b; }
  friend ESym operator*(const ESym& a, const ESym& b);
  friend ESym operator*(ESym a, const LaurentPoly& c) { return a *= c; }
  friend ESym operator*(const LaurentPoly& c, ESym a) { return a *= c; }
  friend ESym operator-(ESym a);
  friend bool operator==(const ESym&, const ESym&) = default;

  /// Canonical text, e.g. "(t+1)*e[1,1] - 2t*e[2]".
  std::string to_string() const;

 private:
  TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const ESym& f);

ESym esym_add(const ESym& f, const ESym& g);
ESym esym_mul(const ESym& f, const ESym& g);
ESym esym_scale(const ESym& f, const LaurentPoly& c);

/// e-expansion of the power sum p_n via
///   p_n = sum_{alpha |= n} (-1)^{n - len(alpha)} alpha_1 e_{sort(alpha)}.
/// Requires 1 <= n <= 20; results are cached.
const ESym& p_to_e(int n);

/// p_lambda = prod_k p_{lambda_k}; p_() = 1.
ESym p_partition_to_e(const Partition& lambda);

/// e-basis symmetric function with exact rational coefficients (t already
/// evaluated).
class RationalESym {
 public:
  using TermMap = std::map<Partition, Rational>;

  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Rational coeff(const Partition& lambda) const;
  void add_term(const Partition& lambda, const Rational& c);
  bool is_integral() const;

  friend bool operator==(const RationalESym&, const RationalESym&) = default;

  std::string to_string() const;  // "2*e[2] - 1/2*e[1,1]"

 private:
  TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const RationalESym& f);

/// Evaluates every coefficient at t = v. Throws std::domain_error at a pole.
RationalESym substitute_t(const ESym& f, const Rational& v);

}  // namespace xbmat
