#pragma once

#include <map>
#include <string>
#include <vector>

#include "xbmat/esym.hpp"
#include "xbmat/laurent.hpp"

namespace xbmat {

/// Polynomial in the commuting variables x_1..x_m with Laurent-in-t
/// coefficients. Keys are exponent vectors of fixed width m.
class MonomialPoly {
 public:
  using Exponents = std::vector<int>;
  using TermMap = std::map<Exponents, LaurentPoly>;

  explicit MonomialPoly(int width);

  static MonomialPoly constant(int width, const LaurentPoly& c);
  static MonomialPoly variable(int width, int index);  // x_index, 1-based

  int width() const noexcept { return width_; }
  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  LaurentPoly coeff(const Exponents& exps) const;
  void add_term(const Exponents& exps, const LaurentPoly& c);

  MonomialPoly& operator+=(const MonomialPoly& o);
  MonomialPoly& operator*=(const LaurentPoly& c);
  friend MonomialPoly operator+(MonomialPoly a, const MonomialPoly& b) { return a += b; }
  friend MonomialPoly operator*(const MonomialPoly& a, const MonomialPoly& b);
  friend bool operator==(const MonomialPoly&, const MonomialPoly&) = default;

  std::string to_string() const;  // "(t+1)*x1^2 + 2*x1*x2"

 private:
  void check_width(const MonomialPoly& o) const;

  int width_;
  TermMap terms_;
};

/// The elementary symmetric polynomial e_k(x_1..x_m); e_0 = 1, e_k = 0 for k > m.
MonomialPoly elementary_polynomial(int k, int m);

/// Substitutes e_k by its polynomial in m variables and expands exactly.
MonomialPoly expand_monomials(const ESym& f, int m);

}  // namespace xbmat
