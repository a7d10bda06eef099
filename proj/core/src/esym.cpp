#include "xbmat/esym.hpp"

#include <array>
#include <mutex>
#include <optional>
#include <ostream>
#include <stdexcept>

namespace xbmat {

namespace {

std::string basis_name(const Partition& lambda) {
  return lambda.empty() ? std::string() : "e" + lambda.to_string();
}

// Appends one signed term; `magnitude` is the already sign-normalized
// coefficient text, `unit` whether that coefficient is exactly 1 and
// `compound` whether it needs parentheses.
void append_term(std::string& out, bool negative, const std::string& magnitude, bool unit,
                 bool compound, const Partition& lambda) {
  if (out.empty()) {
    if (negative) out += '-';
  } else {
    out += negative ? " - " : " + ";
  }
  const std::string basis = basis_name(lambda);
  if (unit) {
    out += basis.empty() ? "1" : basis;
    return;
  }
  out += compound ? "(" + magnitude + ")" : magnitude;
  if (!basis.empty()) out += "*" + basis;
}

}  // namespace

ESym::ESym(const LaurentPoly& scalar) {
  if (!scalar.is_zero()) terms_.emplace(Partition(), scalar);
}

ESym ESym::e(int k) {
  if (k < 0) throw std::invalid_argument("e_k requires k >= 0");
  if (k == 0) return ESym(1);
  return basis(Partition{k});
}

ESym ESym::term(const Partition& lambda, const LaurentPoly& coeff) {
  ESym f;
  f.add_term(lambda, coeff);
  return f;
}

LaurentPoly ESym::coeff(const Partition& lambda) const {
  auto it = terms_.find(lambda);
  return it == terms_.end() ? LaurentPoly() : it->second;
}

void ESym::add_term(const Partition& lambda, const LaurentPoly& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(lambda, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

bool ESym::is_homogeneous_of_degree(int n) const {
  for (const auto& [lambda, c] : terms_) {
    if (lambda.size() != n) return false;
  }
  return true;
}

bool ESym::is_t_free() const {
  for (const auto& [lambda, c] : terms_) {
    if (!c.is_constant()) return false;
  }
  return true;
}

bool ESym::has_negative_t_exponent() const {
  for (const auto& [lambda, c] : terms_) {
    if (c.has_negative_exponent()) return true;
  }
  return false;
}

ESym& ESym::operator+=(const ESym& o) {
  for (const auto& [lambda, c] : o.terms_) add_term(lambda, c);
  return *this;
}

ESym& ESym::operator-=(const ESym& o) {
  for (const auto& [lambda, c] : o.terms_) add_term(lambda, -c);
  return *this;
}

ESym operator*(const ESym& a, const ESym& b) {
  ESym out;
  for (const auto& [la, ca] : a.terms_) {
    for (const auto& [lb, cb] : b.terms_) out.add_term(la.merged(lb), ca * cb);
  }
  return out;
}

ESym& ESym::operator*=(const ESym& o) { return *this = *this * o; }

ESym& ESym::operator*=(const LaurentPoly& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [lambda, coeff] : terms_) coeff *= c;
  return *this;
}

ESym operator-(ESym a) {
  for (auto& [lambda, c] : a.terms_) c = -c;
  return a;
}

std::string ESym::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [lambda, c] : terms_) {
    const bool negative = c.leading_coeff() < 0;
    const LaurentPoly mag = negative ? -c : c;
    append_term(out, negative, mag.to_string(), mag == LaurentPoly(1), mag.terms().size() > 1, lambda);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const ESym& f) { return os << f.to_string(); }

ESym esym_add(const ESym& f, const ESym& g) { return f + g; }
ESym esym_mul(const ESym& f, const ESym& g) { return f * g; }
ESym esym_scale(const ESym& f, const LaurentPoly& c) { return f * c; }

const ESym& p_to_e(int n) {
  if (n < 1 || n > kMaxPowerSum) {
    throw std::out_of_range("p_to_e: n = " + std::to_string(n) + " outside 1.." +
                            std::to_string(kMaxPowerSum));
  }
  static std::array<std::once_flag, kMaxPowerSum + 1> flags;
  static std::array<std::optional<ESym>, kMaxPowerSum + 1> cache;
  std::call_once(flags[n], [n] {
    ESym sum;
    for_each_composition(n, [&](std::span<const int> alpha) {
      const long long len = static_cast<long long>(alpha.size());
      long long weight = alpha.front() * (((n - len) % 2 == 0) ? 1 : -1);
      sum.add_term(sort_to_partition(alpha), LaurentPoly(weight));
    });
    cache[n] = std::move(sum);
  });
  return *cache[n];
}

ESym p_partition_to_e(const Partition& lambda) {
  ESym out(1);
  for (int part : lambda.parts()) out *= p_to_e(part);
  return out;
}

Rational RationalESym::coeff(const Partition& lambda) const {
  auto it = terms_.find(lambda);
  return it == terms_.end() ? Rational(0) : it->second;
}

void RationalESym::add_term(const Partition& lambda, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(lambda, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

bool RationalESym::is_integral() const {
  for (const auto& [lambda, c] : terms_) {
    if (boost::multiprecision::denominator(c) != 1) return false;
  }
  return true;
}

std::string RationalESym::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [lambda, c] : terms_) {
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    append_term(out, negative, xbmat::to_string(mag), mag == 1, false, lambda);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const RationalESym& f) { return os << f.to_string(); }

RationalESym substitute_t(const ESym& f, const Rational& v) {
  RationalESym out;
  for (const auto& [lambda, c] : f.terms()) out.add_term(lambda, c.evaluate(v));
  return out;
}

}  // namespace xbmat
