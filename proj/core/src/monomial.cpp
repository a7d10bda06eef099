#include "xbmat/monomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace xbmat {

MonomialPoly::MonomialPoly(int width) : width_(width) {
  if (width < 1) throw std::invalid_argument("monomial polynomial needs at least one variable");
}

MonomialPoly MonomialPoly::constant(int width, const LaurentPoly& c) {
  MonomialPoly p(width);
  p.add_term(Exponents(static_cast<std::size_t>(width), 0), c);
  return p;
}

MonomialPoly MonomialPoly::variable(int width, int index) {
  if (index < 1 || index > width) throw std::out_of_range("variable index out of range");
  MonomialPoly p(width);
  Exponents exps(static_cast<std::size_t>(width), 0);
  exps[static_cast<std::size_t>(index - 1)] = 1;
  p.add_term(exps, LaurentPoly(1));
  return p;
}

LaurentPoly MonomialPoly::coeff(const Exponents& exps) const {
  auto it = terms_.find(exps);
  return it == terms_.end() ? LaurentPoly() : it->second;
}

void MonomialPoly::add_term(const Exponents& exps, const LaurentPoly& c) {
  if (static_cast<int>(exps.size()) != width_) throw std::invalid_argument("exponent vector width mismatch");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(exps, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void MonomialPoly::check_width(const MonomialPoly& o) const {
  if (o.width_ != width_) throw std::invalid_argument("monomial polynomial width mismatch");
}

MonomialPoly& MonomialPoly::operator+=(const MonomialPoly& o) {
  check_width(o);
  for (const auto& [exps, c] : o.terms_) add_term(exps, c);
  return *this;
}

MonomialPoly& MonomialPoly::operator*=(const LaurentPoly& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [exps, coeff] : terms_) coeff *= c;
  return *this;
}

MonomialPoly operator*(const MonomialPoly& a, const MonomialPoly& b) {
  a.check_width(b);
  MonomialPoly out(a.width_);
  MonomialPoly::Exponents sum(static_cast<std::size_t>(a.width_));
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t k = 0; k < sum.size(); ++k) sum[k] = ea[k] + eb[k];
      out.add_term(sum, ca * cb);
    }
  }
  return out;
}

std::string MonomialPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [exps, c] = *it;
    const bool negative = c.leading_coeff() < 0;
    const LaurentPoly mag = negative ? -c : c;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    std::ostringstream mono;
    bool any = false;
    for (std::size_t k = 0; k < exps.size(); ++k) {
      if (exps[k] == 0) continue;
      if (any) mono << '*';
      any = true;
      mono << 'x' << (k + 1);
      if (exps[k] != 1) mono << '^' << exps[k];
    }
    if (mag == LaurentPoly(1)) {
      os << (any ? mono.str() : "1");
      continue;
    }
    if (mag.terms().size() > 1) {
      os << '(' << mag.to_string() << ')';
    } else {
      os << mag.to_string();
    }
    if (any) os << '*' << mono.str();
  }
  return os.str();
}

MonomialPoly elementary_polynomial(int k, int m) {
  MonomialPoly out(m);
  if (k < 0 || k > m) return out;
  // Walk all k-subsets of {0..m-1} in lexicographic order.
  std::vector<int> pick(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) pick[static_cast<std::size_t>(i)] = i;
  MonomialPoly::Exponents exps(static_cast<std::size_t>(m));
  while (true) {
    std::fill(exps.begin(), exps.end(), 0);
    for (int v : pick) exps[static_cast<std::size_t>(v)] = 1;
    out.add_term(exps, LaurentPoly(1));
    int pos = k - 1;
    while (pos >= 0 && pick[static_cast<std::size_t>(pos)] == m - k + pos) --pos;
    if (pos < 0) break;
    ++pick[static_cast<std::size_t>(pos)];
    for (int q = pos + 1; q < k; ++q) pick[static_cast<std::size_t>(q)] = pick[static_cast<std::size_t>(q - 1)] + 1;
  }
  return out;
}

MonomialPoly expand_monomials(const ESym& f, int m) {
  MonomialPoly out(m);
  std::map<int, MonomialPoly> elementary;
  auto e_of = [&](int k) -> const MonomialPoly& {
    auto it = elementary.find(k);
    if (it == elementary.end()) it = elementary.emplace(k, elementary_polynomial(k, m)).first;
    return it->second;
  };
  for (const auto& [lambda, c] : f.terms()) {
    MonomialPoly prod = MonomialPoly::constant(m, c);
    for (int part : lambda.parts()) {
      prod = prod * e_of(part);
      if (prod.is_zero()) break;
    }
    out += prod;
  }
  return out;
}

}  // namespace xbmat
