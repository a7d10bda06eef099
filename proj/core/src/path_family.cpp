#include "xbmat/path_family.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "xbmat/combinatorics.hpp"

namespace xbmat {

namespace {

int parity_sign(int k) { return (k % 2 == 0) ? 1 : -1; }

LaurentPoly neg_t_power(int k) { return LaurentPoly::monomial(parity_sign(k), k); }

void check_range(const char* what, int i, int j, int limit) {
  if (i < 1 || j < 1 || i > limit || j > limit) {
    throw std::out_of_range(std::string(what) + ": indices (" + std::to_string(i) + "," + std::to_string(j) +
                            ") outside 1.." + std::to_string(limit));
  }
}

}  // namespace

ESym a_path(int i, int j) {
  check_range("a_path", i, j, kMaxPathFamilyIndex);
  ESym out;
  for_each_composition_last_at_least(i + j - 1, j, [&](std::span<const int> alpha) {
    const int len = static_cast<int>(alpha.size());
    LaurentPoly coeff = LaurentPoly(alpha.front()) * neg_t_power(i - len);
    for (std::size_t k = 1; k < alpha.size(); ++k) coeff *= LaurentPoly(alpha[k]) + LaurentPoly::t();
    out.add_term(sort_to_partition(alpha), coeff);
  });
  return out;
}

ESym b_path(int i, int j) {
  check_range("b_path", i, j, kMaxPathFamilyIndex);
  ESym out;
  if (i > j) return out;
  for_each_composition(j - i, [&](std::span<const int> alpha) {
    const int len = static_cast<int>(alpha.size());
    LaurentPoly coeff = neg_t_power(j - len - 1);
    for (int a : alpha) coeff *= LaurentPoly(a) + LaurentPoly::t();
    out.add_term(sort_to_partition(alpha), coeff);
  });
  return out;
}

ESym b_path_inv(int i, int j) {
  check_range("b_path_inv", i, j, kMaxPathFamilyIndex);
  if (i > j) return ESym();
  // (-t)^{-i} (i - j - t)
  const LaurentPoly coeff = LaurentPoly::monomial(parity_sign(i), -i) * (LaurentPoly(i - j) - LaurentPoly::t());
  return ESym::e(j - i) * coeff;
}

ESym k_matrix(int i, int j) {
  check_range("k_matrix", i, j, kMaxKIndex);
  ESym out;
  for (int k = std::max(i, j); k <= i + j - 1; ++k) {
    out += ESym::e(k) * ESym::e(i + j - k - 1) * LaurentPoly(2 * k - i - j + 1);
  }
  return out;
}

Block k_block(int size) {
  if (size < 1 || size > kMaxKIndex) throw std::out_of_range("k_block: size outside 1..32");
  Block out(size, size);
  for (int i = 1; i <= size; ++i) {
    for (int j = 1; j <= size; ++j) out.at(i, j) = k_matrix(i, j);
  }
  return out;
}

ESym k_from_path_family(int i, int j) {
  check_range("k_from_path_family", i, j, kMaxPathFamilyIndex);
  ESym out;
  for (int k = 1; k <= j; ++k) out += a_path(k, i) * b_path_inv(k, j);
  return out;
}

ReversalBlocks reversal_blocks(const Multigraph& g, int size) {
  if (size < 1 || size > kMaxReversalSize) {
    throw std::out_of_range("reversal check: size outside 1.." + std::to_string(kMaxReversalSize));
  }
  const int n = g.vertex_count();
  if (n + size - 1 > kMaxKIndex) {
    throw std::out_of_range("reversal check: graph too large for the K window");
  }
  const TutteMatrix m(RootedGraph::standard(g));
  const TutteMatrix m_rev(RootedGraph::standard(reverse(g)));
  ReversalBlocks out{Block(size, size), Block(size, size)};
  for (int i = 1; i <= size; ++i) {
    for (int j = 1; j <= size; ++j) {
      // M_rev(k, j) vanishes for k >= n + j, M(k, i) for k >= n + i.
      ESym left;
      for (int k = 1; k <= n + j - 1; ++k) {
        ESym mk = m_rev.entry(k, j);
        if (!mk.is_zero()) left += k_matrix(i, k) * mk;
      }
      ESym right;
      for (int k = 1; k <= n + i - 1; ++k) {
        ESym mk = m.entry(k, i);
        if (!mk.is_zero()) right += mk * k_matrix(k, j);
      }
      out.k_times_m_rev.at(i, j) = std::move(left);
      out.m_t_times_k.at(i, j) = std::move(right);
    }
  }
  return out;
}

bool verify_reversal(const Multigraph& g, int size) {
  const ReversalBlocks blocks = reversal_blocks(g, size);
  return blocks.k_times_m_rev == blocks.m_t_times_k;
}

}  // namespace xbmat
