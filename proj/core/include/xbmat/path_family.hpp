#pragma once

#include "xbmat/esym.hpp"
#include "xbmat/graph.hpp"
#include "xbmat/tmatrix.hpp"

namespace xbmat {

inline constexpr int kMaxPathFamilyIndex = 12;
inline constexpr int kMaxKIndex = 32;
inline constexpr int kMaxReversalSize = 8;

// Transfer data of the path family H_i = P_i.
//   A(i,j)    = (v M_{P_i})_j
//   B(i,j)    = (M_{P_j})_{i,1}, upper triangular
//   B^{-1}    = (-t)^{-i} (i - j - t) e_{j-i} for i <= j, genuinely Laurent in t
ESym a_path(int i, int j);
ESym b_path(int i, int j);
ESym b_path_inv(int i, int j);

/// K(i,j) = sum_{k=max(i,j)}^{i+j-1} (2k - i - j + 1) e_k e_{i+j-k-1}, e_0 = 1.
/// t-free and symmetric.
ESym k_matrix(int i, int j);
Block k_block(int size);

/// (A^T B^{-1})_{i,j}; finite because B^{-1} is upper triangular.
ESym k_from_path_family(int i, int j);

struct ReversalBlocks {
  Block k_times_m_rev;  // K M_{G_rev}
  Block m_t_times_k;    // M_G^T K
};

/// Both size x size windows, computed with exact finite sums bounded by the
/// zero pattern of M.
ReversalBlocks reversal_blocks(const Multigraph& g, int size);

/// K M_{G_rev} == M_G^T K on the size x size window. size <= 8.
bool verify_reversal(const Multigraph& g, int size);

}  // namespace xbmat
