#pragma once

#include <map>
#include <mutex>
#include <utility>
#include <vector>

#include "xbmat/esym.hpp"
#include "xbmat/graph.hpp"

namespace xbmat {

inline constexpr int kMaxEntryEdges = 22;
inline constexpr int kMaxBlockDim = 12;
inline constexpr int kMaxClosedMatrixVertices = 12;
inline constexpr int kMaxClosedMatrixIndex = 16;

/// Finite rows x cols window onto an infinite matrix, 1-based, row-major.
class Block {
 public:
  Block(int rows, int cols);

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }
  const ESym& at(int i, int j) const;
  ESym& at(int i, int j);
  const std::vector<ESym>& entries() const noexcept { return entries_; }

  Block transposed() const;
  bool is_symmetric() const;

  friend bool operator==(const Block&, const Block&) = default;

 private:
  std::size_t index(int i, int j) const;

  int rows_;
  int cols_;
  std::vector<ESym> entries_;
};

/// Ordinary product of finite blocks (inner dimensions must agree). Equals
/// the corresponding window of an infinite product only when the inner
/// range covers every nonzero summand.
Block multiply(const Block& a, const Block& b);

/// Lazy exact accessor for the Tutte symmetric matrix M_(G,a,b).
///
/// Entry (i,j) is assembled from edge-instance subsets S of G: the
/// components of ([n], S) with a path of j vertices hanging off the tail are
/// classified as the head component (contains a), the tail component
/// (contains b and the whole path) and the rest. The head contributes
/// compositions with first part i and r = 1 (that part is removed from the
/// type), the tail contributes compositions with last part >= j weighted by
/// their first part, and every other component contributes p_{|C|}. When a
/// and b share a component the single composition carries both constraints.
///
/// The component structure of every subset is grouped once at construction;
/// entries are memoized per (i,j). Concurrent calls to entry() are safe and
/// always observe the same value.
class TutteMatrix {
 public:
  /// Throws std::out_of_range if |E| > 22.
  explicit TutteMatrix(RootedGraph rooted);
  TutteMatrix(const TutteMatrix&) = delete;
  TutteMatrix& operator=(const TutteMatrix&) = delete;

  const RootedGraph& rooted() const noexcept { return rooted_; }
  int vertex_count() const noexcept { return rooted_.graph.vertex_count(); }

  ESym entry(int i, int j) const;
  /// Upper-left rows x cols window; both at most 12.
  Block block(int rows, int cols) const;

 private:
  struct ClassKey {
    int head_size;               // size of the component containing the head
    int tail_size;               // size of the tail component, 0 if shared with the head
    std::vector<int> others;     // remaining component sizes, decreasing
    friend auto operator<=>(const ClassKey&, const ClassKey&) = default;
  };
  struct SubsetClass {
    LaurentPoly weight;          // sum of t^{|S|} over the subsets in this class
    ESym others_power_sum;       // prod over other components of p_{|C|}
  };

  ESym compute_entry(int i, int j) const;

  RootedGraph rooted_;
  std::map<ClassKey, SubsetClass> classes_;
  mutable std::mutex memo_mutex_;
  mutable std::map<std::pair<int, int>, ESym> memo_;
};

/// (M_G M_H) restricted to rows x cols. The inner index runs over
/// max(1, i - |G| + 1) <= k <= |H| + j - 1; every other summand is zero.
Block mul_block(const TutteMatrix& g, const TutteMatrix& h, int rows, int cols);

/// sum_i i e_i M_{i,1} = XB_G for any rooting.
ESym recover_xb(const TutteMatrix& m);

/// sum_{k=1}^{n-1} M_{k,k} = XB of circle(G). Requires roots (1, n), n >= 2.
ESym trace(const TutteMatrix& m);

/// Closed form of (M_{P_n})_{i,j} for the rooting (1, n).
ESym m_path_closed(int n, int i, int j);
/// Closed form of (M_{(S_n, x)})_{i,j} with x the center (head = tail = 1).
ESym m_star_closed(int n, int i, int j);

}  // namespace xbmat
