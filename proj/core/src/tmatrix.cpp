#include "xbmat/tmatrix.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <string>
#include <tuple>

#include "xbmat/combinatorics.hpp"

namespace xbmat {

namespace {

int parity_sign(int k) { return (k % 2 == 0) ? 1 : -1; }

LaurentPoly neg_t_power(int k) { return LaurentPoly::monomial(parity_sign(k), k); }

Integer binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Integer r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

void check_index(int i, int j) {
  if (i < 1 || j < 1) {
    throw std::out_of_range("matrix indices are 1-based: got (" + std::to_string(i) + "," + std::to_string(j) + ")");
  }
}

void check_block_dims(int rows, int cols) {
  if (rows < 1 || cols < 1 || rows > kMaxBlockDim || cols > kMaxBlockDim) {
    throw std::out_of_range("block dimensions " + std::to_string(rows) + "x" + std::to_string(cols) +
                            " outside 1.." + std::to_string(kMaxBlockDim));
  }
}

// Memo tables shared by every handle; the sums depend only on sizes.
template <class Key>
class SumCache {
 public:
  template <class Compute>
  const ESym& get(const Key& key, Compute compute) {
    {
      std::lock_guard lock(mutex_);
      if (auto it = table_.find(key); it != table_.end()) return it->second;
    }
    ESym value = compute();
    std::lock_guard lock(mutex_);
    return table_.try_emplace(key, std::move(value)).first->second;
  }

 private:
  std::mutex mutex_;
  std::map<Key, ESym> table_;
};

// sum over alpha |= size with alpha_1 = first of (-1)^{size - len} e_{sort(alpha minus alpha_1)}
const ESym& head_sum(int size, int first) {
  static SumCache<std::pair<int, int>> cache;
  return cache.get({size, first}, [&] {
    ESym out;
    if (first > size) return out;
    for_each_composition(size - first, [&](std::span<const int> rest) {
      const int len = 1 + static_cast<int>(rest.size());
      out.add_term(sort_to_partition(rest), LaurentPoly(parity_sign(size - len)));
    });
    return out;
  });
}

// sum over alpha |= size with last part >= min_last of alpha_1 (-1)^{size - len} e_{sort(alpha)}
const ESym& tail_sum(int size, int min_last) {
  static SumCache<std::pair<int, int>> cache;
  return cache.get({size, min_last}, [&] {
    ESym out;
    for_each_composition_last_at_least(size, min_last, [&](std::span<const int> alpha) {
      const int len = static_cast<int>(alpha.size());
      out.add_term(sort_to_partition(alpha), LaurentPoly(alpha.front() * parity_sign(size - len)));
    });
    return out;
  });
}

// Shared head/tail component: alpha |= size, alpha_1 = first, last part >= min_last
// (for a single part, the part itself), weight (-1)^{size-len} e_{sort(alpha minus alpha_1)}.
const ESym& head_tail_sum(int size, int first, int min_last) {
  static SumCache<std::tuple<int, int, int>> cache;
  return cache.get({size, first, min_last}, [&] {
    ESym out;
    if (first > size) return out;
    if (first == size) {
      if (first >= min_last) out.add_term(Partition(), LaurentPoly(parity_sign(size - 1)));
      return out;
    }
    for_each_composition_last_at_least(size - first, min_last, [&](std::span<const int> rest) {
      const int len = 1 + static_cast<int>(rest.size());
      out.add_term(sort_to_partition(rest), LaurentPoly(parity_sign(size - len)));
    });
    return out;
  });
}

}  // namespace

Block::Block(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative block dimension");
  entries_.resize(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols));
}

std::size_t Block::index(int i, int j) const {
  if (i < 1 || i > rows_ || j < 1 || j > cols_) {
    throw std::out_of_range("block index (" + std::to_string(i) + "," + std::to_string(j) + ") outside " +
                            std::to_string(rows_) + "x" + std::to_string(cols_));
  }
  return static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(j - 1);
}

const ESym& Block::at(int i, int j) const { return entries_[index(i, j)]; }
ESym& Block::at(int i, int j) { return entries_[index(i, j)]; }

Block Block::transposed() const {
  Block out(cols_, rows_);
  for (int i = 1; i <= rows_; ++i) {
    for (int j = 1; j <= cols_; ++j) out.at(j, i) = at(i, j);
  }
  return out;
}

bool Block::is_symmetric() const { return rows_ == cols_ && *this == transposed(); }

Block multiply(const Block& a, const Block& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("block product: inner dimensions differ");
  Block out(a.rows(), b.cols());
  for (int i = 1; i <= a.rows(); ++i) {
    for (int j = 1; j <= b.cols(); ++j) {
      ESym sum;
      for (int k = 1; k <= a.cols(); ++k) {
        if (a.at(i, k).is_zero() || b.at(k, j).is_zero()) continue;
        sum += a.at(i, k) * b.at(k, j);
      }
      out.at(i, j) = std::move(sum);
    }
  }
  return out;
}

TutteMatrix::TutteMatrix(RootedGraph rooted) : rooted_(std::move(rooted)) {
  const Multigraph& g = rooted_.graph;
  if (g.edge_count() > kMaxEntryEdges) {
    throw std::out_of_range("matrix entries: " + std::to_string(g.edge_count()) +
                            " edge instances exceed the enumeration bound of " + std::to_string(kMaxEntryEdges));
  }
  const int n = g.vertex_count();
  const auto edges = g.edges();
  const int head = rooted_.head - 1;
  const int tail = rooted_.tail - 1;

  std::map<ClassKey, std::map<int, long long>> counts;
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::vector<int> size_of(static_cast<std::size_t>(n));
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  const std::uint64_t total = std::uint64_t{1} << g.edge_count();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    std::iota(parent.begin(), parent.end(), 0);
    for (std::size_t k = 0; k < edges.size(); ++k) {
      if (!((mask >> k) & 1u)) continue;
      int a = find(edges[k].u - 1);
      int b = find(edges[k].v - 1);
      if (a != b) parent[static_cast<std::size_t>(a)] = b;
    }
    std::fill(size_of.begin(), size_of.end(), 0);
    for (int v = 0; v < n; ++v) ++size_of[static_cast<std::size_t>(find(v))];
    const int head_root = find(head);
    const int tail_root = find(tail);
    ClassKey key{size_of[static_cast<std::size_t>(head_root)],
                 head_root == tail_root ? 0 : size_of[static_cast<std::size_t>(tail_root)],
                 {}};
    for (int r = 0; r < n; ++r) {
      if (r == head_root || r == tail_root || size_of[static_cast<std::size_t>(r)] == 0) continue;
      key.others.push_back(size_of[static_cast<std::size_t>(r)]);
    }
    std::sort(key.others.begin(), key.others.end(), std::greater<>());
    ++counts[std::move(key)][std::popcount(mask)];
  }
  for (auto& [key, by_edges] : counts) {
    SubsetClass cls;
    for (const auto& [k, c] : by_edges) cls.weight.add_term(c, k);
    cls.others_power_sum = p_partition_to_e(Partition(key.others));
    classes_.emplace(key, std::move(cls));
  }
}

ESym TutteMatrix::entry(int i, int j) const {
  check_index(i, j);
  {
    std::lock_guard lock(memo_mutex_);
    if (auto it = memo_.find({i, j}); it != memo_.end()) return it->second;
  }
  ESym value = compute_entry(i, j);
  std::lock_guard lock(memo_mutex_);
  return memo_.try_emplace({i, j}, std::move(value)).first->second;
}

ESym TutteMatrix::compute_entry(int i, int j) const {
  ESym out;
  for (const auto& [key, cls] : classes_) {
    ESym w;
    if (key.tail_size == 0) {
      w = head_tail_sum(key.head_size + j - 1, i, j);
    } else {
      const ESym& head = head_sum(key.head_size, i);
      if (head.is_zero()) continue;
      w = head * tail_sum(key.tail_size + j - 1, j);
    }
    if (w.is_zero()) continue;
    out += w * cls.others_power_sum * cls.weight;
  }
  if ((j - 1) % 2 != 0) out = -out;
  return out;
}

Block TutteMatrix::block(int rows, int cols) const {
  check_block_dims(rows, cols);
  Block out(rows, cols);
  for (int i = 1; i <= rows; ++i) {
    for (int j = 1; j <= cols; ++j) out.at(i, j) = entry(i, j);
  }
  return out;
}

Block mul_block(const TutteMatrix& g, const TutteMatrix& h, int rows, int cols) {
  check_block_dims(rows, cols);
  Block out(rows, cols);
  const int ng = g.vertex_count();
  const int nh = h.vertex_count();
  for (int i = 1; i <= rows; ++i) {
    for (int j = 1; j <= cols; ++j) {
      ESym sum;
      for (int k = std::max(1, i - ng + 1); k <= nh + j - 1; ++k) {
        ESym left = g.entry(i, k);
        if (left.is_zero()) continue;
        ESym right = h.entry(k, j);
        if (right.is_zero()) continue;
        sum += left * right;
      }
      out.at(i, j) = std::move(sum);
    }
  }
  return out;
}

ESym recover_xb(const TutteMatrix& m) {
  ESym out;
  for (int i = 1; i <= m.vertex_count(); ++i) {
    out += ESym::e(i) * LaurentPoly(i) * m.entry(i, 1);
  }
  return out;
}

ESym trace(const TutteMatrix& m) {
  const int n = m.vertex_count();
  if (n < 2) throw std::invalid_argument("trace requires at least 2 vertices");
  if (m.rooted().head != 1 || m.rooted().tail != n) {
    throw std::invalid_argument("trace requires the standard rooting (1, n)");
  }
  ESym out;
  for (int k = 1; k < n; ++k) out += m.entry(k, k);
  return out;
}

ESym m_path_closed(int n, int i, int j) {
  if (n < 1 || n > kMaxClosedMatrixVertices) {
    throw std::out_of_range("m_path_closed: n = " + std::to_string(n) + " outside 1.." +
                            std::to_string(kMaxClosedMatrixVertices));
  }
  check_index(i, j);
  if (i > kMaxClosedMatrixIndex || j > kMaxClosedMatrixIndex) {
    throw std::out_of_range("m_path_closed: index outside 1.." + std::to_string(kMaxClosedMatrixIndex));
  }
  ESym out;
  const int size = n + j - i - 1;
  if (size < 0) return out;
  for_each_composition_last_at_least(size, j, [&](std::span<const int> alpha) {
    const int len = static_cast<int>(alpha.size());
    LaurentPoly coeff = neg_t_power(n - len - 1);
    for (int a : alpha) coeff *= LaurentPoly(a) + LaurentPoly::t();
    out.add_term(sort_to_partition(alpha), coeff);
  });
  return out;
}

ESym m_star_closed(int n, int i, int j) {
  if (n < 1 || n > kMaxClosedMatrixVertices) {
    throw std::out_of_range("m_star_closed: n = " + std::to_string(n) + " outside 1.." +
                            std::to_string(kMaxClosedMatrixVertices));
  }
  check_index(i, j);
  if (i > kMaxClosedMatrixIndex || j > kMaxClosedMatrixIndex) {
    throw std::out_of_range("m_star_closed: index outside 1.." + std::to_string(kMaxClosedMatrixIndex));
  }
  ESym out;
  const int size = n + j - i;
  if (size < 1) return out;
  for_each_composition(size, [&](std::span<const int> alpha) {
    const int first = alpha.front();
    const int len = static_cast<int>(alpha.size());
    if (first > n) return;
    if (len >= 2 && alpha.back() < j) return;
    LaurentPoly coeff = LaurentPoly(binomial(n - 1, first - 1)) * neg_t_power(n - first) *
                        LaurentPoly(parity_sign(len - 1));
    std::vector<int> parts(alpha.begin() + 1, alpha.end());
    parts.insert(parts.end(), static_cast<std::size_t>(first - 1), 1);
    out.add_term(Partition::from_unsorted(std::move(parts)), coeff);
  });
  return out;
}

}  // namespace xbmat
