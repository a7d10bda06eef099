#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace xbmat {

/// Largest n for which compositions(n) is materialized.
inline constexpr int kMaxMaterializedComposition = 20;

/// Weakly decreasing sequence of positive integers.
///
/// Partitions are totally ordered by size first, then lexicographically by
/// parts; this is the canonical order in which e-expansions are printed, so
/// that e[1,1,1] < e[2,1] < e[3] and e[2,1,1] < e[2,2] < e[3,1].
class Partition {
 public:
  Partition() = default;
  /// Throws std::invalid_argument unless `parts` is weakly decreasing and positive.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts);

  /// Sorts an arbitrary multiset of positive parts.
  static Partition from_unsorted(std::vector<int> parts);

  const std::vector<int>& parts() const noexcept { return parts_; }
  int size() const noexcept { return size_; }
  std::size_t length() const noexcept { return parts_.size(); }
  bool empty() const noexcept { return parts_.empty(); }

  /// Multiset union of parts.
  Partition merged(const Partition& other) const;

  std::string to_string() const;  // "[3,2,1]"

  friend bool operator==(const Partition&, const Partition&) = default;
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b);

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Partition& p);

/// Ordered sequence of positive integers; the empty composition is legal.
class Composition {
 public:
  Composition() = default;
  explicit Composition(std::vector<int> parts);
  Composition(std::initializer_list<int> parts);

  const std::vector<int>& parts() const noexcept { return parts_; }
  int size() const noexcept { return size_; }
  std::size_t length() const noexcept { return parts_.size(); }
  bool empty() const noexcept { return parts_.empty(); }
  int first() const;
  int last() const;

  std::string to_string() const;

  friend bool operator==(const Composition&, const Composition&) = default;
  friend auto operator<=>(const Composition& a, const Composition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Composition& c);

using CompositionVisitor = std::function<void(std::span<const int>)>;

/// Streams every composition of n in lexicographic order without
/// materializing the list. n = 0 visits the empty composition once.
void for_each_composition(int n, const CompositionVisitor& visit);

/// Streams compositions of n whose last part is at least `min_last`.
/// n = 0 visits the empty composition (the condition holds vacuously).
void for_each_composition_last_at_least(int n, int min_last, const CompositionVisitor& visit);

/// All compositions of n, lexicographic. Throws for n < 0 or n > 20.
std::vector<Composition> compositions(int n);

/// Compositions of n with last part >= j (j >= 1); same bounds as compositions().
std::vector<Composition> compositions_last_at_least(int n, int j);

Partition sort_to_partition(const Composition& c);
Partition sort_to_partition(std::span<const int> parts);

/// Throws std::invalid_argument("cannot drop from empty composition").
Composition drop_first(const Composition& c);

/// All partitions of n in canonical order.
std::vector<Partition> partitions(int n);

}  // namespace xbmat
