#include "xbmat/combinatorics.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace xbmat {

namespace {

std::string join_parts(const std::vector<int>& parts) {
  std::ostringstream os;
  os << '[';
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (k) os << ',';
    os << parts[k];
  }
  os << ']';
  return os.str();
}

void check_positive(const std::vector<int>& parts, const char* what) {
  for (int p : parts) {
    if (p < 1) throw std::invalid_argument(std::string(what) + " parts must be positive");
  }
}

void check_materialize_bound(int n) {
  if (n < 0) throw std::invalid_argument("composition size must be non-negative");
  if (n > kMaxMaterializedComposition) {
    throw std::out_of_range("refusing to materialize compositions of " + std::to_string(n) +
                            " (limit " + std::to_string(kMaxMaterializedComposition) + ")");
  }
}

// Depth-first lexicographic generation. `remaining` is what is left to
// distribute; the next part a must leave a tail whose last part can still be
// >= min_last.
void visit_rec(std::vector<int>& buf, int remaining, int min_last, const CompositionVisitor& visit) {
  if (remaining == 0) {
    visit(std::span<const int>(buf.data(), buf.size()));
    return;
  }
  for (int a = 1; a <= remaining; ++a) {
    if (a < remaining && remaining - a < min_last) continue;
    if (a == remaining && a < min_last) continue;
    buf.push_back(a);
    visit_rec(buf, remaining - a, min_last, visit);
    buf.pop_back();
  }
}

}  // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  check_positive(parts_, "partition");
  if (!std::is_sorted(parts_.begin(), parts_.end(), std::greater<>())) {
    throw std::invalid_argument("partition parts must be weakly decreasing: " + join_parts(parts_));
  }
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition Partition::from_unsorted(std::vector<int> parts) {
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

Partition Partition::merged(const Partition& other) const {
  if (other.empty()) return *this;
  if (empty()) return other;
  std::vector<int> out;
  out.reserve(parts_.size() + other.parts_.size());
  std::merge(parts_.begin(), parts_.end(), other.parts_.begin(), other.parts_.end(),
             std::back_inserter(out), std::greater<>());
  Partition p;
  p.parts_ = std::move(out);
  p.size_ = size_ + other.size_;
  return p;
}

std::string Partition::to_string() const { return join_parts(parts_); }

std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
  if (auto c = a.size_ <=> b.size_; c != 0) return c;
  return a.parts_ <=> b.parts_;
}

std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << p.to_string(); }

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  check_positive(parts_, "composition");
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Composition::Composition(std::initializer_list<int> parts) : Composition(std::vector<int>(parts)) {}

int Composition::first() const {
  if (parts_.empty()) throw std::invalid_argument("empty composition has no first part");
  return parts_.front();
}

int Composition::last() const {
  if (parts_.empty()) throw std::invalid_argument("empty composition has no last part");
  return parts_.back();
}

std::string Composition::to_string() const { return join_parts(parts_); }

std::ostream& operator<<(std::ostream& os, const Composition& c) { return os << c.to_string(); }

void for_each_composition(int n, const CompositionVisitor& visit) {
  for_each_composition_last_at_least(n, 1, visit);
}

void for_each_composition_last_at_least(int n, int min_last, const CompositionVisitor& visit) {
  if (n < 0) return;
  if (min_last < 1) min_last = 1;
  std::vector<int> buf;
  buf.reserve(static_cast<std::size_t>(n));
  visit_rec(buf, n, min_last, visit);
}

std::vector<Composition> compositions(int n) { return compositions_last_at_least(n, 1); }

std::vector<Composition> compositions_last_at_least(int n, int j) {
  check_materialize_bound(n);
  if (j < 1) throw std::invalid_argument("minimum last part must be positive");
  std::vector<Composition> out;
  for_each_composition_last_at_least(n, j, [&](std::span<const int> parts) {
    out.emplace_back(std::vector<int>(parts.begin(), parts.end()));
  });
  return out;
}

Partition sort_to_partition(const Composition& c) { return Partition::from_unsorted(c.parts()); }

Partition sort_to_partition(std::span<const int> parts) {
  return Partition::from_unsorted(std::vector<int>(parts.begin(), parts.end()));
}

Composition drop_first(const Composition& c) {
  if (c.empty()) throw std::invalid_argument("cannot drop from empty composition");
  return Composition(std::vector<int>(c.parts().begin() + 1, c.parts().end()));
}

std::vector<Partition> partitions(int n) {
  std::vector<Partition> out;
  std::vector<int> buf;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(buf);
      return;
    }
    for (int a = std::min(remaining, max_part); a >= 1; --a) {
      buf.push_back(a);
      rec(remaining - a, a);
      buf.pop_back();
    }
  };
  if (n >= 0) rec(n, n);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace xbmat
