#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace xbmat {

/// Unordered vertex pair with u <= v; u == v is a loop. Vertices are 1-based.
struct Edge {
  int u = 0;
  int v = 0;

  Edge() = default;
  Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}

  bool is_loop() const noexcept { return u == v; }
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Selects edge *instances* of a Multigraph: bit k refers to edges()[k], so
/// each copy of a multi-edge is chosen independently.
using EdgeMask = std::uint64_t;
inline constexpr int kMaxMaskEdges = 64;

/// Labeled multigraph on vertices 1..n. The edge multiset is kept as a
/// sorted list of normalized pairs, one entry per instance.
class Multigraph {
 public:
  /// Throws std::invalid_argument for n < 1 or an endpoint outside 1..n.
  Multigraph(int n, std::vector<Edge> edges);
  explicit Multigraph(int n) : Multigraph(n, {}) {}

  int vertex_count() const noexcept { return n_; }
  int edge_count() const noexcept { return static_cast<int>(edges_.size()); }
  std::span<const Edge> edges() const noexcept { return edges_; }
  int multiplicity(int u, int v) const;
  bool has_loop() const;
  /// Loops add 2 to the degree of their vertex.
  std::vector<int> degrees() const;

  /// "n <N>" followed by one "u v" line per edge instance.
  std::string to_edge_list() const;
  static Multigraph from_edge_list(const std::string& text);

  friend bool operator==(const Multigraph&, const Multigraph&) = default;

 private:
  int n_;
  std::vector<Edge> edges_;
};

/// Multigraph with a designated head vertex a and tail vertex b (a == b allowed).
struct RootedGraph {
  Multigraph graph;
  int head;
  int tail;

  RootedGraph(Multigraph g, int head, int tail);
  /// The standard rooting (1, n).
  static RootedGraph standard(Multigraph g);

  friend bool operator==(const RootedGraph&, const RootedGraph&) = default;
};

/// G + H: vertex n of G is identified with vertex 1 of H, whose other
/// vertices shift by n - 1.
Multigraph glue_sum(const Multigraph& g, const Multigraph& h);

/// Identifies g.tail with h.head. G keeps its labels; the remaining vertices
/// of H follow in their original order. Head of the result is g.head, tail is
/// the image of h.tail.
RootedGraph rooted_glue(const RootedGraph& g, const RootedGraph& h);

/// G° : identifies vertex n with vertex 1. Requires n >= 2; edge count is
/// preserved (an edge {1,n} becomes a loop at 1).
Multigraph circle(const Multigraph& g);

/// Relabels i -> n + 1 - i.
Multigraph reverse(const Multigraph& g);

/// Vertices of h are shifted by g's vertex count; no identification.
Multigraph disjoint_union(const Multigraph& g, const Multigraph& h);

Multigraph path(int n);
/// circle(path(n + 1)); cycle(2) is a doubled edge.
Multigraph cycle(int n);
Multigraph complete(int n);
/// K_{1,n-1} with its center at vertex 1.
Multigraph star(int n);

struct Component {
  std::vector<int> vertices;  // sorted, 1-based
  int edge_count = 0;          // instances, including loops
};

/// Connected components of the spanning subgraph ([n], S), ordered by
/// smallest vertex. Isolated vertices are singleton components.
std::vector<Component> components(const Multigraph& g, EdgeMask subset);

/// Dense component labelling used by the enumeration kernels.
struct ComponentLabels {
  std::vector<int> component_of;  // indexed by vertex - 1
  std::vector<int> sizes;
  std::vector<int> edge_counts;
};
ComponentLabels label_components(const Multigraph& g, EdgeMask subset);

/// Smallest edge list over all vertex relabelings. Brute force; n <= 8.
std::vector<Edge> canonical_form(const Multigraph& g);
bool isomorphic(const Multigraph& g, const Multigraph& h);
inline constexpr int kMaxIsomorphismVertices = 8;

}  // namespace xbmat
