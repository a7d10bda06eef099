#pragma once

#include <functional>
#include <vector>

#include "xbmat/combinatorics.hpp"
#include "xbmat/esym.hpp"
#include "xbmat/graph.hpp"
#include "xbmat/monomial.hpp"
#include "xbmat/parallel.hpp"

namespace xbmat {

inline constexpr int kMaxEdgeSubsetEdges = 24;
inline constexpr int kMaxTripleVertices = 8;
inline constexpr int kMaxTripleEdges = 20;
inline constexpr long long kMaxColorings = 2'000'000;
inline constexpr int kMaxClosedFormSize = 16;

/// A connected component of a spanning subgraph together with a composition
/// of its vertex count and a marker 1 <= r <= first part.
struct ComponentTriple {
  std::vector<int> vertices;  // sorted, 1-based
  EdgeMask edges = 0;         // edge instances of the host graph
  int edge_count = 0;
  Composition composition;
  int r = 1;
};

/// Ordered by smallest vertex of each component.
struct SubgraphTriple {
  int vertex_count = 0;
  std::vector<ComponentTriple> components;

  Partition type() const;
  int sign() const;  // (-1)^{n - len(type)}
  int edge_count() const;
  /// type with one copy of the first part of the component containing `vertex` removed.
  Partition reduced_type(int vertex) const;
  const ComponentTriple& component_containing(int vertex) const;
};

using SubgraphTripleVisitor = std::function<void(const SubgraphTriple&)>;

/// XB_G as the sum over edge-instance subsets S of t^{|S|} p_{lambda(S)},
/// rewritten in the e-basis. Requires |E| <= 24.
ESym xb_edge_subsets(const Multigraph& g, int workers = default_worker_count());

/// Visits every subgraph triple of G. Requires n <= 8 and |E| <= 20.
void for_each_subgraph_triple(const Multigraph& g, const SubgraphTripleVisitor& visit);
std::vector<SubgraphTriple> subgraph_triples(const Multigraph& g);

/// Signed sum sign(S) t^{E(S)} e_{type(S)} over all subgraph triples.
ESym xb_subgraph_triples(const Multigraph& g);

/// Sum over all m^n colorings of (1+t)^{#monochromatic edge instances} times
/// the coloring monomial. Loops are always monochromatic. m^n <= 2e6.
MonomialPoly xb_coloring_oracle(const Multigraph& g, int m, int workers = default_worker_count());

/// XB_G at t = -1; zero whenever G has a loop.
RationalESym chromatic(const Multigraph& g);

ESym xb_path_closed(int n);
ESym xb_cycle_closed(int n);
ESym xb_star_closed(int n);

}  // namespace xbmat
