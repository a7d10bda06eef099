#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "xbmat/graph.hpp"

namespace xbmat::testkit {

struct NamedGraph {
  std::string name;
  Multigraph graph;
};

/// One representative per isomorphism class of connected simple graphs on
/// exactly n vertices (brute force, n <= 6).
std::vector<Multigraph> connected_simple_graphs(int n);

/// Connected multigraph on 5 vertices with at least one doubled edge, from a
/// fixed seed.
Multigraph random_multigraph(std::uint32_t seed = 20240607);

/// All connected simple graphs on <= 5 vertices (31 classes), then C_2, S_5,
/// P_6 and random_multigraph().
std::vector<NamedGraph> corpus();

}  // namespace xbmat::testkit
