#include "corpus.hpp"

#include <random>
#include <set>
#include <stdexcept>

namespace xbmat::testkit {

namespace {

bool connected(const Multigraph& g) {
  const EdgeMask all = g.edge_count() >= 64 ? ~EdgeMask{0} : (EdgeMask{1} << g.edge_count()) - 1;
  return components(g, all).size() == 1;
}

std::string edge_name(const Multigraph& g) {
  std::string s = "n" + std::to_string(g.vertex_count()) + ":";
  for (const auto& e : g.edges()) s += std::to_string(e.u) + "-" + std::to_string(e.v) + ",";
  if (s.back() == ',') s.pop_back();
  return s;
}

}  // namespace

std::vector<Multigraph> connected_simple_graphs(int n) {
  if (n < 1 || n > 6) throw std::out_of_range("connected_simple_graphs supports 1 <= n <= 6");
  std::vector<Edge> pairs;
  for (int u = 1; u <= n; ++u) {
    for (int v = u + 1; v <= n; ++v) pairs.emplace_back(u, v);
  }
  std::set<std::vector<Edge>> seen;
  std::vector<Multigraph> out;
  for (std::uint32_t mask = 0; mask < (1u << pairs.size()); ++mask) {
    std::vector<Edge> edges;
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      if ((mask >> k) & 1u) edges.push_back(pairs[k]);
    }
    Multigraph g(n, edges);
    if (!connected(g)) continue;
    if (seen.insert(canonical_form(g)).second) out.push_back(std::move(g));
  }
  return out;
}

Multigraph random_multigraph(std::uint32_t seed) {
  std::mt19937 rng(seed);
  const int n = 5;
  std::vector<Edge> edges;
  for (int v = 2; v <= n; ++v) {
    std::uniform_int_distribution<int> parent(1, v - 1);
    edges.emplace_back(parent(rng), v);
  }
  std::uniform_int_distribution<int> vertex(1, n);
  for (int k = 0; k < 2; ++k) {
    int u = vertex(rng);
    int v = vertex(rng);
    while (v == u) v = vertex(rng);
    edges.emplace_back(u, v);
  }
  std::uniform_int_distribution<std::size_t> pick(0, edges.size() - 1);
  edges.push_back(edges[pick(rng)]);
  return Multigraph(n, std::move(edges));
}

std::vector<NamedGraph> corpus() {
  std::vector<NamedGraph> out;
  for (int n = 1; n <= 5; ++n) {
    for (auto& g : connected_simple_graphs(n)) {
      std::string name = edge_name(g);
      out.push_back({std::move(name), std::move(g)});
    }
  }
  out.push_back({"C2", cycle(2)});
  out.push_back({"S5", star(5)});
  out.push_back({"P6", path(6)});
  out.push_back({"random-multigraph", random_multigraph()});
  return out;
}

}  // namespace xbmat::testkit
