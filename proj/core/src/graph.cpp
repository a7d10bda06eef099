#include "xbmat/graph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace xbmat {

namespace {

int find_root(std::vector<int>& parent, int x) {
  while (parent[static_cast<std::size_t>(x)] != x) {
    parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    x = parent[static_cast<std::size_t>(x)];
  }
  return x;
}

void check_builder(int n, int min_n, const char* name) {
  if (n < min_n) {
    throw std::invalid_argument(std::string(name) + " requires n >= " + std::to_string(min_n) +
                                ", got " + std::to_string(n));
  }
}

}  // namespace

Multigraph::Multigraph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n < 1) throw std::invalid_argument("a multigraph needs at least one vertex");
  for (auto& e : edges_) {
    e = Edge(e.u, e.v);
    if (e.u < 1 || e.v > n) {
      throw std::invalid_argument("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                  "} outside vertex range 1.." + std::to_string(n));
    }
  }
  std::sort(edges_.begin(), edges_.end());
}

int Multigraph::multiplicity(int u, int v) const {
  const Edge key(u, v);
  auto [lo, hi] = std::equal_range(edges_.begin(), edges_.end(), key);
  return static_cast<int>(hi - lo);
}

bool Multigraph::has_loop() const {
  return std::any_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.is_loop(); });
}

std::vector<int> Multigraph::degrees() const {
  std::vector<int> deg(static_cast<std::size_t>(n_), 0);
  for (const auto& e : edges_) {
    ++deg[static_cast<std::size_t>(e.u - 1)];
    ++deg[static_cast<std::size_t>(e.v - 1)];
  }
  return deg;
}

std::string Multigraph::to_edge_list() const {
  std::ostringstream os;
  os << "n " << n_ << '\n';
  for (const auto& e : edges_) os << e.u << ' ' << e.v << '\n';
  return os.str();
}

Multigraph Multigraph::from_edge_list(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int n = -1;
  int line_no = 0;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    auto fail = [&](const std::string& why) {
      throw std::invalid_argument("edge list line " + std::to_string(line_no) + ": " + why);
    };
    std::string trailing;
    if (n < 0) {
      if (first != "n" || !(ls >> n) || n < 1) fail("expected header 'n <N>' with N >= 1");
      if (ls >> trailing) fail("unexpected trailing text");
      continue;
    }
    int u = 0;
    int v = 0;
    try {
      std::size_t used = 0;
      u = std::stoi(first, &used);
      if (used != first.size()) fail("bad vertex '" + first + "'");
    } catch (const std::logic_error&) {
      fail("bad vertex '" + first + "'");
    }
    if (!(ls >> v)) fail("expected two vertices");
    if (ls >> trailing) fail("unexpected trailing text");
    if (u < 1 || u > n || v < 1 || v > n) fail("vertex out of range 1.." + std::to_string(n));
    edges.emplace_back(u, v);
  }
  if (n < 0) throw std::invalid_argument("edge list is missing the 'n <N>' header");
  return Multigraph(n, std::move(edges));
}

RootedGraph::RootedGraph(Multigraph g, int a, int b) : graph(std::move(g)), head(a), tail(b) {
  const int n = graph.vertex_count();
  if (head < 1 || head > n || tail < 1 || tail > n) {
    throw std::invalid_argument("roots (" + std::to_string(head) + "," + std::to_string(tail) +
                                ") outside vertex range 1.." + std::to_string(n));
  }
}

RootedGraph RootedGraph::standard(Multigraph g) {
  const int n = g.vertex_count();
  return RootedGraph(std::move(g), 1, n);
}

Multigraph glue_sum(const Multigraph& g, const Multigraph& h) {
  const int shift = g.vertex_count() - 1;
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  for (const auto& e : h.edges()) edges.emplace_back(e.u + shift, e.v + shift);
  return Multigraph(g.vertex_count() + h.vertex_count() - 1, std::move(edges));
}

RootedGraph rooted_glue(const RootedGraph& g, const RootedGraph& h) {
  const int n = g.graph.vertex_count();
  auto image = [&](int v) {
    if (v == h.head) return g.tail;
    return n + (v < h.head ? v : v - 1);
  };
  std::vector<Edge> edges(g.graph.edges().begin(), g.graph.edges().end());
  for (const auto& e : h.graph.edges()) edges.emplace_back(image(e.u), image(e.v));
  Multigraph glued(n + h.graph.vertex_count() - 1, std::move(edges));
  return RootedGraph(std::move(glued), g.head, image(h.tail));
}

Multigraph circle(const Multigraph& g) {
  const int n = g.vertex_count();
  if (n < 2) throw std::invalid_argument("circle requires at least 2 vertices");
  std::vector<Edge> edges;
  edges.reserve(g.edges().size());
  for (const auto& e : g.edges()) {
    edges.emplace_back(e.u == n ? 1 : e.u, e.v == n ? 1 : e.v);
  }
  return Multigraph(n - 1, std::move(edges));
}

Multigraph reverse(const Multigraph& g) {
  const int n = g.vertex_count();
  std::vector<Edge> edges;
  edges.reserve(g.edges().size());
  for (const auto& e : g.edges()) edges.emplace_back(n + 1 - e.v, n + 1 - e.u);
  return Multigraph(n, std::move(edges));
}

Multigraph disjoint_union(const Multigraph& g, const Multigraph& h) {
  const int shift = g.vertex_count();
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  for (const auto& e : h.edges()) edges.emplace_back(e.u + shift, e.v + shift);
  return Multigraph(g.vertex_count() + h.vertex_count(), std::move(edges));
}

Multigraph path(int n) {
  check_builder(n, 1, "path");
  std::vector<Edge> edges;
  for (int v = 1; v < n; ++v) edges.emplace_back(v, v + 1);
  return Multigraph(n, std::move(edges));
}

Multigraph cycle(int n) {
  check_builder(n, 2, "cycle");
  return circle(path(n + 1));
}

Multigraph complete(int n) {
  check_builder(n, 1, "complete");
  std::vector<Edge> edges;
  for (int u = 1; u <= n; ++u) {
    for (int v = u + 1; v <= n; ++v) edges.emplace_back(u, v);
  }
  return Multigraph(n, std::move(edges));
}

Multigraph star(int n) {
  check_builder(n, 1, "star");
  std::vector<Edge> edges;
  for (int v = 2; v <= n; ++v) edges.emplace_back(1, v);
  return Multigraph(n, std::move(edges));
}

ComponentLabels label_components(const Multigraph& g, EdgeMask subset) {
  const int n = g.vertex_count();
  const auto edges = g.edges();
  if (edges.size() > static_cast<std::size_t>(kMaxMaskEdges)) {
    throw std::out_of_range("edge masks support at most 64 edge instances");
  }
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  std::vector<int> edge_root_count(static_cast<std::size_t>(n), 0);
  for (std::size_t k = 0; k < edges.size(); ++k) {
    if (!((subset >> k) & 1u)) continue;
    int a = find_root(parent, edges[k].u - 1);
    int b = find_root(parent, edges[k].v - 1);
    if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
  }
  ComponentLabels out;
  out.component_of.assign(static_cast<std::size_t>(n), -1);
  std::vector<int> id_of_root(static_cast<std::size_t>(n), -1);
  for (int v = 0; v < n; ++v) {
    int r = find_root(parent, v);
    int& id = id_of_root[static_cast<std::size_t>(r)];
    if (id < 0) {
      id = static_cast<int>(out.sizes.size());
      out.sizes.push_back(0);
      out.edge_counts.push_back(0);
    }
    out.component_of[static_cast<std::size_t>(v)] = id;
    ++out.sizes[static_cast<std::size_t>(id)];
  }
  for (std::size_t k = 0; k < edges.size(); ++k) {
    if ((subset >> k) & 1u) {
      ++out.edge_counts[static_cast<std::size_t>(out.component_of[static_cast<std::size_t>(edges[k].u - 1)])];
    }
  }
  return out;
}

std::vector<Component> components(const Multigraph& g, EdgeMask subset) {
  const ComponentLabels labels = label_components(g, subset);
  std::vector<Component> out(labels.sizes.size());
  for (int v = 1; v <= g.vertex_count(); ++v) {
    out[static_cast<std::size_t>(labels.component_of[static_cast<std::size_t>(v - 1)])].vertices.push_back(v);
  }
  for (std::size_t c = 0; c < out.size(); ++c) out[c].edge_count = labels.edge_counts[c];
  return out;
}

std::vector<Edge> canonical_form(const Multigraph& g) {
  const int n = g.vertex_count();
  if (n > kMaxIsomorphismVertices) {
    throw std::out_of_range("brute-force isomorphism supports at most 8 vertices");
  }
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<Edge> best;
  std::vector<Edge> mapped;
  bool have = false;
  do {
    mapped.clear();
    for (const auto& e : g.edges()) {
      mapped.emplace_back(perm[static_cast<std::size_t>(e.u - 1)], perm[static_cast<std::size_t>(e.v - 1)]);
    }
    std::sort(mapped.begin(), mapped.end());
    if (!have || mapped < best) {
      best = mapped;
      have = true;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

bool isomorphic(const Multigraph& g, const Multigraph& h) {
  if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count()) return false;
  auto dg = g.degrees();
  auto dh = h.degrees();
  std::sort(dg.begin(), dg.end());
  std::sort(dh.begin(), dh.end());
  if (dg != dh) return false;
  return canonical_form(g) == canonical_form(h);
}

}  // namespace xbmat
