#include "xbmat/tutte.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

namespace xbmat {

namespace {

void require_edges_at_most(const Multigraph& g, int limit, const char* what) {
  if (g.edge_count() > limit) {
    throw std::out_of_range(std::string(what) + ": " + std::to_string(g.edge_count()) +
                            " edge instances exceed the enumeration bound of " + std::to_string(limit));
  }
}

int parity_sign(int k) { return (k % 2 == 0) ? 1 : -1; }

// (alpha_from + t)(alpha_{from+1} + t)...(alpha_last + t)
LaurentPoly shifted_product(std::span<const int> alpha, std::size_t from) {
  LaurentPoly prod(1);
  for (std::size_t k = from; k < alpha.size(); ++k) prod *= LaurentPoly(alpha[k]) + LaurentPoly::t();
  return prod;
}

LaurentPoly neg_t_power(int k) { return LaurentPoly::monomial(parity_sign(k), k); }

Integer binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Integer r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

void require_closed_form_size(int n, int min_n, const char* what) {
  if (n < min_n || n > kMaxClosedFormSize) {
    throw std::out_of_range(std::string(what) + ": n = " + std::to_string(n) + " outside " +
                            std::to_string(min_n) + ".." + std::to_string(kMaxClosedFormSize));
  }
}

// Counts of t^{|S|} grouped by the sorted component sizes lambda(S).
using SubsetCounts = std::map<std::vector<int>, std::map<int, long long>>;

SubsetCounts count_subsets(const Multigraph& g, std::uint64_t begin, std::uint64_t end) {
  const int n = g.vertex_count();
  const auto edges = g.edges();
  SubsetCounts counts;
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::vector<int> size_of(static_cast<std::size_t>(n));
  std::vector<int> sizes;
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  for (std::uint64_t mask = begin; mask < end; ++mask) {
    std::iota(parent.begin(), parent.end(), 0);
    for (std::size_t k = 0; k < edges.size(); ++k) {
      if (!((mask >> k) & 1u)) continue;
      int a = find(edges[k].u - 1);
      int b = find(edges[k].v - 1);
      if (a != b) parent[static_cast<std::size_t>(a)] = b;
    }
    std::fill(size_of.begin(), size_of.end(), 0);
    for (int v = 0; v < n; ++v) ++size_of[static_cast<std::size_t>(find(v))];
    sizes.clear();
    for (int s : size_of) {
      if (s) sizes.push_back(s);
    }
    std::sort(sizes.begin(), sizes.end(), std::greater<>());
    ++counts[sizes][std::popcount(mask)];
  }
  return counts;
}

void merge_counts(SubsetCounts& acc, const SubsetCounts& more) {
  for (const auto& [sizes, by_edges] : more) {
    auto& slot = acc[sizes];
    for (const auto& [k, c] : by_edges) slot[k] += c;
  }
}

void triple_rec(const std::vector<Component>& comps, const std::vector<EdgeMask>& comp_edges,
                std::size_t index, SubgraphTriple& current, const SubgraphTripleVisitor& visit) {
  if (index == comps.size()) {
    visit(current);
    return;
  }
  const Component& comp = comps[index];
  const int size = static_cast<int>(comp.vertices.size());
  for_each_composition(size, [&](std::span<const int> alpha) {
    for (int r = 1; r <= alpha.front(); ++r) {
      current.components.push_back(ComponentTriple{comp.vertices, comp_edges[index], comp.edge_count,
                                                   Composition(std::vector<int>(alpha.begin(), alpha.end())), r});
      triple_rec(comps, comp_edges, index + 1, current, visit);
      current.components.pop_back();
    }
  });
}

}  // namespace

Partition SubgraphTriple::type() const {
  std::vector<int> parts;
  for (const auto& c : components) parts.insert(parts.end(), c.composition.parts().begin(), c.composition.parts().end());
  return Partition::from_unsorted(std::move(parts));
}

int SubgraphTriple::sign() const {
  std::size_t len = 0;
  for (const auto& c : components) len += c.composition.length();
  return parity_sign(vertex_count - static_cast<int>(len));
}

int SubgraphTriple::edge_count() const {
  int e = 0;
  for (const auto& c : components) e += c.edge_count;
  return e;
}

const ComponentTriple& SubgraphTriple::component_containing(int vertex) const {
  for (const auto& c : components) {
    if (std::binary_search(c.vertices.begin(), c.vertices.end(), vertex)) return c;
  }
  throw std::invalid_argument("vertex " + std::to_string(vertex) + " not covered by the subgraph triple");
}

Partition SubgraphTriple::reduced_type(int vertex) const {
  const ComponentTriple& host = component_containing(vertex);
  std::vector<int> parts;
  for (const auto& c : components) {
    auto from = c.composition.parts().begin();
    if (&c == &host) ++from;
    parts.insert(parts.end(), from, c.composition.parts().end());
  }
  return Partition::from_unsorted(std::move(parts));
}

ESym xb_edge_subsets(const Multigraph& g, int workers) {
  require_edges_at_most(g, kMaxEdgeSubsetEdges, "xb_edge_subsets");
  const std::uint64_t total = std::uint64_t{1} << g.edge_count();
  const SubsetCounts counts = parallel_reduce<SubsetCounts>(
      total, workers, [&](std::uint64_t b, std::uint64_t e) { return count_subsets(g, b, e); }, merge_counts);
  ESym out;
  for (const auto& [sizes, by_edges] : counts) {
    LaurentPoly weight;
    for (const auto& [k, c] : by_edges) weight.add_term(c, k);
    out += p_partition_to_e(Partition(sizes)) * weight;
  }
  return out;
}

void for_each_subgraph_triple(const Multigraph& g, const SubgraphTripleVisitor& visit) {
  if (g.vertex_count() > kMaxTripleVertices) {
    throw std::out_of_range("subgraph triple enumeration supports at most " + std::to_string(kMaxTripleVertices) +
                            " vertices");
  }
  require_edges_at_most(g, kMaxTripleEdges, "subgraph triples");
  const auto edges = g.edges();
  const std::uint64_t total = std::uint64_t{1} << g.edge_count();
  SubgraphTriple current;
  current.vertex_count = g.vertex_count();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    const ComponentLabels labels = label_components(g, mask);
    std::vector<Component> comps = components(g, mask);
    std::vector<EdgeMask> comp_edges(comps.size(), 0);
    for (std::size_t k = 0; k < edges.size(); ++k) {
      if ((mask >> k) & 1u) {
        comp_edges[static_cast<std::size_t>(labels.component_of[static_cast<std::size_t>(edges[k].u - 1)])] |=
            EdgeMask{1} << k;
      }
    }
    triple_rec(comps, comp_edges, 0, current, visit);
  }
}

std::vector<SubgraphTriple> subgraph_triples(const Multigraph& g) {
  std::vector<SubgraphTriple> out;
  for_each_subgraph_triple(g, [&](const SubgraphTriple& s) { out.push_back(s); });
  return out;
}

ESym xb_subgraph_triples(const Multigraph& g) {
  ESym out;
  for_each_subgraph_triple(g, [&](const SubgraphTriple& s) {
    out.add_term(s.type(), LaurentPoly::monomial(s.sign(), s.edge_count()));
  });
  return out;
}

MonomialPoly xb_coloring_oracle(const Multigraph& g, int m, int workers) {
  if (m < 1) throw std::invalid_argument("coloring oracle needs at least one color");
  const int n = g.vertex_count();
  std::uint64_t total = 1;
  for (int v = 0; v < n; ++v) {
    total *= static_cast<std::uint64_t>(m);
    if (total > static_cast<std::uint64_t>(kMaxColorings)) {
      throw std::out_of_range("coloring oracle: " + std::to_string(m) + "^" + std::to_string(n) +
                              " colorings exceed the bound of 2000000");
    }
  }
  const auto edges = g.edges();
  const int edge_total = g.edge_count();
  using Counts = std::map<std::vector<int>, std::vector<long long>>;

  auto partial = [&](std::uint64_t begin, std::uint64_t end) {
    Counts counts;
    std::vector<int> color(static_cast<std::size_t>(n));
    std::uint64_t idx = begin;
    for (int v = 0; v < n; ++v) {
      color[static_cast<std::size_t>(v)] = static_cast<int>(idx % static_cast<std::uint64_t>(m));
      idx /= static_cast<std::uint64_t>(m);
    }
    std::vector<int> exps(static_cast<std::size_t>(m));
    for (std::uint64_t k = begin; k < end; ++k) {
      std::fill(exps.begin(), exps.end(), 0);
      for (int c : color) ++exps[static_cast<std::size_t>(c)];
      int mono = 0;
      for (const auto& e : edges) {
        if (color[static_cast<std::size_t>(e.u - 1)] == color[static_cast<std::size_t>(e.v - 1)]) ++mono;
      }
      auto& slot = counts[exps];
      if (slot.empty()) slot.assign(static_cast<std::size_t>(edge_total + 1), 0);
      ++slot[static_cast<std::size_t>(mono)];
      for (int v = 0; v < n; ++v) {
        if (++color[static_cast<std::size_t>(v)] < m) break;
        color[static_cast<std::size_t>(v)] = 0;
      }
    }
    return counts;
  };
  auto combine = [](Counts& acc, const Counts& more) {
    for (const auto& [exps, by_mono] : more) {
      auto& slot = acc[exps];
      if (slot.empty()) slot.assign(by_mono.size(), 0);
      for (std::size_t k = 0; k < by_mono.size(); ++k) slot[k] += by_mono[k];
    }
  };
  const Counts counts = parallel_reduce<Counts>(total, workers, partial, combine);

  std::vector<LaurentPoly> one_plus_t_pow(static_cast<std::size_t>(edge_total + 1));
  const LaurentPoly one_plus_t = LaurentPoly(1) + LaurentPoly::t();
  one_plus_t_pow[0] = LaurentPoly(1);
  for (int k = 1; k <= edge_total; ++k) {
    one_plus_t_pow[static_cast<std::size_t>(k)] = one_plus_t_pow[static_cast<std::size_t>(k - 1)] * one_plus_t;
  }
  MonomialPoly out(m);
  for (const auto& [exps, by_mono] : counts) {
    LaurentPoly coeff;
    for (std::size_t k = 0; k < by_mono.size(); ++k) {
      if (by_mono[k]) coeff += one_plus_t_pow[k] * LaurentPoly(by_mono[k]);
    }
    out.add_term(exps, coeff);
  }
  return out;
}

RationalESym chromatic(const Multigraph& g) { return substitute_t(xb_edge_subsets(g), Rational(-1)); }

ESym xb_path_closed(int n) {
  require_closed_form_size(n, 1, "xb_path_closed");
  ESym out;
  for_each_composition(n, [&](std::span<const int> alpha) {
    const int len = static_cast<int>(alpha.size());
    LaurentPoly coeff = LaurentPoly(alpha.front()) * shifted_product(alpha, 1) * neg_t_power(n - len);
    out.add_term(sort_to_partition(alpha), coeff);
  });
  return out;
}

ESym xb_cycle_closed(int n) {
  require_closed_form_size(n, 2, "xb_cycle_closed");
  ESym out;
  for_each_composition(n, [&](std::span<const int> alpha) {
    const int len = static_cast<int>(alpha.size());
    LaurentPoly coeff = LaurentPoly(alpha.front()) * shifted_product(alpha, 0) * neg_t_power(n - len);
    out.add_term(sort_to_partition(alpha), coeff);
  });
  return out;
}

ESym xb_star_closed(int n) {
  require_closed_form_size(n, 2, "xb_star_closed");
  ESym out;
  for_each_composition(n + 1, [&](std::span<const int> alpha) {
    const int first = alpha.front();
    if (first > n) return;
    const int len = static_cast<int>(alpha.size());
    LaurentPoly coeff = LaurentPoly(alpha[1]) * LaurentPoly(binomial(n - 1, first - 1)) *
                        neg_t_power(n - first) * LaurentPoly(parity_sign(len));
    std::vector<int> rest(alpha.begin() + 1, alpha.end());
    rest.insert(rest.end(), static_cast<std::size_t>(first - 1), 1);
    out.add_term(Partition::from_unsorted(std::move(rest)), coeff);
  });
  return out;
}

}  // namespace xbmat
