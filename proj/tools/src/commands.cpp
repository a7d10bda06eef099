#include "xbmat_cli/commands.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <ostream>
#include <stdexcept>

#include <CLI11.hpp>

#include "xbmat/json_io.hpp"
#include "xbmat/laurent.hpp"
#include "xbmat/monomial.hpp"
#include "xbmat/path_family.hpp"
#include "xbmat/tmatrix.hpp"
#include "xbmat/tutte.hpp"
#include "xbmat_cli/expr.hpp"

namespace xbmat::cli {

namespace {

struct Options {
  std::string format = "text";
  std::string graph;
  std::string left;
  std::string right;
  std::optional<std::string> t_value;
  std::optional<int> oracle_vars;
  std::optional<int> head;
  std::optional<int> tail;
  int rows = 0;
  int cols = 0;
  int size = 0;
};

Multigraph graph_of(const std::string& text) { return evaluate(parse_expr(text)); }

bool json_output(const Options& o) { return o.format == "json"; }

void print_block(std::ostream& out, const Block& b, const Options& o, const std::optional<BlockRoots>& roots) {
  if (json_output(o)) {
    out << dump(to_json(b, roots)) << '\n';
    return;
  }
  for (int i = 1; i <= b.rows(); ++i) {
    for (int j = 1; j <= b.cols(); ++j) out << '[' << i << ',' << j << "] " << b.at(i, j) << '\n';
  }
}

void print_check(std::ostream& out, const Options& o, const std::string& verb, bool pass, Json details,
                 const std::string& summary) {
  if (json_output(o)) {
    Json j;
    j["check"] = verb;
    j["result"] = pass ? "PASS" : "FAIL";
    j["details"] = std::move(details);
    out << dump(j) << '\n';
  } else {
    out << (pass ? "PASS" : "FAIL") << ' ' << summary << '\n';
  }
}

int cmd_xb(const Options& o, std::ostream& out) {
  const ESym xb = xb_edge_subsets(graph_of(o.graph));
  if (o.t_value) {
    const RationalESym value = substitute_t(xb, parse_rational(*o.t_value));
    out << (json_output(o) ? dump(to_json(value)) : value.to_string()) << '\n';
  } else {
    out << (json_output(o) ? dump(to_json(xb)) : xb.to_string()) << '\n';
  }
  return kExitOk;
}

int cmd_chromatic(const Options& o, std::ostream& out, std::ostream& err) {
  const RationalESym x = chromatic(graph_of(o.graph));
  if (!x.is_integral()) {
    err << "error: chromatic expansion is not integral: " << x << '\n';
    return kExitFail;
  }
  out << (json_output(o) ? dump(to_json(x)) : x.to_string()) << '\n';
  return kExitOk;
}

int cmd_oracle_check(const Options& o, std::ostream& out, std::ostream& err) {
  const Multigraph g = graph_of(o.graph);
  const int n = g.vertex_count();
  const int m = o.oracle_vars.value_or(n);
  if (m < 1) throw std::invalid_argument("--oracle-vars must be at least 1");
  if (m < n) {
    err << "warning: " << m << " variables < " << n
        << " vertices; equality is necessary but not sufficient\n";
  }
  const MonomialPoly expanded = expand_monomials(xb_edge_subsets(g), m);
  const MonomialPoly oracle = xb_coloring_oracle(g, m);
  const bool pass = expanded == oracle;
  Json details;
  details["graph"] = o.graph;
  details["vertices"] = n;
  details["variables"] = m;
  details["monomials"] = oracle.terms().size();
  print_check(out, o, "oracle-check", pass, std::move(details),
              o.graph + ": e-expansion vs " + std::to_string(m) + "-variable coloring oracle");
  return pass ? kExitOk : kExitFail;
}

int cmd_matrix(const Options& o, std::ostream& out) {
  Multigraph g = graph_of(o.graph);
  const int head = o.head.value_or(1);
  const int tail = o.tail.value_or(g.vertex_count());
  const TutteMatrix m(RootedGraph(g, head, tail));
  print_block(out, m.block(o.rows, o.cols), o, BlockRoots{std::move(g), head, tail});
  return kExitOk;
}

int cmd_trace(const Options& o, std::ostream& out) {
  const TutteMatrix m(RootedGraph::standard(graph_of(o.graph)));
  const ESym tr = trace(m);
  out << (json_output(o) ? dump(to_json(tr)) : tr.to_string()) << '\n';
  return kExitOk;
}

int cmd_glue_check(const Options& o, std::ostream& out) {
  const Multigraph g = graph_of(o.left);
  const Multigraph h = graph_of(o.right);
  const TutteMatrix mg(RootedGraph::standard(g));
  const TutteMatrix mh(RootedGraph::standard(h));
  const TutteMatrix glued(RootedGraph::standard(glue_sum(g, h)));
  const bool pass = glued.block(o.size, o.size) == mul_block(mg, mh, o.size, o.size);
  Json details;
  details["left"] = o.left;
  details["right"] = o.right;
  details["size"] = o.size;
  const std::string dim = std::to_string(o.size);
  print_check(out, o, "glue-check", pass, std::move(details),
              "M(" + o.left + " + " + o.right + ") = M(" + o.left + ") M(" + o.right + ") on " + dim + "x" + dim);
  return pass ? kExitOk : kExitFail;
}

int cmd_reverse_check(const Options& o, std::ostream& out) {
  const Multigraph g = graph_of(o.graph);
  const ReversalBlocks blocks = reversal_blocks(g, o.size);
  const bool pass = blocks.k_times_m_rev == blocks.m_t_times_k;
  const bool reversible = reverse(g) == g;
  Json details;
  details["graph"] = o.graph;
  details["size"] = o.size;
  details["reversible"] = reversible;
  std::string summary = "K M(rev " + o.graph + ") = M(" + o.graph + ")^T K on " + std::to_string(o.size) + "x" +
                        std::to_string(o.size);
  if (reversible) {
    const bool symmetric = blocks.k_times_m_rev.is_symmetric();
    details["k_m_symmetric"] = symmetric;
    summary += symmetric ? "; reversible, K M symmetric" : "; reversible, K M NOT symmetric";
  }
  print_check(out, o, "reverse-check", pass, std::move(details), summary);
  return pass ? kExitOk : kExitFail;
}

int cmd_kmatrix(const Options& o, std::ostream& out) {
  print_block(out, k_block(o.size), o, std::nullopt);
  return kExitOk;
}

void add_format(CLI::App* sub, Options& o) {
  sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
}

void add_graph(CLI::App* sub, std::string& target, const std::string& flag) {
  sub->add_option(flag, target, "Graph expression: P<k>, C<k>, K<k>, S<k>, @file, '+', parentheses")
      ->required();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Tutte symmetric functions and Tutte symmetric matrices", "xbmat"};
  app.require_subcommand(1);
  Options o;
  std::function<int()> action;

  auto* xb = app.add_subcommand("xb", "e-expansion of XB_G");
  add_graph(xb, o.graph, "--graph");
  xb->add_option("--t", o.t_value, "Evaluate at this rational value of t");
  add_format(xb, o);
  xb->callback([&] { action = [&] { return cmd_xb(o, out); }; });

  auto* chrom = app.add_subcommand("chromatic", "Chromatic symmetric function (t = -1)");
  add_graph(chrom, o.graph, "--graph");
  add_format(chrom, o);
  chrom->callback([&] { action = [&] { return cmd_chromatic(o, out, err); }; });

  auto* oracle = app.add_subcommand("oracle-check", "Compare the e-expansion with the coloring oracle");
  add_graph(oracle, o.graph, "--graph");
  oracle->add_option("--oracle-vars", o.oracle_vars, "Number of variables (default: vertex count)");
  add_format(oracle, o);
  oracle->callback([&] { action = [&] { return cmd_oracle_check(o, out, err); }; });

  auto* matrix = app.add_subcommand("matrix", "Finite block of M_(G,a,b)");
  add_graph(matrix, o.graph, "--graph");
  matrix->add_option("--rows", o.rows, "Rows")->required();
  matrix->add_option("--cols", o.cols, "Columns")->required();
  matrix->add_option("--head", o.head, "Head root (default 1)");
  matrix->add_option("--tail", o.tail, "Tail root (default n)");
  add_format(matrix, o);
  matrix->callback([&] { action = [&] { return cmd_matrix(o, out); }; });

  auto* tr = app.add_subcommand("trace", "Trace of M_G, equal to XB of G with head and tail identified");
  add_graph(tr, o.graph, "--graph");
  add_format(tr, o);
  tr->callback([&] { action = [&] { return cmd_trace(o, out); }; });

  auto* glue = app.add_subcommand("glue-check", "Check M_(G+H) = M_G M_H on a block");
  add_graph(glue, o.left, "--left");
  add_graph(glue, o.right, "--right");
  glue->add_option("--size", o.size, "Block size")->required();
  add_format(glue, o);
  glue->callback([&] { action = [&] { return cmd_glue_check(o, out); }; });

  auto* rev = app.add_subcommand("reverse-check", "Check K M_(G_rev) = M_G^T K on a block");
  add_graph(rev, o.graph, "--graph");
  rev->add_option("--size", o.size, "Block size")->required();
  add_format(rev, o);
  rev->callback([&] { action = [&] { return cmd_reverse_check(o, out); }; });

  auto* km = app.add_subcommand("kmatrix", "Block of the reversal matrix K");
  km->add_option("--size", o.size, "Block size")->required();
  add_format(km, o);
  km->callback([&] { action = [&] { return cmd_kmatrix(o, out); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    return action();
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::logic_error& e) {
    // invalid_argument, out_of_range and domain_error: bad input or an enumeration bound
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFail;
  }
}

}  // namespace xbmat::cli
