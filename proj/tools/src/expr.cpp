#include "xbmat_cli/expr.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace xbmat::cli {

ParseError::ParseError(const std::string& what, std::size_t offset)
    : std::invalid_argument(what + " at offset " + std::to_string(offset)), offset_(offset) {}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  GraphExpr parse() {
    GraphExpr e = expr();
    skip_ws();
    if (pos_ != text_.size()) throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
    return e;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  GraphExpr expr() {
    GraphExpr lhs = term();
    while (true) {
      skip_ws();
      if (pos_ >= text_.size() || text_[pos_] != '+') return lhs;
      ++pos_;
      GraphExpr rhs = term();
      const std::size_t at = lhs.offset;
      lhs = GraphExpr{GlueNode{std::make_shared<const GraphExpr>(std::move(lhs)),
                               std::make_shared<const GraphExpr>(std::move(rhs))},
                      at};
    }
  }

  GraphExpr term() {
    skip_ws();
    if (pos_ >= text_.size()) throw ParseError("expected a graph term", pos_);
    const std::size_t start = pos_;
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      GraphExpr inner = expr();
      skip_ws();
      if (pos_ >= text_.size() || text_[pos_] != ')') throw ParseError("expected ')'", pos_);
      ++pos_;
      inner.offset = start;
      return inner;
    }
    if (c == '@') {
      ++pos_;
      const std::size_t from = pos_;
      while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])) && text_[pos_] != '+' &&
             text_[pos_] != ')') {
        ++pos_;
      }
      if (pos_ == from) throw ParseError("expected a file path after '@'", from);
      return GraphExpr{FileRef{std::string(text_.substr(from, pos_ - from))}, start};
    }
    if (c == 'P' || c == 'C' || c == 'K' || c == 'S') {
      ++pos_;
      const std::size_t digits = pos_;
      long long value = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        value = value * 10 + (text_[pos_] - '0');
        if (value > 1'000'000) throw ParseError("arity too large", digits);
        ++pos_;
      }
      if (pos_ == digits) throw ParseError(std::string("expected an arity after '") + c + "'", digits);
      const int min_arity = c == 'C' ? 2 : 1;
      if (value < min_arity || value > kMaxBuilderArity) {
        throw ParseError(std::string("arity error: ") + c + std::to_string(value) + " needs " +
                             std::to_string(min_arity) + " <= k <= " + std::to_string(kMaxBuilderArity),
                         start);
      }
      return GraphExpr{BuilderAtom{c, static_cast<int>(value)}, start};
    }
    throw ParseError(std::string("unexpected '") + c + "'", pos_);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

GraphExpr parse_expr(std::string_view text) { return Parser(text).parse(); }

Multigraph load_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open edge list '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return Multigraph::from_edge_list(buf.str());
}

Multigraph evaluate(const GraphExpr& expr, const FileLoader& load) {
  struct Visitor {
    const FileLoader& load;
    Multigraph operator()(const BuilderAtom& a) const {
      switch (a.family) {
        case 'P': return path(a.arity);
        case 'C': return cycle(a.arity);
        case 'K': return complete(a.arity);
        default: return star(a.arity);
      }
    }
    Multigraph operator()(const FileRef& f) const { return load(f.path); }
    Multigraph operator()(const GlueNode& g) const {
      return glue_sum(evaluate(*g.lhs, load), evaluate(*g.rhs, load));
    }
  };
  return std::visit(Visitor{load}, expr.node);
}

std::string to_string(const GraphExpr& expr) {
  struct Visitor {
    std::string operator()(const BuilderAtom& a) const { return a.family + std::to_string(a.arity); }
    std::string operator()(const FileRef& f) const { return "@" + f.path; }
    std::string operator()(const GlueNode& g) const {
      std::string rhs = to_string(*g.rhs);
      if (std::holds_alternative<GlueNode>(g.rhs->node)) rhs = "(" + rhs + ")";
      return to_string(*g.lhs) + "+" + rhs;
    }
  };
  return std::visit(Visitor{}, expr.node);
}

}  // namespace xbmat::cli
