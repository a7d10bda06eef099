#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include "xbmat/graph.hpp"

namespace xbmat::cli {

/// Largest builder arity accepted by the DSL.
inline constexpr int kMaxBuilderArity = 64;

struct GraphExpr;

/// P<k>, C<k>, K<k>, S<k>.
struct BuilderAtom {
  char family;
  int arity;
};

/// @path: an edge-list file.
struct FileRef {
  std::string path;
};

/// lhs + rhs (glue_sum); chains are left-associative.
struct GlueNode {
  std::shared_ptr<const GraphExpr> lhs;
  std::shared_ptr<const GraphExpr> rhs;
};

struct GraphExpr {
  std::variant<BuilderAtom, FileRef, GlueNode> node;
  std::size_t offset = 0;  // position of the node's first character
};

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t offset);
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// expr := term ('+' term)* ; term := P<int> | C<int> | K<int> | S<int> | @path | '(' expr ')'
GraphExpr parse_expr(std::string_view text);

using FileLoader = std::function<Multigraph(const std::string&)>;
Multigraph load_edge_list_file(const std::string& path);

Multigraph evaluate(const GraphExpr& expr, const FileLoader& load = load_edge_list_file);
std::string to_string(const GraphExpr& expr);

}  // namespace xbmat::cli
