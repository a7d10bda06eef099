#pragma once

#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "xbmat/combinatorics.hpp"
#include "xbmat/esym.hpp"
#include "xbmat/graph.hpp"
#include "xbmat/tmatrix.hpp"

namespace xbmat {

using Json = nlohmann::ordered_json;

Json to_json(const Partition& p);
Json to_json(const Composition& c);
Json to_json(const LaurentPoly& p);  // {"<exponent>": "<integer>"}, decreasing exponent
Json to_json(const Multigraph& g);   // {"n": N, "edges": [[u, v], ...]}

/// {"basis":"e","terms":[{"partition":[...],"t":{"<exp>":"<int>"}}]}, terms in
/// canonical order.
Json to_json(const ESym& f);
/// Same envelope with "value": "<rational>" in place of "t".
Json to_json(const RationalESym& f);

struct BlockRoots {
  Multigraph graph;
  int head;
  int tail;
};
/// {"rows":R,"cols":C,["graph":...,"head":a,"tail":b,]"entries":[ESym...]} row-major.
Json to_json(const Block& b, const std::optional<BlockRoots>& roots = std::nullopt);

LaurentPoly laurent_from_json(const Json& j);
ESym esym_from_json(const Json& j);
RationalESym rational_esym_from_json(const Json& j);
Block block_from_json(const Json& j);

/// Canonical serialized text (2-space indent).
std::string dump(const Json& j);

}  // namespace xbmat
