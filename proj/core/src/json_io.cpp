#include "xbmat/json_io.hpp"

#include <stdexcept>

namespace xbmat {

namespace {

std::vector<int> int_array(const Json& j, const char* what) {
  if (!j.is_array()) throw std::invalid_argument(std::string(what) + " must be a JSON array");
  std::vector<int> out;
  for (const auto& v : j) out.push_back(v.get<int>());
  return out;
}

void expect_e_basis(const Json& j) {
  if (!j.is_object() || j.value("basis", "") != "e" || !j.contains("terms") || !j["terms"].is_array()) {
    throw std::invalid_argument("expected an e-basis object {\"basis\":\"e\",\"terms\":[...]}");
  }
}

}  // namespace

Json to_json(const Partition& p) { return Json(p.parts()); }
Json to_json(const Composition& c) { return Json(c.parts()); }

Json to_json(const LaurentPoly& p) {
  Json out = Json::object();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) out[std::to_string(it->first)] = it->second.str();
  return out;
}

Json to_json(const Multigraph& g) {
  Json edges = Json::array();
  for (const auto& e : g.edges()) edges.push_back(Json::array({e.u, e.v}));
  return Json{{"n", g.vertex_count()}, {"edges", std::move(edges)}};
}

Json to_json(const ESym& f) {
  Json terms = Json::array();
  for (const auto& [lambda, c] : f.terms()) {
    terms.push_back(Json{{"partition", to_json(lambda)}, {"t", to_json(c)}});
  }
  return Json{{"basis", "e"}, {"terms", std::move(terms)}};
}

Json to_json(const RationalESym& f) {
  Json terms = Json::array();
  for (const auto& [lambda, c] : f.terms()) {
    terms.push_back(Json{{"partition", to_json(lambda)}, {"value", to_string(c)}});
  }
  return Json{{"basis", "e"}, {"terms", std::move(terms)}};
}

Json to_json(const Block& b, const std::optional<BlockRoots>& roots) {
  Json out{{"rows", b.rows()}, {"cols", b.cols()}};
  if (roots) {
    out["graph"] = to_json(roots->graph);
    out["head"] = roots->head;
    out["tail"] = roots->tail;
  }
  Json entries = Json::array();
  for (const auto& e : b.entries()) entries.push_back(to_json(e));
  out["entries"] = std::move(entries);
  return out;
}

LaurentPoly laurent_from_json(const Json& j) {
  if (!j.is_object()) throw std::invalid_argument("t-polynomial must be a JSON object");
  LaurentPoly p;
  for (const auto& [key, value] : j.items()) {
    std::size_t used = 0;
    const int exponent = std::stoi(key, &used);
    if (used != key.size()) throw std::invalid_argument("bad exponent key '" + key + "'");
    p.add_term(Integer(value.get<std::string>()), exponent);
  }
  return p;
}

ESym esym_from_json(const Json& j) {
  expect_e_basis(j);
  ESym f;
  for (const auto& term : j["terms"]) {
    f.add_term(Partition(int_array(term.at("partition"), "partition")), laurent_from_json(term.at("t")));
  }
  return f;
}

RationalESym rational_esym_from_json(const Json& j) {
  expect_e_basis(j);
  RationalESym f;
  for (const auto& term : j["terms"]) {
    f.add_term(Partition(int_array(term.at("partition"), "partition")),
               parse_rational(term.at("value").get<std::string>()));
  }
  return f;
}

Block block_from_json(const Json& j) {
  const int rows = j.at("rows").get<int>();
  const int cols = j.at("cols").get<int>();
  const Json& entries = j.at("entries");
  if (!entries.is_array() || entries.size() != static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {
    throw std::invalid_argument("block entries do not match rows x cols");
  }
  Block b(rows, cols);
  std::size_t k = 0;
  for (int r = 1; r <= rows; ++r) {
    for (int c = 1; c <= cols; ++c) b.at(r, c) = esym_from_json(entries[k++]);
  }
  return b;
}

std::string dump(const Json& j) { return j.dump(2); }

}  // namespace xbmat
