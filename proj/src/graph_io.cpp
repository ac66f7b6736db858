#include "ghoststrata/graph_io.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "json.hpp"

#include "ghoststrata/errors.hpp"

namespace ghoststrata {

namespace {

using nlohmann::json;

const json& field(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) throw ParseError(where, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(where, std::string("missing key \"") + key + "\"");
  return *it;
}

std::int64_t integer(const json& v, const std::string& where) {
  if (!v.is_number_integer()) throw ParseError(where, "expected an integer");
  return v.get<std::int64_t>();
}

}  // namespace

DecoratedGraph parse_decorated(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError("byte " + std::to_string(e.byte), e.what());
  }

  const auto ell = integer(field(doc, "ell", ""), "/ell");
  if (ell < 2 || ell > 1'000'000) throw ParseError("/ell", "level must be in [2, 1000000]");

  const auto& vertices = field(doc, "vertices", "");
  if (!vertices.is_array() || vertices.empty())
    throw ParseError("/vertices", "expected a non-empty array");
  std::map<std::int64_t, std::optional<std::int64_t>> by_id;
  std::size_t with_genus = 0;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const auto where = "/vertices/" + std::to_string(i);
    const auto id = integer(field(vertices[i], "id", where), where + "/id");
    std::optional<std::int64_t> genus;
    if (vertices[i].contains("genus") && !vertices[i]["genus"].is_null()) {
      genus = integer(vertices[i]["genus"], where + "/genus");
      if (*genus < 0 || *genus > 1'000'000) throw ParseError(where + "/genus", "genus out of range");
      ++with_genus;
    }
    if (!by_id.emplace(id, genus).second)
      throw ParseError(where + "/id", "duplicate vertex id " + std::to_string(id));
  }
  if (with_genus != 0 && with_genus != vertices.size())
    throw ParseError("/vertices", "genus must be given for every vertex or for none");

  std::map<std::int64_t, VertexId> index;
  std::optional<std::vector<std::uint32_t>> genus;
  if (with_genus) genus.emplace();
  for (const auto& [id, g] : by_id) {
    index.emplace(id, static_cast<VertexId>(index.size()));
    if (genus) genus->push_back(static_cast<std::uint32_t>(*g));
  }

  const auto& edges = field(doc, "edges", "");
  if (!edges.is_array()) throw ParseError("/edges", "expected an array");
  std::vector<EdgeEnds> ends;
  std::vector<std::int64_t> m;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto where = "/edges/" + std::to_string(i);
    auto vertex = [&](const char* key) {
      const auto id = integer(field(edges[i], key, where), where + "/" + key);
      auto it = index.find(id);
      if (it == index.end()) throw ParseError(where + "/" + key, "unknown vertex id " + std::to_string(id));
      return it->second;
    };
    const auto tail = vertex("tail");
    const auto head = vertex("head");
    const auto value = integer(field(edges[i], "m", where), where + "/m");
    if (value < 0 || value >= ell) throw ParseError(where + "/m", "m must lie in [0, ell)");
    ends.push_back({tail, head});
    m.push_back(value);
  }

  try {
    Multigraph g(index.size(), std::move(ends));
    return DecoratedGraph::from_edge_values(std::move(g), static_cast<std::uint32_t>(ell), m,
                                            std::move(genus));
  } catch (const std::invalid_argument& e) {
    throw ParseError("/edges", e.what());
  }
}

json to_json(const DecoratedGraph& d) {
  const auto& g = d.base();
  const auto ell = d.ell();
  std::vector<std::tuple<VertexId, VertexId, std::uint32_t>> rows;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    auto [t, h] = g.ends(e);
    const auto fwd = d.m().on_edge(e);
    const auto back = reduce_mod(-static_cast<std::int64_t>(fwd), ell);
    if (t > h || (t == h && back < fwd)) {
      rows.emplace_back(h, t, back);
    } else {
      rows.emplace_back(t, h, fwd);
    }
  }
  std::sort(rows.begin(), rows.end());

  json vertices = json::array();
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    json genus = nullptr;
    if (d.genus()) genus = (*d.genus())[v];
    vertices.push_back({{"genus", genus}, {"id", v}});
  }
  json edges = json::array();
  for (const auto& [t, h, m] : rows) edges.push_back({{"head", h}, {"m", m}, {"tail", t}});
  return {{"edges", edges}, {"ell", ell}, {"vertices", vertices}};
}

std::string serialize_decorated(const DecoratedGraph& d) { return to_json(d).dump(2) + "\n"; }

}  // namespace ghoststrata
