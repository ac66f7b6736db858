#pragma once

#include <string>
#include <string_view>

#include "json.hpp"

#include "ghoststrata/decorated.hpp"

namespace ghoststrata {

/// Reads the JSON decorated-graph format
///
///   {"ell": L, "vertices": [{"id": i, "genus": g|null}, ...],
///    "edges": [{"tail": t, "head": h, "m": m}, ...]}
///
/// where m in [0, L) is M on the tail -> head dart. Vertex ids may be any
/// distinct integers; they are renumbered in increasing order. Genus must be
/// given for every vertex or for none. Throws ParseError.
DecoratedGraph parse_decorated(std::string_view text);

/// Canonical text: edges oriented tail <= head (M negated on reversal), loops
/// carry the smaller of the two dart values, edges sorted, keys sorted.
std::string serialize_decorated(const DecoratedGraph& d);

nlohmann::json to_json(const DecoratedGraph& d);

}  // namespace ghoststrata
