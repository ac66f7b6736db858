#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace ghoststrata {

using Row = std::vector<std::uint32_t>;

/// Rank over Z/p, p prime.
std::size_t rank_mod_p(std::vector<Row> rows, std::uint32_t p);

/// Coefficients c with sum c_i rows[i] = target over Z/p, or empty if target
/// is outside the span. Throws std::invalid_argument on ragged input.
std::optional<std::vector<std::uint32_t>> solve_in_span(const std::vector<Row>& rows, const Row& target,
                                                        std::uint32_t p);

}  // namespace ghoststrata
