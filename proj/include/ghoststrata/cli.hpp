#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "ghoststrata/classify.hpp"
#include "ghoststrata/decorated.hpp"

namespace ghoststrata {

enum ExitCode : int {
  kExitOk = 0,
  kExitFailure = 1,  // property failure or snapshot drift
  kExitUsage = 2,    // bad arguments, unreadable file, unsupported level
  kExitParse = 3,
  kExitBound = 4,
};

/// Everything `analyze` reports about one decorated graph. The stratum age,
/// witness and junior flag are null for composite ell. With `k`, the
/// genus labelling for k is added; without it, labels from the input are used.
nlohmann::json analysis_report(const DecoratedGraph& d, std::optional<std::int64_t> k = std::nullopt);

/// Plain-text rendering of analysis_report.
std::string format_analysis(const nlohmann::json& report);

/// One header line, then one row per class, in the given order.
std::string classes_tsv(const std::vector<StratumClass>& classes);
nlohmann::json classes_json(std::uint32_t ell, std::int64_t k, const std::vector<StratumClass>& classes);

/// Snapshot file name for a classify invocation, e.g. "classify_ell5_k1.tsv".
std::string snapshot_name(std::uint32_t ell, std::int64_t k, std::optional<std::size_t> max_edges,
                          bool include_dominated);

/// The `ghoststrata` command line. Returns an ExitCode.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ghoststrata
