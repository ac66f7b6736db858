#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ghoststrata {

struct PropertyResult {
  std::string scope;
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  /// FNV-1a over the generated case descriptions; equal seeds give equal digests.
  std::uint64_t digest = 0;
  std::optional<std::string> first_failure;
};

struct PropsReport {
  std::vector<PropertyResult> results;
  bool ok() const;
};

/// graph_core, cochain, decorated, ghosts, classify.
const std::vector<std::string>& property_scopes();

/// Runs every property in `scope` (all scopes when empty). Each property draws
/// from its own generator seeded by `seed` and the property name, so adding or
/// removing a property leaves the cases of the others unchanged. Throws
/// std::invalid_argument for an unknown scope.
PropsReport run_properties(std::uint64_t seed, const std::optional<std::string>& scope = std::nullopt);

}  // namespace ghoststrata
