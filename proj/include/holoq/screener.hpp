#pragma once

#include "holoq/character_table.hpp"
#include "holoq/io.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace holoq {

struct ConditionResult {
  int number = 0;
  std::string name;
  bool pass = false;
  std::string detail;  // non-empty on failure
};

struct ScreenVerdict {
  std::string group_id;
  std::vector<ConditionResult> conditions;
  bool candidate = false;
  std::optional<int> first_failure;
  bool skew = false;
  /// Prime p with cyclic Sylow p-subgroup and a normal p-complement, if any.
  std::optional<std::uint64_t> primitive_obstruction;

  /// Result for condition k, if it was evaluated.
  [[nodiscard]] const ConditionResult* condition(int k) const;
};

struct ScreenOptions {
  bool blocks = false;  // also evaluate condition 9
};

/// Evaluates all necessary conditions for quaternionic-type holonomy; every
/// condition is reported, not only the first failure.
ScreenVerdict screen(const CharacterTable& t, const std::string& group_id, ScreenOptions options = {});
ScreenVerdict screen(GroupPtr group, const std::string& group_id, ScreenOptions options = {});

struct CatalogEntry {
  std::string source;
  std::optional<ScreenVerdict> verdict;
  std::string error;  // set when the file could not be screened
};

struct CatalogReport {
  std::vector<CatalogEntry> entries;
  std::size_t candidates = 0;
  std::size_t excluded = 0;
  std::size_t errors = 0;
};

/// Screens every file in input order; a directory contributes its *.json files
/// in lexicographic order. Per-file failures are recorded and the run continues.
CatalogReport screen_catalog(const std::vector<std::filesystem::path>& inputs, ScreenOptions options = {});

Json to_json(const ScreenVerdict& v);
Json to_json(const CatalogReport& r);

}  // namespace holoq
