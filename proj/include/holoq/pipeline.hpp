#pragma once

#include "holoq/crystallographic.hpp"
#include "holoq/io.hpp"

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace holoq {

struct StageResult {
  std::string name;
  bool ok = false;
  std::string detail;
};

/// Stages run in order; the first failing stage ends the run.
struct PipelineReport {
  std::vector<StageResult> stages;
  std::map<std::string, std::string> digests;  // SHA-256 of canonical JSON artifacts
  Json facts = Json::object();                 // values established along the way

  [[nodiscard]] bool ok() const;
  [[nodiscard]] std::optional<std::string> failed_stage() const;
};

/// End-to-end reconstruction of the order-64 example from a fixture directory
/// holding group.json, relations.json, basis.json, module.json and cocycle.json.
PipelineReport verify_paper(const std::filesystem::path& dir);

struct ExampleResult {
  std::string name;
  std::optional<FlatManifoldReport> report;
  bool ok = false;
  std::string detail;
};

/// Every subdirectory with group.json, module.json and cocycle.json is
/// assembled and reported. Known examples are also checked against their
/// expected invariants. InvalidInput when no example is found.
std::vector<ExampleResult> verify_examples(const std::filesystem::path& dir);

/// Loads, assembles and reports one manifold.
FlatManifoldReport manifold_report(const std::filesystem::path& group, const std::filesystem::path& module,
                                   const std::filesystem::path& cocycle);

Json to_json(const FlatManifoldReport& r, const PermGroup& g);
Json to_json(const PipelineReport& r);

}  // namespace holoq
