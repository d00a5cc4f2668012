#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "holoq/errors.hpp"
#include "holoq/pipeline.hpp"
#include "support.hpp"

#include <fstream>

using namespace holoq;
namespace fs = std::filesystem;

namespace {

// Copy of the order-64 fixture directory that is removed on scope exit.
struct ScratchCopy {
  fs::path dir;
  explicit ScratchCopy(const std::string& tag) : dir(fs::temp_directory_path() / ("holoq_pipeline_" + tag)) {
    fs::remove_all(dir);
    fs::copy(test::data_dir() / "paper-thm1", dir);
  }
  ~ScratchCopy() { fs::remove_all(dir); }
  Json read(const std::string& file) const { return read_json(dir / file); }
  void write(const std::string& file, const Json& j) const { std::ofstream(dir / file) << j.dump(2); }
};

}  // namespace

TEST_CASE("unmodified fixtures rebuild the 48-dimensional manifold") {
  const auto r = verify_paper(test::data_dir() / "paper-thm1");
  for (const auto& s : r.stages) {
    INFO(s.name << ": " << s.detail);
    CHECK(s.ok);
  }
  REQUIRE(r.ok());
  CHECK(r.stages.size() == 11);
  const Json& f = r.facts;
  CHECK(f["order"] == 64);
  CHECK(f["classes"] == 19);
  CHECK(f["quaternionic"] == 3);
  CHECK(f["central_patterns"] == Json::array({"(4,4,-4,-4)", "(4,-4,4,-4)", "(4,-4,-4,4)"}));
  CHECK(f["inner_products"] == Json::array({"4", "0", "0"}));
  CHECK(f["projection_rank"] == 16);
  CHECK(f["h2"] == Json::array({"2"}));
  CHECK(f["automorphisms"] == Json::array({"b^2->a^2", "a^2b^2->a^2"}));
  CHECK(f["special"] == true);
  const Json& m = f["manifold"];
  CHECK(m["dimension"] == 48);
  CHECK(m["torsion_free"] == true);
  CHECK(m["holonomy_faithful"] == true);
  CHECK(m["first_betti"] == 0);
  CHECK(m["type"] == "HT");
  CHECK(r.digests.size() == 3);
  // digests are stable across runs
  CHECK(verify_paper(test::data_dir() / "paper-thm1").digests == r.digests);
}

TEST_CASE("a sign error in the printed action fails reconciliation") {
  const ScratchCopy copy("sign");
  Json module = copy.read("module.json");
  auto& rows = module["action"]["a"];
  for (auto& row : rows) {
    auto it = std::find_if(row.begin(), row.end(), [](const Json& x) { return x.get<int>() != 0; });
    if (it != row.end()) {
      *it = -it->get<int>();
      break;
    }
  }
  copy.write("module.json", module);
  const auto r = verify_paper(copy.dir);
  CHECK_FALSE(r.ok());
  CHECK(r.failed_stage() == "projection");
  CHECK(r.stages.back().name == "projection");
}

TEST_CASE("a zeroed cocycle value fails the cocycle stage") {
  const ScratchCopy copy("cocycle");
  Json cocycle = copy.read("cocycle.json");
  for (auto& v : cocycle["values"]["c"]) v = "0";
  copy.write("cocycle.json", cocycle);
  const auto r = verify_paper(copy.dir);
  CHECK(r.failed_stage() == "cocycle");
  CHECK(r.stages.back().detail.find("not a cocycle") != std::string::npos);
}

TEST_CASE("a broken relation fails the relations stage") {
  const ScratchCopy copy("relations");
  Json rel = copy.read("relations.json");
  rel["relations"].push_back("[c,d]=a^2");
  copy.write("relations.json", rel);
  const auto r = verify_paper(copy.dir);
  CHECK(r.failed_stage() == "relations");
  CHECK(r.stages.size() == 2);
}

TEST_CASE("a missing file fails with a diagnostic") {
  const ScratchCopy copy("missing");
  fs::remove(copy.dir / "basis.json");
  const auto r = verify_paper(copy.dir);
  CHECK(r.failed_stage() == "projection");
  CHECK(r.stages.back().detail.find("InvalidInput") != std::string::npos);
}

TEST_CASE("low-dimensional examples") {
  const auto results = verify_examples(test::data_dir() / "examples");
  REQUIRE(results.size() == 3);
  for (const auto& e : results) {
    INFO(e.name << " " << e.detail);
    CHECK(e.ok);
  }
  CHECK(results[0].name == "hantzsche-wendt");
  CHECK(results[0].report->type_verdict == ModuleType::RT);
  CHECK(results[0].report->dimension == 3);
  CHECK(results[1].report->first_betti == 1);
  CHECK(results[2].report->type_verdict == ModuleType::CT);
  CHECK(results[2].report->dimension == 8);
  CHECK(results[2].report->holonomy_order == 9);

  const fs::path empty = fs::temp_directory_path() / "holoq_pipeline_empty";
  fs::create_directories(empty);
  CHECK_THROWS_AS(verify_examples(empty), Error);
  fs::remove_all(empty);
  CHECK_THROWS_AS(verify_examples(empty), Error);
}
