#include "holoq/errors.hpp"
#include "holoq/pipeline.hpp"
#include "holoq/screener.hpp"

#include <CLI11.hpp>

#include <iostream>

using namespace holoq;

namespace {

constexpr int kOk = 0;
constexpr int kDomainFailure = 1;
constexpr int kInputError = 2;

bool is_input_error(ErrorKind k) {
  switch (k) {
    case ErrorKind::InvalidInput:
    case ErrorKind::MalformedPermutation:
    case ErrorKind::UnknownGeneratorName:
    case ErrorKind::EnumerationBoundExceeded:
    case ErrorKind::NotAModule:
    case ErrorKind::InvalidCocycle:
      return true;
    default:
      return false;
  }
}

void print(const Json& j) { std::cout << canonical_dump(j) << '\n'; }

int cmd_chartable(const std::string& group, bool json) {
  const CharacterTable t(load_group(group));
  const PermGroup& g = t.group();
  if (json) {
    Json classes = Json::array();
    for (const auto& c : g.classes())
      classes.push_back(Json{{"representative", g.word_name(c.representative)}, {"size", c.size()}, {"order", c.element_order}});
    Json chars = Json::array();
    for (const auto& chi : t.irreducibles()) {
      Json vals = Json::array();
      for (const auto& v : chi.values) vals.push_back(v.str());
      chars.push_back(Json{{"values", std::move(vals)}, {"indicator", fs_indicator(t, chi)}});
    }
    print(Json{{"order", g.order()}, {"classes", std::move(classes)}, {"characters", std::move(chars)}});
    return kOk;
  }
  std::cout << "|G| = " << g.order() << ", " << t.num_classes() << " classes\n";
  std::cout << "class";
  for (const auto& c : g.classes()) std::cout << '\t' << g.word_name(c.representative);
  std::cout << "\nsize";
  for (const auto& c : g.classes()) std::cout << '\t' << c.size();
  std::cout << '\n';
  for (std::size_t i = 0; i < t.irreducibles().size(); ++i) {
    const auto& chi = t.irreducible(i);
    std::cout << "X." << i + 1 << " [" << fs_indicator(t, chi) << ']';
    for (const auto& v : chi.values) std::cout << '\t' << v.str();
    std::cout << '\n';
  }
  return kOk;
}

int cmd_cohomology(const std::string& group, const std::string& module, bool json) {
  const GLattice L = load_lattice(module, load_group(group));
  const auto h = h2(L);
  std::string text = "0";
  Json inv = Json::array();
  for (std::size_t i = 0; i < h.invariants.size(); ++i) {
    text = (i ? text + " + Z/" : "Z/") + h.invariants[i].str();
    inv.push_back(h.invariants[i].str());
  }
  if (json)
    print(Json{{"invariants", std::move(inv)}, {"order", h.order().str()}});
  else
    std::cout << "H² ≅ " << text << '\n';
  return kOk;
}

int cmd_manifold(const std::string& group, const std::string& module, const std::string& cocycle, bool json) {
  const GroupPtr G = load_group(group);
  const auto r = manifold_report(group, module, cocycle);
  if (json) {
    print(to_json(r, *G));
  } else {
    std::cout << "dimension " << r.dimension << '\n'
              << (r.torsion_free ? "torsion-free" : "has torsion") << '\n'
              << "holonomy order " << r.holonomy_order << (r.holonomy_faithful ? " (faithful)" : " (not faithful)") << '\n'
              << "b1 " << r.first_betti << '\n'
              << "type " << to_string(r.type_verdict) << '\n';
  }
  return r.torsion_free ? kOk : kDomainFailure;
}

int cmd_screen(const std::vector<std::string>& inputs, bool blocks, bool json) {
  std::vector<std::filesystem::path> paths(inputs.begin(), inputs.end());
  const auto r = screen_catalog(paths, {blocks});
  if (json) {
    print(to_json(r));
  } else {
    for (const auto& e : r.entries) {
      if (!e.verdict) {
        std::cout << e.source << ": error: " << e.error << '\n';
        continue;
      }
      const auto& v = *e.verdict;
      std::cout << v.group_id << ": " << (v.candidate ? "candidate" : "excluded");
      if (v.first_failure) {
        std::cout << ", condition " << *v.first_failure;
        if (*v.first_failure == 4 && v.primitive_obstruction) std::cout << ", p = " << *v.primitive_obstruction;
        std::cout << " (" << v.condition(*v.first_failure)->detail << ')';
      }
      if (v.skew) std::cout << ", skew";
      std::cout << '\n';
    }
    std::cout << r.candidates << " candidate(s), " << r.excluded << " excluded, " << r.errors << " error(s)\n";
  }
  return r.errors ? kInputError : kOk;
}

int cmd_verify_paper(const std::string& dir, bool json) {
  const auto r = verify_paper(dir);
  if (json) {
    print(to_json(r));
  } else {
    for (const auto& s : r.stages) std::cout << (s.ok ? "ok   " : "FAIL ") << s.name << ": " << s.detail << '\n';
    for (const auto& [k, v] : r.digests) std::cout << "sha256 " << k << ' ' << v << '\n';
    if (r.ok()) std::cout << "verdict: HT\n";
  }
  return r.ok() ? kOk : kDomainFailure;
}

int cmd_verify_examples(const std::string& dir, bool json) {
  const auto results = verify_examples(dir);
  bool all = true;
  Json out = Json::array();
  for (const auto& e : results) {
    all = all && e.ok;
    if (json) {
      Json j{{"name", e.name}, {"ok", e.ok}, {"detail", e.detail}};
      if (e.report) {
        const GroupPtr g = load_group(std::filesystem::path(dir) / e.name / "group.json");
        j["report"] = to_json(*e.report, *g);
      }
      out.push_back(std::move(j));
    } else {
      std::cout << (e.ok ? "ok   " : "FAIL ") << e.name;
      if (e.report)
        std::cout << ": dimension " << e.report->dimension << ", " << (e.report->torsion_free ? "torsion-free" : "torsion")
                  << ", " << to_string(e.report->type_verdict) << ", b1 = " << e.report->first_betti
                  << ", holonomy order " << e.report->holonomy_order;
      if (!e.detail.empty()) std::cout << " [" << e.detail << ']';
      std::cout << '\n';
    }
  }
  if (json) print(out);
  return all ? kOk : kDomainFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"holoq: flat manifolds with prescribed holonomy type"};
  app.require_subcommand(1);
  bool json = false;
  bool blocks = false;
  std::string group, module, cocycle;
  std::vector<std::string> inputs;
  std::string rebuild_dir = std::string(HOLOQ_DATA_DIR) + "/paper-thm1";
  std::string examples_dir = std::string(HOLOQ_DATA_DIR) + "/examples";

  auto* chartable = app.add_subcommand("chartable", "character table of a permutation group");
  chartable->add_option("group", group)->required();
  auto* cohomology = app.add_subcommand("cohomology", "H^2(G, L) of a G-lattice");
  cohomology->add_option("group", group)->required();
  cohomology->add_option("module", module)->required();
  auto* manifold = app.add_subcommand("manifold", "assemble and report a crystallographic group");
  manifold->add_option("group", group)->required();
  manifold->add_option("module", module)->required();
  manifold->add_option("cocycle", cocycle)->required();
  auto* screen_cmd = app.add_subcommand("screen", "screen group files or directories");
  screen_cmd->add_option("inputs", inputs)->required();
  screen_cmd->add_flag("--blocks", blocks, "also test principal blocks");
  auto* rebuild = app.add_subcommand("verify-paper", "rebuild the 48-dimensional example");
  rebuild->add_option("dir", rebuild_dir);
  auto* examples = app.add_subcommand("verify-examples", "check the low-dimensional examples");
  examples->add_option("dir", examples_dir);
  for (auto* sub : {chartable, cohomology, manifold, screen_cmd, rebuild, examples})
    sub->add_flag("--json", json, "canonical JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (*chartable) return cmd_chartable(group, json);
    if (*cohomology) return cmd_cohomology(group, module, json);
    if (*manifold) return cmd_manifold(group, module, cocycle, json);
    if (*screen_cmd) return cmd_screen(inputs, blocks, json);
    if (*rebuild) return cmd_verify_paper(rebuild_dir, json);
    if (*examples) return cmd_verify_examples(examples_dir, json);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return is_input_error(e.kind()) ? kInputError : kDomainFailure;
  }
  return kOk;
}
