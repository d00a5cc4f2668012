#include "holoq/pipeline.hpp"

#include "holoq/errors.hpp"
#include "holoq/words.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace holoq {

bool PipelineReport::ok() const {
  return !stages.empty() && std::all_of(stages.begin(), stages.end(), [](const StageResult& s) { return s.ok; });
}

std::optional<std::string> PipelineReport::failed_stage() const {
  for (const auto& s : stages)
    if (!s.ok) return s.name;
  return std::nullopt;
}

namespace {

struct StageFailure {
  std::string detail;
};

void require(bool cond, const std::string& detail) {
  if (!cond) throw StageFailure{detail};
}

// Runs stages until one fails; library errors become stage diagnostics.
class Runner {
 public:
  explicit Runner(PipelineReport& r) : report_(r) {}

  bool run(const std::string& name, const std::function<std::string()>& body) {
    if (failed_) return false;
    StageResult s{name, false, {}};
    try {
      s.detail = body();
      s.ok = true;
    } catch (const StageFailure& f) {
      s.detail = f.detail;
    } catch (const Error& e) {
      s.detail = e.what();
    }
    failed_ = !s.ok;
    report_.stages.push_back(std::move(s));
    return !failed_;
  }

 private:
  PipelineReport& report_;
  bool failed_ = false;
};

Json action_json(const GLattice& L) {
  Json j = Json::object();
  for (std::size_t s = 0; s < L.group().num_generators(); ++s)
    j[L.group().generator_name(s)] = to_json(L.generator_matrix(s));
  return j;
}

Json cocycle_json(const GLattice& L, const Cocycle1& c) {
  Json j = Json::object();
  for (std::size_t s = 0; s < L.group().num_generators(); ++s)
    j[L.group().generator_name(s)] = to_json(reduce_mod_one(c.generator_values[s]));
  return j;
}

ElementId element_of(const PermGroup& g, const std::string& word) { return evaluate(g, parse_word(word, g)); }

std::string pattern_string(const std::vector<Cyclotomic>& v) {
  std::string out;
  for (const auto& x : v) out += (out.empty() ? "" : ",") + x.str();
  return "(" + out + ")";
}

std::vector<ElementId> kernel(const CharacterTable& t, const Character& chi) {
  const Cyclotomic d(Rational(chi.degree()));
  std::vector<ElementId> out;
  for (ElementId x = 0; x < t.group().order(); ++x)
    if (chi.values[t.group().class_of(x)] == d) out.push_back(x);
  return out;
}

IntMatrix basis_from_json(const Json& j, Eigen::Index ambient) {
  const auto rows = j.at("basis").get<std::vector<std::vector<long long>>>();
  IntMatrix B(ambient, static_cast<Eigen::Index>(rows.size()));
  for (std::size_t c = 0; c < rows.size(); ++c) {
    if (static_cast<Eigen::Index>(rows[c].size()) != ambient)
      throw Error(ErrorKind::InvalidInput, "basis vector " + std::to_string(c) + " has the wrong length");
    for (Eigen::Index i = 0; i < ambient; ++i) B(i, static_cast<Eigen::Index>(c)) = rows[c][i];
  }
  return B;
}

}  // namespace

PipelineReport verify_paper(const std::filesystem::path& dir) {
  PipelineReport report;
  Json& facts = report.facts;
  Runner run(report);

  GroupPtr G;
  std::optional<CharacterTable> table;
  std::array<std::size_t, 3> chi_index{};
  std::array<ElementId, 3> central{};  // a^2, b^2, a^2b^2
  std::vector<ElementId> C1;
  std::optional<GLattice> M;
  std::optional<CohomologyGroup> H;
  std::optional<Cocycle1> alpha;
  std::array<std::optional<Automorphism>, 2> f;
  std::optional<CrystGroupData> gamma;

  run.run("group", [&] {
    G = load_group(dir / "group.json");
    facts["order"] = G->order();
    facts["classes"] = G->classes().size();
    require(G->order() == 64, "|G| = " + std::to_string(G->order()) + ", expected 64");
    require(G->classes().size() == 19, std::to_string(G->classes().size()) + " classes, expected 19");
    return "|G| = 64, 19 classes";
  });

  run.run("relations", [&] {
    const auto rel = read_json(dir / "relations.json").at("relations").get<std::vector<std::string>>();
    const auto check = verify_relations(*G, rel);
    require(check.holds, "relation fails: " + check.detail);
    return std::to_string(rel.size()) + " relations hold";
  });

  run.run("table", [&] {
    table.emplace(G);
    const CharacterTable& t = *table;
    central = {element_of(*G, "a^2"), element_of(*G, "b^2"), element_of(*G, "a^2b^2")};
    std::vector<ElementId> z = center(*G);
    require(z.size() == 4, "center has order " + std::to_string(z.size()));
    std::vector<std::size_t> h;
    for (std::size_t i = 0; i < t.irreducibles().size(); ++i)
      if (fs_indicator(t, t.irreducible(i)) == -1) h.push_back(i);
    facts["quaternionic"] = h.size();
    require(h.size() == 3, std::to_string(h.size()) + " irreducibles with indicator -1, expected 3");
    // rows of the printed table at (1, a^2, b^2, a^2b^2)
    const std::array<std::array<int, 3>, 3> expected{{{4, -4, -4}, {-4, 4, -4}, {-4, -4, 4}}};
    Json patterns = Json::array();
    for (std::size_t r = 0; r < 3; ++r) {
      auto match = std::find_if(h.begin(), h.end(), [&](std::size_t i) {
        const Character& chi = t.irreducible(i);
        if (chi.degree() != 4) return false;
        for (std::size_t k = 0; k < 3; ++k)
          if (chi.values[G->class_of(central[k])] != Cyclotomic(expected[r][k])) return false;
        return true;
      });
      require(match != h.end(), "no quaternionic character with central pattern " + std::to_string(r + 1));
      chi_index[r] = *match;
      const Character& chi = t.irreducible(*match);
      for (std::size_t k = 0; k < t.num_classes(); ++k) {
        const bool is_central = std::binary_search(z.begin(), z.end(), t.conj_class(k).representative);
        require(is_central || chi.values[k].is_zero(), "chi_" + std::to_string(r + 1) + " is nonzero off the center");
      }
      std::vector<Cyclotomic> pat{chi.values[0]};
      for (ElementId c : central) pat.push_back(chi.values[G->class_of(c)]);
      patterns.push_back(pattern_string(pat));
    }
    facts["central_patterns"] = patterns;
    return "chi_1, chi_2, chi_3 located";
  });

  run.run("kernels", [&] {
    for (std::size_t r = 0; r < 3; ++r) {
      const auto ker = kernel(*table, table->irreducible(chi_index[r]));
      const ElementId gen = central[r];
      const auto expected = subgroup_closure(*G, std::span<const ElementId>(&gen, 1));
      require(ker == expected, "ker chi_" + std::to_string(r + 1) + " is not generated by " + G->word_name(gen));
      if (r == 0) C1 = ker;
    }
    return "C_1 = <a^2>, C_2 = <b^2>, C_3 = <a^2b^2>";
  });

  run.run("induced-module", [&] {
    const GLattice S1 = permutation_module(G, C1);
    const Character chi = lattice_character(*table, S1);
    Json ips = Json::array();
    for (std::size_t r = 0; r < 3; ++r) ips.push_back(inner_product(*table, chi, table->irreducible(chi_index[r])).str());
    facts["inner_products"] = ips;
    require(ips == Json::array({"4", "0", "0"}), "inner products " + ips.dump() + ", expected [4,0,0]");
    // the 32-point action is the coset action on C_1
    const auto stab = point_stabilizer(*G, 0);
    require(stab == C1, "point stabilizer of the permutation action is not C_1");
    return "<S_1, chi_i> = 4, 0, 0";
  });

  run.run("projection", [&] {
    const Json bj = read_json(dir / "basis.json");
    std::vector<Point> points;
    for (long long p : bj.at("orbit").get<std::vector<long long>>()) points.push_back(static_cast<Point>(p - 1));
    const GLattice P = permutation_lattice(G, points);
    const auto proj = isotypic_projection(*table, P, table->irreducible(chi_index[0]), Integer(2));
    facts["projection_rank"] = proj.rank;
    require(proj.rank == 16, "projection has rank " + std::to_string(proj.rank));
    const IntMatrix printed = basis_from_json(bj, P.rank());
    require(same_lattice(proj.basis, printed), "printed basis spans a different sublattice");
    M = load_lattice(dir / "module.json", G);
    require(M->is_module(), "printed action does not define a G-module");
    require(change_basis_check(P, printed, M->generator_matrices()),
            "printed action differs from the action induced on the printed basis");
    report.digests["rho_M"] = digest(action_json(*M));
    return "rank 16, printed basis and action reconciled";
  });

  run.run("cohomology", [&] {
    H = h2(*M);
    Json inv = Json::array();
    for (const auto& d : H->invariants) inv.push_back(d.str());
    facts["h2"] = inv;
    require(H->invariants.size() == 1 && H->invariants[0] == 2, "H^2 invariants " + inv.dump());
    return "H^2(G, M) = Z/2";
  });

  run.run("cocycle", [&] {
    alpha = load_cocycle(dir / "cocycle.json", *M);
    require(is_cocycle(*M, *alpha), "printed alpha is not a cocycle");
    const auto coords = class_coordinates(*H, *M, *alpha);
    require(coords[0] != 0, "printed alpha is a coboundary");
    require(cohomologous(*M, *alpha, H->generators[0]), "printed alpha is not cohomologous to the generator");
    require(restriction_nonzero(*M, *alpha, central[0]), "restriction of alpha to C_1 vanishes");
    facts["alpha_class"] = coords[0].str();
    report.digests["alpha_class"] =
        digest(Json{{"invariants", Json::array({"2"})}, {"coordinates", Json::array({coords[0].str()})},
                    {"representative", cocycle_json(*M, *alpha)}});
    return "alpha valid, class 1 in Z/2, res to C_1 nonzero";
  });

  run.run("automorphisms", [&] {
    const std::array<std::size_t, 2> src{1, 2};  // b^2 and a^2b^2 map to a^2
    Json found = Json::array();
    for (std::size_t i = 0; i < 2; ++i) {
      const auto autos = find_automorphisms(*G, {{central[src[i]], central[0]}}, true);
      require(!autos.empty(), "no automorphism maps " + G->word_name(central[src[i]]) + " to a^2");
      f[i] = autos.front();
      const Character pulled = compose(*table, table->irreducible(chi_index[0]), *f[i]);
      require(pulled == table->irreducible(chi_index[src[i]]),
              "chi_1 o f_" + std::to_string(i + 2) + " != chi_" + std::to_string(i + 2));
      found.push_back(G->word_name(central[src[i]]) + "->" + G->word_name((*f[i])(central[src[i]])));
    }
    facts["automorphisms"] = found;
    return "f_2(b^2) = a^2, f_3(a^2b^2) = a^2";
  });

  run.run("specialness", [&] {
    const std::vector<GLattice> parts{*M, twist(*M, *f[0]), twist(*M, *f[1])};
    const std::vector<Cocycle1> values{*alpha, pullback(*M, *alpha, *f[0]), pullback(*M, *alpha, *f[1])};
    GLattice W = direct_sum(parts);
    Cocycle1 c = direct_sum(values);
    const Character expected = Integer(4) * (table->irreducible(chi_index[0]) + table->irreducible(chi_index[1]) +
                                             table->irreducible(chi_index[2]));
    require(lattice_character(*table, W) == expected, "character of the sum is not 4(chi_1+chi_2+chi_3)");
    const auto sp = is_special(W, c);
    facts["special"] = sp.special;
    require(sp.special, "the summed class is not special");
    gamma = assemble(std::move(W), std::move(c));
    const auto direct = is_torsion_free_direct(*gamma);
    require(direct.torsion_free, "direct torsion test finds an element of finite order");
    return "special; direct torsion test agrees";
  });

  run.run("verdict", [&] {
    const auto r = holoq::report(*table, *gamma);
    facts["manifold"] = to_json(r, *G);
    report.digests["report"] = digest(facts["manifold"]);
    require(r.dimension == 48, "dimension " + std::to_string(r.dimension));
    require(r.torsion_free, "not torsion-free");
    require(r.holonomy_faithful, "holonomy not faithful");
    require(r.first_betti == 0, "b_1 = " + std::to_string(r.first_betti));
    require(r.type_verdict == ModuleType::HT, "type " + to_string(r.type_verdict));
    return "dimension 48, torsion-free, faithful, b_1 = 0, HT";
  });

  return report;
}

FlatManifoldReport manifold_report(const std::filesystem::path& group, const std::filesystem::path& module,
                                   const std::filesystem::path& cocycle) {
  GroupPtr G = load_group(group);
  GLattice L = load_lattice(module, G);
  Cocycle1 c = load_cocycle(cocycle, L);
  const CharacterTable t(G);
  return report(t, assemble(std::move(L), std::move(c)));
}

namespace {

struct Expectation {
  std::string name;
  Eigen::Index dimension;
  std::optional<ModuleType> type;
  std::optional<Eigen::Index> betti;
  std::optional<std::size_t> holonomy;
};

const std::vector<Expectation>& expectations() {
  static const std::vector<Expectation> table{
      {"hantzsche-wendt", 3, ModuleType::RT, 0, 4},
      {"klein-bottle", 2, ModuleType::RT, 1, 2},
      {"m2", 8, ModuleType::CT, 0, 9},
  };
  return table;
}

}  // namespace

std::vector<ExampleResult> verify_examples(const std::filesystem::path& dir) {
  namespace fs = std::filesystem;
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) throw Error(ErrorKind::InvalidInput, dir.string() + " is not a directory");
  std::vector<fs::path> subdirs;
  for (const auto& e : fs::directory_iterator(dir))
    if (e.is_directory() && fs::exists(e.path() / "group.json")) subdirs.push_back(e.path());
  std::sort(subdirs.begin(), subdirs.end());
  if (subdirs.empty()) throw Error(ErrorKind::InvalidInput, "no examples found in " + dir.string());

  std::vector<ExampleResult> out;
  for (const auto& sub : subdirs) {
    ExampleResult res;
    res.name = sub.filename().string();
    try {
      const auto r = manifold_report(sub / "group.json", sub / "module.json", sub / "cocycle.json");
      res.report = r;
      std::vector<std::string> issues;
      if (!r.torsion_free) issues.push_back("not torsion-free");
      const auto& ex = expectations();
      auto it = std::find_if(ex.begin(), ex.end(), [&](const Expectation& e) { return e.name == res.name; });
      if (it != ex.end()) {
        if (r.dimension != it->dimension) issues.push_back("dimension " + std::to_string(r.dimension));
        if (it->type && r.type_verdict != *it->type) issues.push_back("type " + to_string(r.type_verdict));
        if (it->betti && r.first_betti != *it->betti) issues.push_back("b_1 = " + std::to_string(r.first_betti));
        if (it->holonomy && r.holonomy_order != *it->holonomy)
          issues.push_back("holonomy order " + std::to_string(r.holonomy_order));
      }
      res.ok = issues.empty();
      for (const auto& i : issues) res.detail += (res.detail.empty() ? "" : "; ") + i;
    } catch (const Error& e) {
      res.detail = e.what();
    }
    out.push_back(std::move(res));
  }
  return out;
}

Json to_json(const FlatManifoldReport& r, const PermGroup& g) {
  Json res = Json::array();
  for (const auto& x : r.restrictions)
    res.push_back(Json{{"element", g.word_name(x.representative)}, {"prime", x.prime}, {"nonzero", x.nonzero}});
  return Json{{"dimension", r.dimension},
              {"torsion_free", r.torsion_free},
              {"holonomy_faithful", r.holonomy_faithful},
              {"holonomy_order", r.holonomy_order},
              {"first_betti", r.first_betti},
              {"type", to_string(r.type_verdict)},
              {"restrictions", std::move(res)}};
}

Json to_json(const PipelineReport& r) {
  Json stages = Json::array();
  for (const auto& s : r.stages) stages.push_back(Json{{"stage", s.name}, {"ok", s.ok}, {"detail", s.detail}});
  Json digests = Json::object();
  for (const auto& [k, v] : r.digests) digests[k] = v;
  return Json{{"ok", r.ok()}, {"stages", std::move(stages)}, {"digests", std::move(digests)}, {"facts", r.facts}};
}

}  // namespace holoq
