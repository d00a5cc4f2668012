// One PASS/FAIL line per acceptance criterion. Exit status is nonzero when a
// criterion that can be checked here fails.

#include "assembled.hpp"
#include "holoq/cohomology.hpp"
#include "holoq/errors.hpp"
#include "holoq/pipeline.hpp"
#include "holoq/screener.hpp"
#include "support.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

using namespace holoq;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail.clear();
    pass = false;
    detail += (detail.empty() ? "" : "; ") + why;
  }
};

Outcome order64_construction() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  const auto r = verify_paper(test::data_dir() / "paper-thm1");
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (!r.ok()) {
    o.fail("stage " + r.failed_stage().value_or("?") + ": " + r.stages.back().detail);
    return o;
  }
  const Json& f = r.facts;
  const Json& m = f["manifold"];
  auto expect = [&](bool cond, const std::string& what) {
    if (!cond) o.fail(what);
  };
  expect(f["order"] == 64 && f["classes"] == 19, "order/classes");
  expect(f["quaternionic"] == 3, "quaternionic count");
  expect(f["central_patterns"] == Json::array({"(4,4,-4,-4)", "(4,-4,4,-4)", "(4,-4,-4,4)"}), "central patterns");
  expect(f["inner_products"] == Json::array({"4", "0", "0"}), "inner products");
  expect(f["projection_rank"] == 16, "projection rank");
  expect(f["h2"] == Json::array({"2"}), "H^2");
  expect(f["alpha_class"] == "1", "alpha class");
  expect(f["automorphisms"] == Json::array({"b^2->a^2", "a^2b^2->a^2"}), "automorphisms");
  expect(f["special"] == true, "specialness");
  expect(m["dimension"] == 48 && m["torsion_free"] == true && m["holonomy_faithful"] == true &&
             m["first_betti"] == 0 && m["type"] == "HT",
         "final report");
  expect(secs < 300, "runtime");
  if (o.pass) {
    std::ostringstream s;
    s << "|G|=64, 19 classes, 3 quaternionic, <S1,chi>=(4,0,0), rank 16 reconciled, H2=Z/2, alpha valid, "
         "f2/f3 found, special, dim 48 torsion-free faithful b1=0 HT ("
      << static_cast<int>(secs * 1000) << " ms)";
    o.detail = s.str();
  }
  return o;
}

Outcome examples() {
  Outcome o;
  for (const auto& e : verify_examples(test::data_dir() / "examples"))
    if (!e.ok) o.fail(e.name + ": " + e.detail);
  if (o.pass) o.detail = "Hantzsche-Wendt RT dim 3; Klein bottle b1=1; M2 CT dim 8 holonomy 9; all torsion-free";
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  int compared = 0;
  for (const auto& name : test::kSmallFixtures) {
    auto g = test::fixture(name);
    const CharacterTable t(g);
    std::vector<std::pair<std::string, GLattice>> lattices{{"trivial", trivial_lattice(g)}};
    if (const auto signs = test::sign_homomorphism(t)) {
      lattices.emplace_back("sign", test::sign_lattice(g, *signs));
      lattices.emplace_back("swap", test::swap_lattice(g, *signs));
    }
    for (const auto& [kind, L] : lattices) {
      ++compared;
      if (h2(L).invariants != bar_h2_oracle(L).invariants) o.fail(name + " " + kind);
    }
  }
  if (o.pass) o.detail = std::to_string(compared) + " (group, lattice) pairs agree";
  return o;
}

Outcome character_properties() {
  Outcome o;
  for (const auto& name : test::kFixtures) {
    auto g = test::fixture(name);
    const CharacterTable t(g);
    const auto& irr = t.irreducibles();
    Integer sum_sq = 0, fs_sum = 0;
    for (std::size_t i = 0; i < irr.size(); ++i) {
      const Integer d = irr[i].degree();
      sum_sq += d * d;
      const int nu = fs_indicator(t, irr[i]);
      if (nu < -1 || nu > 1) o.fail(name + ": indicator out of range");
      if (nu == -1 && d % 2 != 0) o.fail(name + ": quaternionic character of odd degree");
      fs_sum += nu * d;
      for (std::size_t j = 0; j < irr.size(); ++j)
        if (inner_product(t, irr[i], irr[j]) != Rational(i == j ? 1 : 0)) o.fail(name + ": row orthogonality");
    }
    for (std::size_t k = 0; k < t.num_classes(); ++k)
      for (std::size_t l = 0; l < t.num_classes(); ++l) {
        Cyclotomic s(0);
        for (const auto& chi : irr) s = s + chi.values[k] * chi.values[l].conj();
        const Cyclotomic expected(k == l ? static_cast<int>(g->order() / t.class_size(k)) : 0);
        if (s != expected) o.fail(name + ": column orthogonality");
      }
    if (sum_sq != Integer(g->order())) o.fail(name + ": sum of squared degrees");
    if (fs_sum != Integer(involution_count(*g))) o.fail(name + ": involution count");
  }
  if (o.pass) o.detail = std::to_string(test::kFixtures.size()) + " groups of order 1..64";
  return o;
}

bool brute_force_p_complement(const PermGroup& g, std::uint64_t p) {
  const std::size_t target = g.order() / p_part(g.order(), p);
  const auto& classes = g.classes();
  std::vector<ElementId> members = classes[0].members;
  bool found = false;
  std::function<void(std::size_t, std::size_t)> search = [&](std::size_t i, std::size_t size) {
    if (found || size > target) return;
    if (size == target) {
      std::vector<ElementId> s = members;
      std::sort(s.begin(), s.end());
      bool closed = true;
      for (ElementId x : s)
        for (ElementId y : s)
          if (closed && !std::binary_search(s.begin(), s.end(), g.mul(x, y))) closed = false;
      found = closed;
      return;
    }
    if (i == classes.size()) return;
    members.insert(members.end(), classes[i].members.begin(), classes[i].members.end());
    search(i + 1, size + classes[i].size());
    members.resize(members.size() - classes[i].size());
    search(i + 1, size);
  };
  search(1, 1);
  return found;
}

Outcome screener() {
  Outcome o;
  auto verdict = [](const std::string& name) { return screen(test::fixture(name), name); };
  auto fails = [](const ScreenVerdict& v, int k) { return !v.candidate && v.condition(k) && !v.condition(k)->pass; };
  std::vector<std::string> notes;

  const auto sl = verdict("sl23");
  if (sl.first_failure != 4 || sl.primitive_obstruction != 3u) o.fail("SL(2,3) not excluded at condition 4 with p = 3");
  for (const char* name : {"d8", "q8", "es32minus"}) {
    const auto v = verdict(name);
    if (!fails(v, 7)) o.fail(std::string(name) + " does not fail condition 7");
    if (v.first_failure != 7) notes.push_back(std::string(name) + " first fails " + std::to_string(*v.first_failure));
  }
  for (const char* name : {"c1", "c2", "c3", "c4", "c6", "c8", "v4", "c2c2c2", "c4c4"}) {
    const auto v = verdict(name);
    if (!fails(v, 2)) o.fail(std::string(name) + " does not fail condition 2");
    if (v.first_failure != 2) notes.push_back(std::string(name) + " first fails " + std::to_string(*v.first_failure));
  }
  if (!verdict("g64").candidate) o.fail("order-64 group not a candidate");
  int checked = 0;
  for (const auto& name : test::kFixtures) {
    auto g = test::fixture(name);
    for (std::uint64_t p : prime_divisors(g->order())) {
      ++checked;
      if (has_normal_p_complement(*g, p) != brute_force_p_complement(*g, p))
        o.fail(name + " p=" + std::to_string(p) + " p-complement disagrees");
    }
  }
  if (o.pass) {
    o.detail = "SL(2,3) cond 4 p=3; D8, Q8, Q8oD8 fail cond 7; abelian fail cond 2; order-64 group candidate; " +
               std::to_string(checked) + " p-complement checks agree";
    std::string n;
    for (const auto& s : notes) n += (n.empty() ? "" : ", ") + s;
    if (!n.empty()) o.detail += " (first failures: " + n + ")";
  }
  return o;
}

Outcome cross_validation() {
  Outcome o;
  int n = 0, mutants = 0;
  for (const auto& a : test::assembled_fixtures()) {
    ++n;
    const bool special = is_special(a.gamma.lattice, a.gamma.vector_system).special;
    const bool direct = is_torsion_free_direct(a.gamma).torsion_free;
    if (special != direct) o.fail(a.name + ": tests disagree");
    if (direct != a.expect_torsion_free) o.fail(a.name + ": unexpected verdict");
    if (!a.expect_torsion_free) ++mutants;
  }
  if (mutants < 5) o.fail("fewer than 5 mutants");
  if (o.pass)
    o.detail = std::to_string(n) + " extensions agree, " + std::to_string(mutants) + " mutated cocycles fail both tests";
  return o;
}

Outcome desk_scale() {
  Outcome o;
  const auto r = screen_catalog({test::data_dir() / "fixtures"});
  bool listed = false;
  for (const auto& e : r.entries)
    if (e.verdict && e.verdict->group_id == "g64" && e.verdict->candidate) listed = true;
  o.fail("simple-group exclusions and the exhaustive order <= 64 classification need Atlas data and a small-groups "
         "catalog that are not available; substitute: screen_catalog over the bundled fixtures " +
         std::string(listed ? "lists" : "does NOT list") + " the order-64 group as a candidate");
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"order-64 construction", order64_construction},
      {"low-dimensional examples", examples},
      {"H^2 oracle equivalence", oracle_equivalence},
      {"character table properties", character_properties},
      {"screener", screener},
      {"torsion cross-validation", cross_validation},
      {"desk-scale limits", desk_scale},
  };
  // criterion 7 cannot be met here; it is reported but does not fail the run
  const std::size_t unattainable = 7;
  bool ok = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    std::cout << (o.pass ? "PASS" : "FAIL") << ' ' << i + 1 << ' ' << criteria[i].first << ": " << o.detail << '\n';
    if (!o.pass && i + 1 != unattainable) ok = false;
  }
  return ok ? 0 : 1;
}
