#include "holoq/screener.hpp"

#include "holoq/errors.hpp"

#include <algorithm>
#include <sstream>

namespace holoq {

const ConditionResult* ScreenVerdict::condition(int k) const {
  for (const auto& c : conditions)
    if (c.number == k) return &c;
  return nullptr;
}

namespace {

std::string join(const std::vector<std::string>& parts, const char* sep = ", ") {
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += sep;
    out += p;
  }
  return out;
}

std::vector<std::size_t> quaternionic(const CharacterTable& t) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < t.irreducibles().size(); ++i)
    if (fs_indicator(t, t.irreducible(i)) == -1) out.push_back(i);
  return out;
}

}  // namespace

ScreenVerdict screen(const CharacterTable& t, const std::string& group_id, ScreenOptions options) {
  const PermGroup& g = t.group();
  const std::uint64_t n = g.order();
  ScreenVerdict v;
  v.group_id = group_id;
  auto add = [&](int number, std::string name, bool pass, std::string detail) {
    v.conditions.push_back({number, std::move(name), pass, pass ? std::string() : std::move(detail)});
  };

  add(1, "even order", n % 2 == 0, "|G| = " + std::to_string(n) + " is odd");

  add(2, "non-abelian", !is_abelian(g), "G is abelian");

  {
    const auto z = center(g);
    std::vector<std::string> bad;
    for (ElementId x : z)
      if (g.element_order(x) > 2) bad.push_back(g.word_name(x) + " has order " + std::to_string(g.element_order(x)));
    add(3, "center elementary abelian 2-group", bad.empty(), "central element " + join(bad));
  }

  {
    std::vector<std::string> bad;
    for (std::uint64_t p : prime_divisors(n)) {
      if (sylow_is_cyclic(g, p) && has_normal_p_complement(g, p)) {
        if (!v.primitive_obstruction) v.primitive_obstruction = p;
        bad.push_back(std::to_string(p));
      }
    }
    add(4, "no normal p-complement for cyclic Sylow p", bad.empty(),
        "cyclic Sylow subgroup with a normal complement for p = " + join(bad));
  }

  {
    const bool cyclic = n % 2 == 0 && sylow_is_cyclic(g, 2);
    add(5, "Sylow 2-subgroup non-cyclic", n % 2 == 0 && !cyclic,
        n % 2 == 0 ? "Sylow 2-subgroup is cyclic" : "trivial Sylow 2-subgroup");
  }

  {
    const std::size_t inv = involution_count(g);
    const Integer formula = fs_count_formula(t);
    if (formula != Integer(inv))
      throw Error(ErrorKind::TestDisagreement, "involution count " + std::to_string(inv) +
                                                   " differs from the indicator sum " + formula.str());
    Integer degrees = 0;
    for (const auto& chi : t.irreducibles()) degrees += chi.degree();
    const bool below_sum = Integer(inv) < degrees;
    const bool half = 2 * inv <= n;
    std::ostringstream detail;
    detail << "I(G) = " << inv << ", sum of degrees = " << degrees << ", |G|/2 = " << n / 2;
    add(6, "square roots of unity bound", below_sum && half, detail.str());
  }

  const auto h = quaternionic(t);
  add(7, "at least two quaternionic irreducibles", h.size() >= 2,
      std::to_string(h.size()) + " irreducible(s) with indicator -1");

  {
    std::vector<std::string> bad;
    for (ElementId z : center(g)) {
      if (g.element_order(z) != 2) continue;
      const std::size_t k = g.class_of(z);
      bool plus = false, minus = false;
      for (std::size_t i : h) {
        const Character& chi = t.irreducible(i);
        const Cyclotomic d(Rational(chi.degree()));
        if (chi.values[k] == d) plus = true;
        if (chi.values[k] == -d) minus = true;
      }
      if (!plus || !minus) bad.push_back(g.word_name(z));
    }
    add(8, "central involutions split quaternionic irreducibles", bad.empty(),
        "no quaternionic pair with values +-chi(1) at " + join(bad));
  }

  if (options.blocks) {
    std::vector<std::string> bad;
    for (std::uint64_t p : prime_divisors(n)) {
      const bool found =
          std::any_of(h.begin(), h.end(), [&](std::size_t i) { return principal_block_membership(t, t.irreducible(i), p); });
      if (!found) bad.push_back(std::to_string(p));
    }
    add(9, "quaternionic irreducible in every principal block", bad.empty(),
        "no quaternionic irreducible in the principal p-block for p = " + join(bad));
  }

  v.skew = is_skew(t);
  for (const auto& c : v.conditions)
    if (!c.pass) {
      v.first_failure = c.number;
      break;
    }
  v.candidate = !v.first_failure;
  return v;
}

ScreenVerdict screen(GroupPtr group, const std::string& group_id, ScreenOptions options) {
  return screen(character_table(std::move(group)), group_id, options);
}

CatalogReport screen_catalog(const std::vector<std::filesystem::path>& inputs, ScreenOptions options) {
  namespace fs = std::filesystem;
  std::vector<fs::path> files;
  for (const auto& in : inputs) {
    std::error_code ec;
    if (fs::is_directory(in, ec)) {
      std::vector<fs::path> found;
      for (const auto& e : fs::directory_iterator(in))
        if (e.is_regular_file() && e.path().extension() == ".json") found.push_back(e.path());
      std::sort(found.begin(), found.end());
      files.insert(files.end(), found.begin(), found.end());
    } else {
      files.push_back(in);
    }
  }
  CatalogReport report;
  for (const auto& f : files) {
    CatalogEntry entry;
    entry.source = f.string();
    try {
      entry.verdict = screen(load_group(f), f.stem().string(), options);
      (entry.verdict->candidate ? report.candidates : report.excluded)++;
    } catch (const Error& e) {
      entry.error = e.what();
      ++report.errors;
    }
    report.entries.push_back(std::move(entry));
  }
  return report;
}

Json to_json(const ScreenVerdict& v) {
  Json conds = Json::array();
  for (const auto& c : v.conditions)
    conds.push_back(Json{{"number", c.number}, {"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  Json j{{"group", v.group_id},
         {"overall", v.candidate ? "candidate" : "excluded"},
         {"conditions", std::move(conds)},
         {"skew", v.skew}};
  j["first_failure"] = v.first_failure ? Json(*v.first_failure) : Json(nullptr);
  j["primitive_obstruction"] = v.primitive_obstruction ? Json(*v.primitive_obstruction) : Json(nullptr);
  return j;
}

Json to_json(const CatalogReport& r) {
  Json entries = Json::array();
  for (const auto& e : r.entries) {
    Json j = e.verdict ? to_json(*e.verdict) : Json{{"error", e.error}};
    j["source"] = e.source;
    entries.push_back(std::move(j));
  }
  return Json{{"verdicts", std::move(entries)},
              {"summary", {{"candidates", r.candidates}, {"excluded", r.excluded}, {"errors", r.errors}}}};
}

}  // namespace holoq
