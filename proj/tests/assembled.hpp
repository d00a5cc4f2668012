#pragma once

#include "holoq/crystallographic.hpp"
#include "holoq/words.hpp"
#include "support.hpp"

#include <string>
#include <vector>

namespace holoq::test {

struct Assembled {
  std::string name;
  CrystGroupData gamma;
  bool expect_torsion_free;
};

inline CrystGroupData load_example(const std::string& dir) {
  const auto base = data_dir() / "examples" / dir;
  GroupPtr g = load_group(base / "group.json");
  GLattice L = load_lattice(base / "module.json", g);
  Cocycle1 c = load_cocycle(base / "cocycle.json", L);
  return assemble(std::move(L), std::move(c));
}

/// The 48-dimensional lattice with the summed class; drop_third zeroes the
/// last summand's cocycle.
inline CrystGroupData order64_sum(bool drop_third = false) {
  const auto base = data_dir() / "paper-thm1";
  GroupPtr g = load_group(base / "group.json");
  GLattice M = load_lattice(base / "module.json", g);
  Cocycle1 alpha = load_cocycle(base / "cocycle.json", M);
  const ElementId a2 = evaluate(*g, parse_word("a^2", *g));
  const ElementId b2 = evaluate(*g, parse_word("b^2", *g));
  const ElementId ab2 = evaluate(*g, parse_word("a^2b^2", *g));
  const Automorphism f2 = find_automorphisms(*g, {{b2, a2}}, true).at(0);
  const Automorphism f3 = find_automorphisms(*g, {{ab2, a2}}, true).at(0);
  const std::vector<GLattice> parts{M, twist(M, f2), twist(M, f3)};
  std::vector<Cocycle1> values{alpha, pullback(M, alpha, f2), pullback(M, alpha, f3)};
  if (drop_third) values[2] = zero_cocycle(parts[2]);
  return assemble(direct_sum(parts), direct_sum(values));
}

inline CrystGroupData with_zero_cocycle(const CrystGroupData& g) {
  return assemble(g.lattice, zero_cocycle(g.lattice));
}

/// Valid fixtures followed by mutated cocycles that must give torsion.
inline std::vector<Assembled> assembled_fixtures() {
  std::vector<Assembled> out;
  for (const char* name : {"hantzsche-wendt", "klein-bottle", "m2"}) out.push_back({name, load_example(name), true});
  out.push_back({"order-64", order64_sum(), true});

  for (const char* name : {"hantzsche-wendt", "klein-bottle", "m2"})
    out.push_back({std::string(name) + " split", with_zero_cocycle(load_example(name)), false});
  {
    const auto base = data_dir() / "paper-thm1";
    GroupPtr g = load_group(base / "group.json");
    GLattice M = load_lattice(base / "module.json", g);
    Cocycle1 alpha = load_cocycle(base / "cocycle.json", M);
    out.push_back({"order-64 M alone", assemble(std::move(M), std::move(alpha)), false});
  }
  out.push_back({"order-64 without f3 summand", order64_sum(true), false});
  {
    CrystGroupData hw = load_example("hantzsche-wendt");
    Cocycle1 c = hw.vector_system;
    c.generator_values[1] << 0, Rational(1, 2), 0;
    out.push_back({"hantzsche-wendt shifted", assemble(hw.lattice, c), false});
  }
  return out;
}

}  // namespace holoq::test
