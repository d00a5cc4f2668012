#pragma once

#include "holoq/character_table.hpp"
#include "holoq/io.hpp"
#include "holoq/lattice.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace holoq::test {

inline std::filesystem::path data_dir() { return HOLOQ_DATA_DIR; }

inline GroupPtr fixture(const std::string& name) { return load_group(data_dir() / "fixtures" / (name + ".json")); }

inline const std::vector<std::string> kFixtures{"c1", "c2", "c3", "c4", "c6", "c8", "v4", "c2c2c2", "c4c4", "s3",
                                                "s4", "a4", "d8", "q8", "sl23", "es32minus", "es32plus", "rho1", "g64"};

inline const std::vector<std::string> kSmallFixtures{"c1", "c2", "c3", "c4", "c6", "c8", "v4",
                                                     "c2c2c2", "c4c4", "s3", "a4", "d8", "q8"};

/// Signs of the generators under some nontrivial homomorphism to {±1}, if any.
inline std::optional<std::vector<int>> sign_homomorphism(const CharacterTable& t) {
  for (const auto& chi : t.irreducibles()) {
    if (chi.degree() != 1) continue;
    std::vector<int> signs;
    bool nontrivial = false, rational = true;
    for (std::size_t s = 0; s < t.group().num_generators(); ++s) {
      const auto& v = chi.values[t.group().class_of(t.group().generator(s))];
      if (v == Cyclotomic(1)) {
        signs.push_back(1);
      } else if (v == Cyclotomic(-1)) {
        signs.push_back(-1);
        nontrivial = true;
      } else {
        rational = false;
      }
    }
    if (rational && nontrivial) return signs;
  }
  return std::nullopt;
}

/// Z with generators acting by ±1.
inline GLattice sign_lattice(GroupPtr g, const std::vector<int>& signs) {
  std::vector<IntMatrix> action;
  for (int s : signs) action.push_back(IntMatrix::Constant(1, 1, Integer(s)));
  return GLattice(std::move(g), std::move(action));
}

/// Z^2 with the sign -1 generators swapping the coordinates.
inline GLattice swap_lattice(GroupPtr g, const std::vector<int>& signs) {
  std::vector<IntMatrix> action;
  for (int s : signs) {
    IntMatrix m = IntMatrix::Zero(2, 2);
    if (s == 1) m(0, 0) = m(1, 1) = 1;
    else m(0, 1) = m(1, 0) = 1;
    action.push_back(m);
  }
  return GLattice(std::move(g), std::move(action));
}

}  // namespace holoq::test
