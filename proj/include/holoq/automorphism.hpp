#pragma once

#include "holoq/perm_group.hpp"

#include <utility>
#include <vector>

namespace holoq {

struct Automorphism {
  std::vector<ElementId> generator_images;  // indexed like the group's generators
  std::vector<ElementId> full_map;          // element -> image

  [[nodiscard]] ElementId operator()(ElementId g) const { return full_map[g]; }
  friend bool operator==(const Automorphism&, const Automorphism&) = default;
};

/// (element, required image) pairs.
using AutomorphismConstraints = std::vector<std::pair<ElementId, ElementId>>;

/// Automorphisms meeting every constraint, ordered lexicographically by
/// generator images. Images are searched by backtracking, pruned by element
/// order, class size and consistency on the subgroup already determined.
std::vector<Automorphism> find_automorphisms(const PermGroup& g, const AutomorphismConstraints& constraints,
                                             bool first_only = false);

Automorphism identity_automorphism(const PermGroup& g);
Automorphism inverse(const PermGroup& g, const Automorphism& f);
/// (f ∘ h)(x) = f(h(x)).
Automorphism compose(const PermGroup& g, const Automorphism& f, const Automorphism& h);

/// f(xy) = f(x)f(y) over the whole multiplication table, and f bijective.
bool is_automorphism(const PermGroup& g, const std::vector<ElementId>& full_map);

}  // namespace holoq
