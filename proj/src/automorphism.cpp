#include "holoq/automorphism.hpp"

#include <optional>

namespace holoq {

namespace {

constexpr ElementId kUnset = static_cast<ElementId>(-1);

class AutomorphismSearch {
 public:
  AutomorphismSearch(const PermGroup& g, const AutomorphismConstraints& constraints, bool first_only)
      : g_(g), constraints_(constraints), first_only_(first_only) {
    const std::size_t k = g.num_generators();
    candidates_.resize(k);
    for (std::size_t s = 0; s < k; ++s) {
      const ElementId gen = g.generator(s);
      const std::size_t size = g.classes()[g.class_of(gen)].size();
      for (ElementId x = 0; x < g.order(); ++x)
        if (g.element_order(x) == g.element_order(gen) && g.classes()[g.class_of(x)].size() == size)
          candidates_[s].push_back(x);
    }
    images_.assign(k, kUnset);
  }

  std::vector<Automorphism> run() {
    search(0);
    return std::move(found_);
  }

 private:
  // Extends the assignment of the first `depth` generators over the subgroup
  // they generate; nullopt when that is not a well-defined injective map.
  std::optional<std::vector<ElementId>> extend(std::size_t depth) const {
    std::vector<ElementId> map(g_.order(), kUnset);
    std::vector<bool> used(g_.order(), false);
    map[PermGroup::identity()] = PermGroup::identity();
    used[PermGroup::identity()] = true;
    std::vector<ElementId> queue{PermGroup::identity()};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const ElementId x = queue[head];
      for (std::size_t s = 0; s < depth; ++s) {
        const ElementId y = g_.mul_generator(x, s);
        const ElementId fy = g_.mul(map[x], images_[s]);
        if (map[y] == kUnset) {
          if (used[fy]) return std::nullopt;
          map[y] = fy;
          used[fy] = true;
          queue.push_back(y);
        } else if (map[y] != fy) {
          return std::nullopt;
        }
      }
    }
    for (const auto& [x, fx] : constraints_)
      if (map[x] != kUnset && map[x] != fx) return std::nullopt;
    return map;
  }

  void search(std::size_t depth) {
    if (first_only_ && !found_.empty()) return;
    const std::size_t k = g_.num_generators();
    if (depth == k) {
      auto map = extend(k);
      if (!map) return;
      for (const auto& [x, fx] : constraints_)
        if ((*map)[x] != fx) return;
      if (g_.order() <= 256 && !is_automorphism(g_, *map)) return;
      found_.push_back({images_, std::move(*map)});
      return;
    }
    for (ElementId c : candidates_[depth]) {
      images_[depth] = c;
      if (extend(depth + 1)) search(depth + 1);
      if (first_only_ && !found_.empty()) break;
    }
    images_[depth] = kUnset;
  }

  const PermGroup& g_;
  const AutomorphismConstraints& constraints_;
  bool first_only_;
  std::vector<std::vector<ElementId>> candidates_;
  std::vector<ElementId> images_;
  std::vector<Automorphism> found_;
};

}  // namespace

std::vector<Automorphism> find_automorphisms(const PermGroup& g, const AutomorphismConstraints& constraints,
                                             bool first_only) {
  for (const auto& [x, fx] : constraints) {
    if (x >= g.order() || fx >= g.order()) return {};
    if (g.element_order(x) != g.element_order(fx)) return {};
  }
  return AutomorphismSearch(g, constraints, first_only).run();
}

bool is_automorphism(const PermGroup& g, const std::vector<ElementId>& full_map) {
  if (full_map.size() != g.order()) return false;
  std::vector<bool> hit(g.order(), false);
  for (ElementId y : full_map) {
    if (y >= g.order() || hit[y]) return false;
    hit[y] = true;
  }
  for (ElementId x = 0; x < g.order(); ++x)
    for (ElementId y = 0; y < g.order(); ++y)
      if (full_map[g.mul(x, y)] != g.mul(full_map[x], full_map[y])) return false;
  return true;
}

Automorphism identity_automorphism(const PermGroup& g) {
  Automorphism f;
  for (std::size_t s = 0; s < g.num_generators(); ++s) f.generator_images.push_back(g.generator(s));
  f.full_map.resize(g.order());
  for (ElementId x = 0; x < g.order(); ++x) f.full_map[x] = x;
  return f;
}

Automorphism inverse(const PermGroup& g, const Automorphism& f) {
  Automorphism out;
  out.full_map.resize(g.order());
  for (ElementId x = 0; x < g.order(); ++x) out.full_map[f.full_map[x]] = x;
  for (std::size_t s = 0; s < g.num_generators(); ++s) out.generator_images.push_back(out.full_map[g.generator(s)]);
  return out;
}

Automorphism compose(const PermGroup& g, const Automorphism& f, const Automorphism& h) {
  Automorphism out;
  out.full_map.resize(g.order());
  for (ElementId x = 0; x < g.order(); ++x) out.full_map[x] = f.full_map[h.full_map[x]];
  for (std::size_t s = 0; s < g.num_generators(); ++s) out.generator_images.push_back(out.full_map[g.generator(s)]);
  return out;
}

}  // namespace holoq
