#pragma once

#include "holoq/scalar.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace holoq {

using Point = std::uint32_t;
using Cycle = std::vector<std::size_t>;  // 1-based points

/// A bijection of {0, ..., degree-1}. Products compose right to left:
/// (p * q)(x) = p(q(x)).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::size_t degree);

  /// Throws MalformedPermutation unless images is a bijection.
  static Permutation from_images(std::vector<Point> images);
  /// Cycles use 1-based points; fixed points may be omitted.
  static Permutation from_cycles(std::size_t degree, std::span<const Cycle> cycles);

  [[nodiscard]] std::size_t degree() const noexcept { return images_.size(); }
  [[nodiscard]] Point operator()(Point x) const { return images_[x]; }
  [[nodiscard]] std::span<const Point> images() const noexcept { return images_; }

  [[nodiscard]] Permutation operator*(const Permutation& rhs) const;
  [[nodiscard]] Permutation inverse() const;
  [[nodiscard]] bool is_identity() const noexcept;
  [[nodiscard]] std::vector<Cycle> cycles() const;

  /// Column i is the unit vector e_{p(i)}, so matrix(p * q) = matrix(p) * matrix(q).
  [[nodiscard]] IntMatrix matrix() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Point> images_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

}  // namespace holoq
