#include "holoq/permutation.hpp"

#include "holoq/errors.hpp"

#include <numeric>
#include <string>

namespace holoq {

Permutation::Permutation(std::size_t degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), Point{0});
}

Permutation Permutation::from_images(std::vector<Point> images) {
  std::vector<bool> seen(images.size(), false);
  for (Point x : images) {
    if (x >= images.size() || seen[x])
      throw Error(ErrorKind::MalformedPermutation, "image list is not a bijection of " + std::to_string(images.size()) + " points");
    seen[x] = true;
  }
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

Permutation Permutation::from_cycles(std::size_t degree, std::span<const Cycle> cycles) {
  if (degree == 0) throw Error(ErrorKind::MalformedPermutation, "degree must be positive");
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  std::vector<bool> used(degree, false);
  for (const Cycle& c : cycles) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      const std::size_t x = c[i];
      if (x < 1 || x > degree)
        throw Error(ErrorKind::MalformedPermutation, "point " + std::to_string(x) + " outside 1.." + std::to_string(degree));
      if (used[x - 1]) throw Error(ErrorKind::MalformedPermutation, "point " + std::to_string(x) + " repeated in cycles");
      used[x - 1] = true;
      images[x - 1] = static_cast<Point>(c[(i + 1) % c.size()] - 1);
    }
  }
  return from_images(std::move(images));
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  if (degree() != rhs.degree()) throw Error(ErrorKind::MalformedPermutation, "degree mismatch in product");
  Permutation out;
  out.images_.resize(degree());
  for (std::size_t i = 0; i < degree(); ++i) out.images_[i] = images_[rhs.images_[i]];
  return out;
}

Permutation Permutation::inverse() const {
  Permutation out;
  out.images_.resize(degree());
  for (std::size_t i = 0; i < degree(); ++i) out.images_[images_[i]] = static_cast<Point>(i);
  return out;
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

std::vector<Cycle> Permutation::cycles() const {
  std::vector<Cycle> out;
  std::vector<bool> seen(degree(), false);
  for (std::size_t start = 0; start < degree(); ++start) {
    if (seen[start] || images_[start] == start) continue;
    Cycle c;
    for (std::size_t x = start; !seen[x]; x = images_[x]) {
      seen[x] = true;
      c.push_back(x + 1);
    }
    out.push_back(std::move(c));
  }
  return out;
}

IntMatrix Permutation::matrix() const {
  const auto n = static_cast<Eigen::Index>(degree());
  IntMatrix m = IntMatrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) m(images_[i], i) = 1;
  return m;
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (Point x : p.images()) {
    h ^= x;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace holoq
