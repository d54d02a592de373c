#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace fischer_lab::groups {

using Point = std::uint32_t;

/// A permutation of {0, ..., degree-1}, stored by its image array.
///
/// Products follow the "right factor acts first" convention used throughout
/// the library: compose(a, b)(x) == a(b(x)).
class Permutation {
 public:
  Permutation() = default;

  /// Throws Error(structural) unless `images` is a bijection of 0..n-1.
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree);
  static Permutation transposition(std::size_t degree, Point a, Point b);
  static Permutation from_cycles(std::size_t degree,
                                 const std::vector<std::vector<Point>>& cycles);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator[](Point x) const { return images_[x]; }
  std::span<const Point> images() const noexcept { return images_; }

  bool is_identity() const noexcept;

  /// Nontrivial cycles, each starting at its least point, ordered by that point.
  std::vector<std::vector<Point>> cycles() const;

  /// Cycle notation, e.g. "(0 1 2)(3 4)"; the identity prints as "()".
  std::string to_string() const;

  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  struct Unchecked {};
  Permutation(Unchecked, std::vector<Point> images) : images_(std::move(images)) {}

  friend Permutation compose(const Permutation& a, const Permutation& b);
  friend Permutation inverse(const Permutation& g);

  std::vector<Point> images_;
};

Permutation compose(const Permutation& a, const Permutation& b);
Permutation inverse(const Permutation& g);
Permutation identity_like(const Permutation& g);
inline bool is_identity(const Permutation& g) { return g.is_identity(); }

/// Least k >= 1 with g^k = id, computed as the lcm of the cycle lengths.
/// Throws Error(order_overflow) if that exceeds `cap`.
std::size_t element_order(const Permutation& g, std::size_t cap);

std::size_t hash_value(const Permutation& g) noexcept;

}  // namespace fischer_lab::groups

template <>
struct std::hash<fischer_lab::groups::Permutation> {
  std::size_t operator()(const fischer_lab::groups::Permutation& g) const noexcept {
    return fischer_lab::groups::hash_value(g);
  }
};
