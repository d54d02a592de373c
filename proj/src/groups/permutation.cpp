#include "fischer_lab/groups/permutation.hpp"

#include <numeric>
#include <sstream>

#include "fischer_lab/error.hpp"

namespace fischer_lab::groups {

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point p : images_) {
    if (p >= images_.size() || seen[p]) {
      throw Error(ErrorKind::structural, "permutation images are not a bijection");
    }
    seen[p] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

Permutation Permutation::transposition(std::size_t degree, Point a, Point b) {
  return from_cycles(degree, {{a, b}});
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     const std::vector<std::vector<Point>>& cycles) {
  auto images = identity(degree).images_;
  std::vector<bool> used(degree, false);
  for (const auto& cycle : cycles) {
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      Point from = cycle[k];
      Point to = cycle[(k + 1) % cycle.size()];
      if (from >= degree || to >= degree || used[from]) {
        throw Error(ErrorKind::structural, "invalid cycle specification");
      }
      used[from] = true;
      images[from] = to;
    }
  }
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

std::vector<std::vector<Point>> Permutation::cycles() const {
  std::vector<std::vector<Point>> out;
  std::vector<bool> seen(images_.size(), false);
  for (Point start = 0; start < images_.size(); ++start) {
    if (seen[start] || images_[start] == start) continue;
    std::vector<Point> cycle;
    for (Point x = start; !seen[x]; x = images_[x]) {
      seen[x] = true;
      cycle.push_back(x);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

std::string Permutation::to_string() const {
  auto cs = cycles();
  if (cs.empty()) return "()";
  std::ostringstream os;
  for (const auto& c : cs) {
    os << '(';
    for (std::size_t k = 0; k < c.size(); ++k) os << (k ? " " : "") << c[k];
    os << ')';
  }
  return os.str();
}

Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) {
    throw Error(ErrorKind::structural, "compose: permutation degrees differ (" +
                                           std::to_string(a.degree()) + " vs " +
                                           std::to_string(b.degree()) + ")");
  }
  std::vector<Point> images(a.degree());
  for (Point x = 0; x < images.size(); ++x) images[x] = a[b[x]];
  return Permutation(Permutation::Unchecked{}, std::move(images));
}

Permutation inverse(const Permutation& g) {
  std::vector<Point> images(g.degree());
  for (Point x = 0; x < images.size(); ++x) images[g[x]] = x;
  return Permutation(Permutation::Unchecked{}, std::move(images));
}

Permutation identity_like(const Permutation& g) { return Permutation::identity(g.degree()); }

std::size_t element_order(const Permutation& g, std::size_t cap) {
  std::size_t order = 1;
  for (const auto& c : g.cycles()) {
    order = std::lcm(order, c.size());
    if (order > cap) {
      throw Error(ErrorKind::order_overflow,
                  "order-overflow: element order exceeds cap " + std::to_string(cap));
    }
  }
  return order;
}

std::size_t hash_value(const Permutation& g) noexcept {
  std::size_t h = 1469598103934665603ull;
  for (Point p : g.images()) {
    h ^= p;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace fischer_lab::groups
