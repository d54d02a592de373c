#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace fischer_lab::groups {

using Residue = std::uint8_t;

/// Square matrix over a small prime field F_p (p = 2 or 3), acting on column
/// vectors. Entries are kept reduced in [0, p); the canonical form is the
/// row-major residue tuple, so value comparison is canonical comparison.
class FpMatrix {
 public:
  static constexpr std::size_t max_dim = 8;

  FpMatrix() = default;

  /// `entries` are row-major and reduced mod p (negative values allowed).
  /// Throws Error(structural) for an unsupported modulus or dimension.
  FpMatrix(unsigned p, std::size_t dim, std::span<const int> entries);

  static FpMatrix identity(unsigned p, std::size_t dim);

  unsigned modulus() const noexcept { return p_; }
  std::size_t dim() const noexcept { return dim_; }
  Residue at(std::size_t row, std::size_t col) const noexcept {
    return entries_[row * max_dim + col];
  }

  /// Row-major residues, dim*dim of them.
  std::vector<Residue> residues() const;

  /// Image of a column vector of residues.
  std::vector<Residue> apply(std::span<const Residue> x) const;

  /// Determinant reduced mod p.
  unsigned determinant() const;

  bool is_identity() const noexcept;

  /// Residue string, rows separated by '/': "10/01".
  std::string to_string() const;

  friend auto operator<=>(const FpMatrix&, const FpMatrix&) = default;

 private:
  friend FpMatrix compose(const FpMatrix& a, const FpMatrix& b);

  std::uint8_t p_ = 2;
  std::uint8_t dim_ = 0;
  std::array<Residue, max_dim * max_dim> entries_{};
};

FpMatrix compose(const FpMatrix& a, const FpMatrix& b);

/// Throws Error(structural) for a singular matrix.
FpMatrix inverse(const FpMatrix& g);
FpMatrix identity_like(const FpMatrix& g);
inline bool is_identity(const FpMatrix& g) { return g.is_identity(); }

/// Least k >= 1 with g^k = id by repeated multiplication; throws
/// Error(order_overflow) past `cap`.
std::size_t element_order(const FpMatrix& g, std::size_t cap);

std::size_t hash_value(const FpMatrix& g) noexcept;

}  // namespace fischer_lab::groups

template <>
struct std::hash<fischer_lab::groups::FpMatrix> {
  std::size_t operator()(const fischer_lab::groups::FpMatrix& g) const noexcept {
    return fischer_lab::groups::hash_value(g);
  }
};
