#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "fischer_lab/matsuo/algebra.hpp"

namespace fischer_lab::matsuo {

/// Matrix of ad x^i: column j holds the coordinates of x^i x^j.
linalg::RationalMatrix adjoint_matrix(const MatsuoAlgebra& a, std::size_t i);

/// dim ker(ad x^i − λ), by exact rank of ad x^i − λ.
std::size_t eigenspace_dimension(const MatsuoAlgebra& a, std::size_t i, const Rational& lambda);

/// Explicit eigenbases of ad x^i:
///   2: x^i;
///   α: x^j − x^{i∘j}, one per pair {j, i∘j} of neighbours (j < i∘j);
///   0: x^j for j ≁ i, j ≠ i, and x^j + x^{i∘j} − (α/2) x^i per pair.
struct AdjointSpectrum {
  std::size_t axis = 0;
  std::vector<AlgebraVector> eigen_two;
  std::vector<AlgebraVector> eigen_zero;
  std::vector<AlgebraVector> eigen_alpha;

  std::size_t total() const noexcept { return eigen_two.size() + eigen_zero.size() + eigen_alpha.size(); }
};

/// Throws Error(degenerate_alpha) for α ∈ {0, 2}. Every basis vector is
/// checked against its eigen-equation by table multiplication, the
/// neighbours must split into pairs {j, i∘j}, and the sizes must add up to
/// |I|; a failure throws Error(internal).
AdjointSpectrum adjoint_spectrum(const MatsuoAlgebra& a, std::size_t i);

/// The basis permutation π_i: j -> i∘j if j ~ i, else j.
struct MiyamotoMap {
  std::size_t axis = 0;
  std::vector<std::uint32_t> permutation;

  AlgebraVector apply(const AlgebraVector& v) const;
};

/// Builds π_i and checks: involution; +1 on the 2- and 0-eigenvectors and −1
/// on the α-eigenvectors; algebra automorphism on all basis pairs; isometry
/// of the form. A failure throws Error(internal).
MiyamotoMap miyamoto(const MatsuoAlgebra& a, std::size_t i);

/// Compares the fixed space of π_i (spanned by orbit sums) with
/// ℝx^i ⊕ ker(ad x^i): equal dimensions, and every orbit sum decomposes over
/// the explicit 2- and 0-eigenvectors. Returns the fixed-space dimension;
/// throws Error(internal) on a mismatch.
std::size_t verify_fixed_subalgebra(const MatsuoAlgebra& a, const MiyamotoMap& m);

/// π applied to products and form of all basis pairs.
bool is_automorphism(const MatsuoAlgebra& a, const std::vector<std::uint32_t>& perm);
bool is_isometry(const MatsuoAlgebra& a, const std::vector<std::uint32_t>& perm);

}  // namespace fischer_lab::matsuo
