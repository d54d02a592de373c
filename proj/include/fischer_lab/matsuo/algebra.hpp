#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fischer_lab/fischer/transposition_system.hpp"
#include "fischer_lab/matsuo/linalg.hpp"
#include "fischer_lab/matsuo/rational.hpp"

namespace fischer_lab::matsuo {

/// Element of B_{α,β}(G) in the axis basis x^i.
class AlgebraVector {
 public:
  AlgebraVector() = default;
  explicit AlgebraVector(std::size_t dim) : c_(dim) {}
  explicit AlgebraVector(std::vector<Rational> coefficients) : c_(std::move(coefficients)) {}

  /// scale * x^i.
  static AlgebraVector basis(std::size_t dim, std::size_t i, const Rational& scale = Rational(1));

  std::size_t size() const noexcept { return c_.size(); }
  Rational& operator[](std::size_t i) { return c_[i]; }
  const Rational& operator[](std::size_t i) const { return c_[i]; }
  const std::vector<Rational>& coefficients() const noexcept { return c_; }

  bool is_zero() const;

  /// Throws Error(domain) on a length mismatch.
  AlgebraVector& operator+=(const AlgebraVector& o);
  AlgebraVector& operator-=(const AlgebraVector& o);
  AlgebraVector& operator*=(const Rational& s);

  friend AlgebraVector operator+(AlgebraVector a, const AlgebraVector& b) { return a += b; }
  friend AlgebraVector operator-(AlgebraVector a, const AlgebraVector& b) { return a -= b; }
  friend AlgebraVector operator*(const Rational& s, AlgebraVector v) { return v *= s; }
  friend bool operator==(const AlgebraVector&, const AlgebraVector&) = default;

  /// "c_0 x0 + c_1 x1 ..." over the nonzero coefficients; "0" if none.
  std::string to_string() const;

 private:
  std::vector<Rational> c_;
};

/// One term c x^k of a basis product.
struct Term {
  std::uint32_t index;
  Rational coefficient;

  friend bool operator==(const Term&, const Term&) = default;
};

/// The Matsuo algebra of a transposition system:
///   x^i x^i = 2 x^i,  x^i x^j = (α/2)(x^i + x^j − x^{i∘j}) if i ~ j, else 0;
///   (x^i|x^i) = β/2,  (x^i|x^j) = αβ/8 if i ~ j, else 0.
/// Immutable after construction; queries are thread-safe.
class MatsuoAlgebra {
 public:
  MatsuoAlgebra(fischer::TranspositionSystem sys, Rational alpha, Rational beta, unsigned threads = 1);

  const fischer::TranspositionSystem& system() const noexcept { return sys_; }
  std::size_t dimension() const noexcept { return sys_.size(); }
  const Rational& alpha() const noexcept { return alpha_; }
  const Rational& beta() const noexcept { return beta_; }

  /// Structure constants of x^i x^j, at most three terms, sorted by index.
  std::span<const Term> product(std::size_t i, std::size_t j) const {
    const std::size_t cell = i * dimension() + j;
    return {terms_.data() + offsets_[cell], offsets_[cell + 1] - offsets_[cell]};
  }

  const Rational& form(std::size_t i, std::size_t j) const { return gram_(i, j); }
  const linalg::RationalMatrix& gram() const noexcept { return gram_; }

 private:
  fischer::TranspositionSystem sys_;
  Rational alpha_;
  Rational beta_;
  std::vector<std::uint32_t> offsets_;
  std::vector<Term> terms_;
  linalg::RationalMatrix gram_;
};

MatsuoAlgebra build_algebra(const fischer::TranspositionSystem& sys, const Rational& alpha, const Rational& beta,
                            unsigned threads = 1);

/// Bilinear extension of the basis product. Throws Error(domain) on a
/// dimension mismatch.
AlgebraVector multiply(const MatsuoAlgebra& a, const AlgebraVector& u, const AlgebraVector& v);

/// x^i v.
AlgebraVector multiply_axis(const MatsuoAlgebra& a, std::size_t i, const AlgebraVector& v);

Rational form(const MatsuoAlgebra& a, const AlgebraVector& u, const AlgebraVector& v);

/// ω = 4/(kα+4) Σ_{i∈C} x^i for a connected component C of valency k, or
/// nullopt when kα + 4 = 0. The result is checked: ω x^i = 2x^i and
/// (ω|x^i) = β/2 for i in C, and ω/2 is idempotent; a failure throws
/// Error(internal).
std::optional<AlgebraVector> unity(const MatsuoAlgebra& a, std::span<const std::size_t> component);

/// Outcome of the exhaustive axiom check.
struct AxiomCheck {
  bool commutative = true;
  bool symmetric_form = true;
  bool invariant = true;
  std::size_t triples_checked = 0;
  std::optional<std::array<std::size_t, 3>> first_failure;

  bool ok() const noexcept { return commutative && symmetric_form && invariant; }
};

/// Commutativity and form symmetry on all basis pairs, and (uv|w) = (u|vw)
/// on all basis triples.
AxiomCheck verify_axioms(const MatsuoAlgebra& a, unsigned threads = 1);

struct FormDefiniteness {
  bool positive_definite = false;
  std::vector<Rational> leading_minors;  // stops after the first zero
};

FormDefiniteness form_definiteness(const MatsuoAlgebra& a);

}  // namespace fischer_lab::matsuo
