#pragma once

#include <cstddef>
#include <vector>

#include "fischer_lab/matsuo/algebra.hpp"

namespace fischer_lab::matsuo {

/// Radical of the form: reduced row echelon basis with pivot = first nonzero
/// column, each row cleared to a primitive integer vector with positive pivot.
struct Radical {
  std::vector<AlgebraVector> basis;
  std::vector<std::size_t> pivots;

  std::size_t dimension() const noexcept { return basis.size(); }

  /// v minus its radical components along the pivot columns; zero iff v lies
  /// in the radical.
  AlgebraVector reduce(AlgebraVector v) const;
  bool contains(const AlgebraVector& v) const { return reduce(v).is_zero(); }
};

Radical gram_radical(const MatsuoAlgebra& a);

/// B / rad, represented on the complement spanned by the non-pivot axes.
/// Quotient coordinates index representatives().
class QuotientAlgebra {
 public:
  std::size_t dimension() const noexcept { return representatives_.size(); }
  const std::vector<std::size_t>& representatives() const noexcept { return representatives_; }
  const Radical& radical() const noexcept { return radical_; }

  /// Quotient coordinates of the class of v.
  std::vector<Rational> project(const AlgebraVector& v) const;
  AlgebraVector lift(const std::vector<Rational>& q) const;

  std::vector<Rational> multiply(const std::vector<Rational>& u, const std::vector<Rational>& v) const;
  Rational form(const std::vector<Rational>& u, const std::vector<Rational>& v) const;

  /// Induced form on the representatives.
  const linalg::RationalMatrix& gram() const noexcept { return gram_; }

 private:
  friend QuotientAlgebra quotient(const MatsuoAlgebra& a, Radical radical);

  const MatsuoAlgebra* algebra_ = nullptr;
  Radical radical_;
  std::vector<std::size_t> representatives_;
  linalg::RationalMatrix gram_;
};

/// Checks that the radical is an ideal (every x^i r lies in it, else
/// Error(radical_not_ideal)) and that the induced form is non-degenerate
/// (else Error(internal)). The algebra must outlive the quotient.
QuotientAlgebra quotient(const MatsuoAlgebra& a, Radical radical);

}  // namespace fischer_lab::matsuo
