#include "fischer_lab/matsuo/radical.hpp"

#include <algorithm>

#include "fischer_lab/error.hpp"

namespace fischer_lab::matsuo {

AlgebraVector Radical::reduce(AlgebraVector v) const {
  for (std::size_t r = 0; r < basis.size(); ++r) {
    const Rational& c = v[pivots[r]];
    if (c.is_zero()) continue;
    const Rational factor = c / basis[r][pivots[r]];
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (!basis[r][j].is_zero()) v[j] -= factor * basis[r][j];
    }
  }
  return v;
}

Radical gram_radical(const MatsuoAlgebra& a) {
  Radical out;
  for (auto& row : linalg::kernel_basis(a.gram())) {
    const auto pivot = static_cast<std::size_t>(
        std::find_if(row.begin(), row.end(), [](const Rational& x) { return !x.is_zero(); }) - row.begin());
    out.pivots.push_back(pivot);
    out.basis.emplace_back(std::move(row));
  }
  return out;
}

std::vector<Rational> QuotientAlgebra::project(const AlgebraVector& v) const {
  const AlgebraVector reduced = radical_.reduce(v);
  std::vector<Rational> q;
  q.reserve(representatives_.size());
  for (auto j : representatives_) q.push_back(reduced[j]);
  return q;
}

AlgebraVector QuotientAlgebra::lift(const std::vector<Rational>& q) const {
  if (q.size() != representatives_.size()) throw Error(ErrorKind::domain, "quotient: dimension mismatch");
  AlgebraVector v(algebra_->dimension());
  for (std::size_t k = 0; k < q.size(); ++k) v[representatives_[k]] = q[k];
  return v;
}

std::vector<Rational> QuotientAlgebra::multiply(const std::vector<Rational>& u, const std::vector<Rational>& v) const {
  return project(matsuo::multiply(*algebra_, lift(u), lift(v)));
}

Rational QuotientAlgebra::form(const std::vector<Rational>& u, const std::vector<Rational>& v) const {
  return matsuo::form(*algebra_, lift(u), lift(v));
}

QuotientAlgebra quotient(const MatsuoAlgebra& a, Radical radical) {
  const std::size_t n = a.dimension();
  for (std::size_t r = 0; r < radical.basis.size(); ++r) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!radical.contains(multiply_axis(a, i, radical.basis[r]))) {
        throw Error(ErrorKind::radical_not_ideal, "radical-not-ideal: x^" + std::to_string(i) +
                                                      " times radical vector " + std::to_string(r) +
                                                      " leaves the radical");
      }
    }
  }

  QuotientAlgebra q;
  q.algebra_ = &a;
  std::vector<bool> is_pivot(n, false);
  for (auto p : radical.pivots) is_pivot[p] = true;
  for (std::size_t j = 0; j < n; ++j) {
    if (!is_pivot[j]) q.representatives_.push_back(j);
  }
  q.radical_ = std::move(radical);

  const std::size_t d = q.representatives_.size();
  q.gram_ = linalg::RationalMatrix(d, d);
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 0; c < d; ++c) q.gram_(r, c) = a.form(q.representatives_[r], q.representatives_[c]);
  }
  if (linalg::rank(q.gram_) != d) throw Error(ErrorKind::internal, "quotient: induced form is degenerate");
  return q;
}

}  // namespace fischer_lab::matsuo
