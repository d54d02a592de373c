#include "fischer_lab/matsuo/spectrum.hpp"

#include <algorithm>

#include "fischer_lab/error.hpp"

namespace fischer_lab::matsuo {

namespace {

void check_axis(const MatsuoAlgebra& a, std::size_t i) {
  if (i >= a.dimension()) throw Error(ErrorKind::domain, "axis index " + std::to_string(i) + " out of range");
}

void expect_eigen(const MatsuoAlgebra& a, std::size_t i, const AlgebraVector& v, const Rational& lambda) {
  if (multiply_axis(a, i, v) != lambda * v) {
    throw Error(ErrorKind::internal, "eigenvector check failed for axis " + std::to_string(i) + " and eigenvalue " +
                                         lambda.to_string() + ": " + v.to_string());
  }
}

// The eigenvector formulas hold for every α; only their separation into
// distinct eigenvalues needs α ∉ {0, 2}.
AdjointSpectrum explicit_spectrum(const MatsuoAlgebra& a, std::size_t i) {
  check_axis(a, i);
  const auto& sys = a.system();
  const std::size_t n = a.dimension();
  const Rational half_alpha = a.alpha() / Rational(2);

  AdjointSpectrum s;
  s.axis = i;
  s.eigen_two.push_back(AlgebraVector::basis(n, i));
  std::vector<bool> paired(n, false);
  for (std::size_t j = 0; j < n; ++j) {
    if (j == i) continue;
    if (!sys.adjacent(i, j)) {
      s.eigen_zero.push_back(AlgebraVector::basis(n, j));
      continue;
    }
    const std::size_t partner = sys.circ(i, j);
    if (partner == j || partner == i || !sys.adjacent(i, partner) || sys.circ(i, partner) != j) {
      throw Error(ErrorKind::internal, "neighbours of axis " + std::to_string(i) + " do not pair up");
    }
    if (j > partner) continue;
    paired[j] = paired[partner] = true;
    AlgebraVector diff = AlgebraVector::basis(n, j) - AlgebraVector::basis(n, partner);
    AlgebraVector sum = AlgebraVector::basis(n, j) + AlgebraVector::basis(n, partner);
    sum[i] = -half_alpha;
    s.eigen_alpha.push_back(std::move(diff));
    s.eigen_zero.push_back(std::move(sum));
  }
  for (std::size_t j = 0; j < n; ++j) {
    if (j != i && sys.adjacent(i, j) && !paired[j]) {
      throw Error(ErrorKind::internal, "neighbour " + std::to_string(j) + " of axis " + std::to_string(i) +
                                           " left unpaired");
    }
  }
  if (s.total() != n) throw Error(ErrorKind::internal, "eigenspace dimensions do not add up to |I|");

  for (const auto& v : s.eigen_two) expect_eigen(a, i, v, Rational(2));
  for (const auto& v : s.eigen_zero) expect_eigen(a, i, v, Rational(0));
  for (const auto& v : s.eigen_alpha) expect_eigen(a, i, v, a.alpha());
  return s;
}

std::vector<Term> mapped_terms(std::span<const Term> terms, const std::vector<std::uint32_t>& perm) {
  std::vector<Term> out;
  out.reserve(terms.size());
  for (const auto& t : terms) out.push_back({perm[t.index], t.coefficient});
  std::sort(out.begin(), out.end(), [](const Term& x, const Term& y) { return x.index < y.index; });
  return out;
}

}  // namespace

linalg::RationalMatrix adjoint_matrix(const MatsuoAlgebra& a, std::size_t i) {
  check_axis(a, i);
  const std::size_t n = a.dimension();
  linalg::RationalMatrix m(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    for (const auto& t : a.product(i, j)) m(t.index, j) += t.coefficient;
  }
  return m;
}

std::size_t eigenspace_dimension(const MatsuoAlgebra& a, std::size_t i, const Rational& lambda) {
  auto m = adjoint_matrix(a, i);
  for (std::size_t j = 0; j < a.dimension(); ++j) m(j, j) -= lambda;
  return a.dimension() - linalg::rank(m);
}

AdjointSpectrum adjoint_spectrum(const MatsuoAlgebra& a, std::size_t i) {
  if (a.alpha() == Rational(0) || a.alpha() == Rational(2)) {
    throw Error(ErrorKind::degenerate_alpha,
                "degenerate-alpha: eigenvalues of ad x^i are not separated for alpha = " + a.alpha().to_string());
  }
  return explicit_spectrum(a, i);
}

AlgebraVector MiyamotoMap::apply(const AlgebraVector& v) const {
  if (v.size() != permutation.size()) throw Error(ErrorKind::domain, "miyamoto: dimension mismatch");
  AlgebraVector out(v.size());
  for (std::size_t j = 0; j < v.size(); ++j) out[permutation[j]] = v[j];
  return out;
}

bool is_automorphism(const MatsuoAlgebra& a, const std::vector<std::uint32_t>& perm) {
  const std::size_t n = a.dimension();
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = j; k < n; ++k) {
      const auto image = a.product(perm[j], perm[k]);
      const auto mapped = mapped_terms(a.product(j, k), perm);
      if (!std::equal(image.begin(), image.end(), mapped.begin(), mapped.end())) return false;
    }
  }
  return true;
}

bool is_isometry(const MatsuoAlgebra& a, const std::vector<std::uint32_t>& perm) {
  const std::size_t n = a.dimension();
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = j; k < n; ++k) {
      if (a.form(perm[j], perm[k]) != a.form(j, k)) return false;
    }
  }
  return true;
}

MiyamotoMap miyamoto(const MatsuoAlgebra& a, std::size_t i) {
  check_axis(a, i);
  MiyamotoMap m;
  m.axis = i;
  m.permutation = a.system().transposition_action(i);
  const std::size_t n = a.dimension();
  for (std::size_t j = 0; j < n; ++j) {
    if (m.permutation[m.permutation[j]] != j) {
      throw Error(ErrorKind::internal, "miyamoto: pi_" + std::to_string(i) + " is not an involution");
    }
  }

  const auto s = explicit_spectrum(a, i);
  for (const auto* part : {&s.eigen_two, &s.eigen_zero}) {
    for (const auto& v : *part) {
      if (m.apply(v) != v) throw Error(ErrorKind::internal, "miyamoto: sign +1 fails on " + v.to_string());
    }
  }
  for (const auto& v : s.eigen_alpha) {
    if (m.apply(v) != Rational(-1) * v) {
      throw Error(ErrorKind::internal, "miyamoto: sign -1 fails on " + v.to_string());
    }
  }
  if (!is_automorphism(a, m.permutation)) {
    throw Error(ErrorKind::internal, "miyamoto: pi_" + std::to_string(i) + " is not an algebra automorphism");
  }
  if (!is_isometry(a, m.permutation)) {
    throw Error(ErrorKind::internal, "miyamoto: pi_" + std::to_string(i) + " does not preserve the form");
  }
  return m;
}

std::size_t verify_fixed_subalgebra(const MatsuoAlgebra& a, const MiyamotoMap& m) {
  const std::size_t i = m.axis;
  const std::size_t n = a.dimension();
  const auto s = explicit_spectrum(a, i);
  const Rational half_alpha = a.alpha() / Rational(2);

  std::size_t fixed_dim = 0;
  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t pj = m.permutation[j];
    if (pj < j) continue;
    ++fixed_dim;
    AlgebraVector orbit_sum = AlgebraVector::basis(n, j);
    if (pj != j) orbit_sum[pj] = Rational(1);

    // Decompose over x^i and 0-eigenvectors of ad x^i.
    AlgebraVector rest = orbit_sum;
    if (pj != j) {
      AlgebraVector zero_vec = AlgebraVector::basis(n, j) + AlgebraVector::basis(n, pj);
      zero_vec[i] = -half_alpha;
      expect_eigen(a, i, zero_vec, Rational(0));
      rest -= zero_vec;
      rest -= AlgebraVector::basis(n, i, half_alpha);
    } else if (j == i) {
      rest -= s.eigen_two.front();
    } else {
      expect_eigen(a, i, orbit_sum, Rational(0));
      rest -= orbit_sum;
    }
    if (!rest.is_zero()) throw Error(ErrorKind::internal, "fixed subalgebra: decomposition failed");
  }
  if (fixed_dim != s.eigen_two.size() + s.eigen_zero.size()) {
    throw Error(ErrorKind::internal, "fixed subalgebra: dimension differs from 1 + dim ker(ad x^i)");
  }
  return fixed_dim;
}

}  // namespace fischer_lab::matsuo
