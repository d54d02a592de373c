#include "fischer_lab/matsuo/algebra.hpp"

#include <algorithm>

#include "fischer_lab/error.hpp"
#include "fischer_lab/fischer/transposition_system.hpp"
#include "fischer_lab/groups/closure.hpp"

namespace fischer_lab::matsuo {

namespace {

void require_same_size(std::size_t a, std::size_t b) {
  if (a != b) {
    throw Error(ErrorKind::domain,
                "dimension mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
  }
}

// Adds c * (row of terms) into out.
void accumulate(AlgebraVector& out, std::span<const Term> terms, const Rational& c) {
  for (const auto& t : terms) out[t.index] += c * t.coefficient;
}

// (x^i x^j | x^k) from the tables.
Rational product_form(const MatsuoAlgebra& a, std::size_t i, std::size_t j, std::size_t k) {
  Rational acc;
  for (const auto& t : a.product(i, j)) {
    const Rational& g = a.form(t.index, k);
    if (!g.is_zero()) acc += t.coefficient * g;
  }
  return acc;
}

}  // namespace

AlgebraVector AlgebraVector::basis(std::size_t dim, std::size_t i, const Rational& scale) {
  AlgebraVector v(dim);
  v[i] = scale;
  return v;
}

bool AlgebraVector::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& r) { return r.is_zero(); });
}

AlgebraVector& AlgebraVector::operator+=(const AlgebraVector& o) {
  require_same_size(size(), o.size());
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (!o.c_[i].is_zero()) c_[i] += o.c_[i];
  }
  return *this;
}

AlgebraVector& AlgebraVector::operator-=(const AlgebraVector& o) {
  require_same_size(size(), o.size());
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (!o.c_[i].is_zero()) c_[i] -= o.c_[i];
  }
  return *this;
}

AlgebraVector& AlgebraVector::operator*=(const Rational& s) {
  for (auto& c : c_) {
    if (!c.is_zero()) c *= s;
  }
  return *this;
}

std::string AlgebraVector::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    if (!s.empty()) s += " + ";
    s += c_[i].to_string() + " x" + std::to_string(i);
  }
  return s.empty() ? "0" : s;
}

MatsuoAlgebra::MatsuoAlgebra(fischer::TranspositionSystem sys, Rational alpha, Rational beta, unsigned threads)
    : sys_(std::move(sys)), alpha_(std::move(alpha)), beta_(std::move(beta)) {
  const std::size_t n = sys_.size();
  const Rational half_alpha = alpha_ / Rational(2);
  const Rational diag_form = beta_ / Rational(2);
  const Rational adj_form = alpha_ * beta_ / Rational(8);

  std::vector<std::vector<Term>> rows(n);
  gram_ = linalg::RationalMatrix(n, n);
  groups::detail::run_chunked(n, threads, [&](unsigned, std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      auto& row = rows[i];
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j) {
          row.push_back({static_cast<std::uint32_t>(i), Rational(2)});
          gram_(i, j) = diag_form;
        } else if (sys_.adjacent(i, j)) {
          const auto k = static_cast<std::uint32_t>(sys_.circ(i, j));
          std::array<Term, 3> t{Term{static_cast<std::uint32_t>(i), half_alpha},
                                Term{static_cast<std::uint32_t>(j), half_alpha}, Term{k, -half_alpha}};
          std::sort(t.begin(), t.end(), [](const Term& a, const Term& b) { return a.index < b.index; });
          row.insert(row.end(), t.begin(), t.end());
          gram_(i, j) = adj_form;
        }
      }
    }
  });

  offsets_.assign(n * n + 1, 0);
  std::size_t total = 0;
  for (const auto& r : rows) total += r.size();
  terms_.reserve(total);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t pos = 0;
    for (std::size_t j = 0; j < n; ++j) {
      offsets_[i * n + j] = static_cast<std::uint32_t>(terms_.size());
      const std::size_t count = i == j ? 1 : sys_.adjacent(i, j) ? 3 : 0;
      for (std::size_t c = 0; c < count; ++c) terms_.push_back(std::move(rows[i][pos++]));
    }
  }
  offsets_[n * n] = static_cast<std::uint32_t>(terms_.size());
}

MatsuoAlgebra build_algebra(const fischer::TranspositionSystem& sys, const Rational& alpha, const Rational& beta,
                            unsigned threads) {
  return MatsuoAlgebra(sys, alpha, beta, threads);
}

AlgebraVector multiply(const MatsuoAlgebra& a, const AlgebraVector& u, const AlgebraVector& v) {
  const std::size_t n = a.dimension();
  require_same_size(u.size(), n);
  require_same_size(v.size(), n);
  AlgebraVector out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (u[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (v[j].is_zero()) continue;
      accumulate(out, a.product(i, j), u[i] * v[j]);
    }
  }
  return out;
}

AlgebraVector multiply_axis(const MatsuoAlgebra& a, std::size_t i, const AlgebraVector& v) {
  const std::size_t n = a.dimension();
  require_same_size(v.size(), n);
  AlgebraVector out(n);
  for (std::size_t j = 0; j < n; ++j) {
    if (!v[j].is_zero()) accumulate(out, a.product(i, j), v[j]);
  }
  return out;
}

Rational form(const MatsuoAlgebra& a, const AlgebraVector& u, const AlgebraVector& v) {
  const std::size_t n = a.dimension();
  require_same_size(u.size(), n);
  require_same_size(v.size(), n);
  Rational acc;
  for (std::size_t i = 0; i < n; ++i) {
    if (u[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (v[j].is_zero() || a.form(i, j).is_zero()) continue;
      acc += u[i] * v[j] * a.form(i, j);
    }
  }
  return acc;
}

std::optional<AlgebraVector> unity(const MatsuoAlgebra& a, std::span<const std::size_t> component) {
  if (component.empty()) throw Error(ErrorKind::domain, "unity: empty component");
  const std::size_t k = fischer::valency(a.system(), component);
  const Rational denom = Rational(static_cast<long>(k)) * a.alpha() + Rational(4);
  if (denom.is_zero()) return std::nullopt;

  const std::size_t n = a.dimension();
  const Rational scale = Rational(4) / denom;
  AlgebraVector omega(n);
  for (auto i : component) omega[i] = scale;

  const Rational half_beta = a.beta() / Rational(2);
  for (auto i : component) {
    if (multiply_axis(a, i, omega) != AlgebraVector::basis(n, i, Rational(2))) {
      throw Error(ErrorKind::internal, "unity: omega x^" + std::to_string(i) + " != 2 x^" + std::to_string(i));
    }
    if (form(a, omega, AlgebraVector::basis(n, i)) != half_beta) {
      throw Error(ErrorKind::internal, "unity: (omega|x^" + std::to_string(i) + ") != beta/2");
    }
  }
  const AlgebraVector half = Rational(1, 2) * omega;
  if (multiply(a, half, half) != half) throw Error(ErrorKind::internal, "unity: omega/2 is not idempotent");
  return omega;
}

AxiomCheck verify_axioms(const MatsuoAlgebra& a, unsigned threads) {
  const std::size_t n = a.dimension();
  AxiomCheck out;
  for (std::size_t i = 0; i < n && out.ok(); ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto pij = a.product(i, j);
      const auto pji = a.product(j, i);
      if (!std::equal(pij.begin(), pij.end(), pji.begin(), pji.end())) {
        out.commutative = false;
        out.first_failure = {i, j, j};
        break;
      }
      if (a.form(i, j) != a.form(j, i)) {
        out.symmetric_form = false;
        out.first_failure = {i, j, j};
        break;
      }
    }
  }
  if (!out.ok()) return out;

  // Per-row first failure, reduced afterwards so the reported triple does
  // not depend on the thread count.
  std::vector<std::optional<std::array<std::size_t, 3>>> failures(n);
  groups::detail::run_chunked(n, threads, [&](unsigned, std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      for (std::size_t j = 0; j < n && !failures[i]; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
          // (x^i x^j | x^k) versus (x^i | x^j x^k) = (x^j x^k | x^i).
          if (product_form(a, i, j, k) != product_form(a, j, k, i)) {
            failures[i] = std::array<std::size_t, 3>{i, j, k};
            break;
          }
        }
      }
    }
  });
  out.triples_checked = n * n * n;
  for (const auto& f : failures) {
    if (f) {
      out.invariant = false;
      out.first_failure = f;
      break;
    }
  }
  return out;
}

FormDefiniteness form_definiteness(const MatsuoAlgebra& a) {
  FormDefiniteness out;
  out.leading_minors = linalg::leading_principal_minors(a.gram());
  out.positive_definite =
      out.leading_minors.size() == a.dimension() &&
      std::all_of(out.leading_minors.begin(), out.leading_minors.end(), [](const Rational& m) { return m.sign() > 0; });
  return out;
}

}  // namespace fischer_lab::matsuo
