#include "fischer_lab/matsuo/linalg.hpp"

#include <utility>

#include "fischer_lab/error.hpp"

namespace fischer_lab::linalg {

RationalMatrix RationalMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  RationalMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols()) throw Error(ErrorKind::structural, "from_rows: ragged rows");
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = rows[r][c];
  }
  return m;
}

namespace {

std::vector<mpz_class> integer_row(std::span<const Rational> row) {
  mpz_class lcm = 1;
  for (const auto& x : row) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.value().get_den_mpz_t());
  std::vector<mpz_class> out(row.size());
  for (std::size_t c = 0; c < row.size(); ++c) {
    out[c] = row[c].value().get_num() * (lcm / row[c].value().get_den());
  }
  return out;
}

}  // namespace

IntegerEchelon fraction_free_echelon(const RationalMatrix& m) {
  std::vector<std::vector<mpz_class>> a;
  a.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) a.push_back(integer_row(m.row(r)));

  IntegerEchelon out;
  out.cols = m.cols();
  const std::size_t rows = a.size();
  mpz_class prev = 1;
  std::size_t r = 0;
  for (std::size_t col = 0; col < m.cols() && r < rows; ++col) {
    std::size_t pivot = r;
    while (pivot < rows && a[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[r]);
    const mpz_class& p = a[r][col];
    for (std::size_t i = r + 1; i < rows; ++i) {
      const mpz_class f = a[i][col];
      for (std::size_t c = col + 1; c < m.cols(); ++c) {
        // Bareiss step: exact division by the previous pivot.
        mpz_class v = p * a[i][c] - f * a[r][c];
        mpz_divexact(a[i][c].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][col] = 0;
    }
    prev = p;
    out.pivot_columns.push_back(col);
    ++r;
  }
  a.resize(r);
  out.rows = std::move(a);
  return out;
}

std::size_t rank(const RationalMatrix& m) {
  std::vector<std::vector<Rational>> a;
  a.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) a.emplace_back(m.row(r).begin(), m.row(r).end());
  std::size_t r = 0;
  for (std::size_t col = 0; col < m.cols() && r < a.size(); ++col) {
    std::size_t pivot = r;
    while (pivot < a.size() && a[pivot][col].is_zero()) ++pivot;
    if (pivot == a.size()) continue;
    std::swap(a[pivot], a[r]);
    std::vector<std::size_t> support;
    for (std::size_t c = col + 1; c < m.cols(); ++c)
      if (!a[r][c].is_zero()) support.push_back(c);
    for (std::size_t i = r + 1; i < a.size(); ++i) {
      if (a[i][col].is_zero()) continue;
      const Rational f = a[i][col] / a[r][col];
      for (auto c : support) a[i][c] -= f * a[r][c];
      a[i][col] = Rational(0);
    }
    ++r;
  }
  return r;
}

std::vector<std::vector<Rational>> reduced_row_basis(std::vector<std::vector<Rational>> a) {
  if (a.empty()) return a;
  const std::size_t cols = a.front().size();
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols && r < a.size(); ++col) {
    std::size_t pivot = r;
    while (pivot < a.size() && a[pivot][col].is_zero()) ++pivot;
    if (pivot == a.size()) continue;
    std::swap(a[pivot], a[r]);
    const Rational inv = Rational(1) / a[r][col];
    for (std::size_t c = col; c < cols; ++c) a[r][c] *= inv;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || a[i][col].is_zero()) continue;
      const Rational f = a[i][col];
      for (std::size_t c = col; c < cols; ++c) {
        if (!a[r][c].is_zero()) a[i][c] -= f * a[r][c];
      }
    }
    ++r;
  }
  a.resize(r);
  return a;
}

std::vector<std::vector<Rational>> kernel_basis(const RationalMatrix& m) {
  const auto ech = fraction_free_echelon(m);
  const std::size_t n = m.cols();
  const std::size_t rk = ech.rank();

  // Back substitution on the integer echelon form gives the reduced form
  // over Q: reduced[k] has 1 at pivot_columns[k] and 0 at the other pivots.
  std::vector<std::vector<Rational>> reduced(rk, std::vector<Rational>(n));
  for (std::size_t k = rk; k-- > 0;) {
    const auto pc = ech.pivot_columns[k];
    const mpq_class pivot(ech.rows[k][pc]);
    for (std::size_t c = pc; c < n; ++c) reduced[k][c] = Rational(mpq_class(ech.rows[k][c]) / pivot);
    for (std::size_t later = k + 1; later < rk; ++later) {
      const auto lc = ech.pivot_columns[later];
      const Rational f = reduced[k][lc];
      if (f.is_zero()) continue;
      for (std::size_t c = lc; c < n; ++c) {
        if (!reduced[later][c].is_zero()) reduced[k][c] -= f * reduced[later][c];
      }
    }
  }

  std::vector<bool> is_pivot(n, false);
  for (auto pc : ech.pivot_columns) is_pivot[pc] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(n);
    v[free] = Rational(1);
    for (std::size_t k = 0; k < rk; ++k) v[ech.pivot_columns[k]] = -reduced[k][free];
    basis.push_back(std::move(v));
  }

  basis = reduced_row_basis(std::move(basis));
  for (auto& v : basis) {
    const auto ints = integer_row(v);
    mpz_class g = 0;
    for (const auto& x : ints) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    for (std::size_t c = 0; c < n; ++c) v[c] = Rational(mpq_class(ints[c] / g));
  }
  return basis;
}

std::vector<Rational> leading_principal_minors(const RationalMatrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorKind::structural, "leading_principal_minors: matrix not square");
  const std::size_t n = m.rows();
  mpz_class scale = 1;
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), m(r, c).value().get_den_mpz_t());
  std::vector<std::vector<mpz_class>> a(n, std::vector<mpz_class>(n));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) a[r][c] = m(r, c).value().get_num() * (scale / m(r, c).value().get_den());

  // Without row exchanges the k-th Bareiss pivot is the k-th leading minor
  // of the scaled matrix, i.e. scale^k times the true minor.
  std::vector<Rational> minors;
  mpz_class prev = 1;
  mpq_class scale_power = 1;
  for (std::size_t k = 0; k < n; ++k) {
    scale_power *= mpq_class(scale);
    minors.emplace_back(mpq_class(a[k][k]) / scale_power);
    if (a[k][k] == 0) break;
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t c = k + 1; c < n; ++c) {
        mpz_class v = a[k][k] * a[i][c] - a[i][k] * a[k][c];
        mpz_divexact(a[i][c].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = a[k][k];
  }
  return minors;
}

bool is_positive_definite(const RationalMatrix& m) {
  const auto minors = leading_principal_minors(m);
  if (minors.size() != m.rows()) return false;
  for (const auto& d : minors)
    if (d.sign() <= 0) return false;
  return true;
}

std::vector<Rational> multiply(const RationalMatrix& m, std::span<const Rational> x) {
  if (x.size() != m.cols()) throw Error(ErrorKind::structural, "multiply: dimension mismatch");
  std::vector<Rational> y(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (!m(r, c).is_zero() && !x[c].is_zero()) y[r] += m(r, c) * x[c];
    }
  }
  return y;
}

}  // namespace fischer_lab::linalg
