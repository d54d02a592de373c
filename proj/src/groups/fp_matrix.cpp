#include "fischer_lab/groups/fp_matrix.hpp"

#include <array>
#include <utility>

#include "fischer_lab/error.hpp"

namespace fischer_lab::groups {

namespace {

Residue reduce(int value, unsigned p) {
  int r = value % static_cast<int>(p);
  return static_cast<Residue>(r < 0 ? r + static_cast<int>(p) : r);
}

unsigned inverse_mod(unsigned a, unsigned p) {
  for (unsigned b = 1; b < p; ++b) {
    if ((a * b) % p == 1) return b;
  }
  throw Error(ErrorKind::structural, "no inverse mod p");
}

}  // namespace

FpMatrix::FpMatrix(unsigned p, std::size_t dim, std::span<const int> entries) {
  if (p != 2 && p != 3) {
    throw Error(ErrorKind::structural, "FpMatrix: modulus must be 2 or 3");
  }
  if (dim == 0 || dim > max_dim) {
    throw Error(ErrorKind::structural, "FpMatrix: unsupported dimension " + std::to_string(dim));
  }
  if (entries.size() != dim * dim) {
    throw Error(ErrorKind::structural, "FpMatrix: expected dim*dim entries");
  }
  p_ = static_cast<std::uint8_t>(p);
  dim_ = static_cast<std::uint8_t>(dim);
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = 0; c < dim; ++c) {
      entries_[r * max_dim + c] = reduce(entries[r * dim + c], p);
    }
  }
}

FpMatrix FpMatrix::identity(unsigned p, std::size_t dim) {
  std::vector<int> e(dim * dim, 0);
  for (std::size_t i = 0; i < dim; ++i) e[i * dim + i] = 1;
  return FpMatrix(p, dim, e);
}

std::vector<Residue> FpMatrix::residues() const {
  std::vector<Residue> out;
  out.reserve(dim_ * dim_);
  for (std::size_t r = 0; r < dim_; ++r) {
    for (std::size_t c = 0; c < dim_; ++c) out.push_back(at(r, c));
  }
  return out;
}

std::vector<Residue> FpMatrix::apply(std::span<const Residue> x) const {
  if (x.size() != dim_) throw Error(ErrorKind::structural, "FpMatrix::apply: length mismatch");
  std::vector<Residue> y(dim_);
  for (std::size_t r = 0; r < dim_; ++r) {
    unsigned acc = 0;
    for (std::size_t c = 0; c < dim_; ++c) acc += unsigned{at(r, c)} * x[c];
    y[r] = static_cast<Residue>(acc % p_);
  }
  return y;
}

unsigned FpMatrix::determinant() const {
  const unsigned p = p_;
  std::vector<unsigned> m(dim_ * dim_);
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = 0; c < dim_; ++c) m[r * dim_ + c] = at(r, c);
  unsigned det = 1;
  for (std::size_t col = 0; col < dim_; ++col) {
    std::size_t pivot = col;
    while (pivot < dim_ && m[pivot * dim_ + col] == 0) ++pivot;
    if (pivot == dim_) return 0;
    if (pivot != col) {
      for (std::size_t c = 0; c < dim_; ++c) std::swap(m[pivot * dim_ + c], m[col * dim_ + c]);
      det = (det * (p - 1)) % p;
    }
    const unsigned pv = m[col * dim_ + col];
    det = (det * pv) % p;
    const unsigned inv = inverse_mod(pv, p);
    for (std::size_t r = col + 1; r < dim_; ++r) {
      const unsigned factor = (m[r * dim_ + col] * inv) % p;
      if (factor == 0) continue;
      for (std::size_t c = col; c < dim_; ++c) {
        m[r * dim_ + c] = (m[r * dim_ + c] + p * p - factor * m[col * dim_ + c]) % p;
      }
    }
  }
  return det;
}

bool FpMatrix::is_identity() const noexcept {
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = 0; c < dim_; ++c)
      if (at(r, c) != (r == c ? 1 : 0)) return false;
  return true;
}

std::string FpMatrix::to_string() const {
  std::string s;
  for (std::size_t r = 0; r < dim_; ++r) {
    if (r) s += '/';
    for (std::size_t c = 0; c < dim_; ++c) s += static_cast<char>('0' + at(r, c));
  }
  return s;
}

FpMatrix compose(const FpMatrix& a, const FpMatrix& b) {
  if (a.p_ != b.p_ || a.dim_ != b.dim_) {
    throw Error(ErrorKind::structural, "compose: matrix modulus or dimension differ");
  }
  FpMatrix out;
  out.p_ = a.p_;
  out.dim_ = a.dim_;
  const std::size_t n = a.dim_;
  if (a.p_ == 2) {
    // Row r of the product is the XOR of the rows of b selected by row r of a.
    std::array<unsigned, FpMatrix::max_dim> rows{};
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t c = 0; c < n; ++c) rows[k] |= unsigned{b.entries_[k * FpMatrix::max_dim + c]} << c;
    }
    for (std::size_t r = 0; r < n; ++r) {
      unsigned acc = 0;
      for (std::size_t k = 0; k < n; ++k) acc ^= rows[k] & (0u - a.entries_[r * FpMatrix::max_dim + k]);
      for (std::size_t c = 0; c < n; ++c) out.entries_[r * FpMatrix::max_dim + c] = static_cast<Residue>((acc >> c) & 1u);
    }
    return out;
  }
  for (std::size_t r = 0; r < n; ++r) {
    const Residue* row = &a.entries_[r * FpMatrix::max_dim];
    for (std::size_t c = 0; c < n; ++c) {
      unsigned acc = 0;
      for (std::size_t k = 0; k < n; ++k) acc += unsigned{row[k]} * b.entries_[k * FpMatrix::max_dim + c];
      out.entries_[r * FpMatrix::max_dim + c] = static_cast<Residue>(acc % a.p_);
    }
  }
  return out;
}

FpMatrix inverse(const FpMatrix& g) {
  const std::size_t n = g.dim();
  const unsigned p = g.modulus();
  // Gauss-Jordan on [g | I].
  std::vector<unsigned> m(n * 2 * n, 0);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) m[r * 2 * n + c] = g.at(r, c);
    m[r * 2 * n + n + r] = 1;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot * 2 * n + col] == 0) ++pivot;
    if (pivot == n) throw Error(ErrorKind::structural, "inverse: singular matrix");
    for (std::size_t c = 0; c < 2 * n; ++c) std::swap(m[pivot * 2 * n + c], m[col * 2 * n + c]);
    const unsigned inv = inverse_mod(m[col * 2 * n + col], p);
    for (std::size_t c = 0; c < 2 * n; ++c) m[col * 2 * n + c] = (m[col * 2 * n + c] * inv) % p;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      const unsigned factor = m[r * 2 * n + col];
      if (factor == 0) continue;
      for (std::size_t c = 0; c < 2 * n; ++c) {
        m[r * 2 * n + c] = (m[r * 2 * n + c] + p * p - factor * m[col * 2 * n + c]) % p;
      }
    }
  }
  std::vector<int> e(n * n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) e[r * n + c] = static_cast<int>(m[r * 2 * n + n + c]);
  return FpMatrix(p, n, e);
}

FpMatrix identity_like(const FpMatrix& g) { return FpMatrix::identity(g.modulus(), g.dim()); }

std::size_t element_order(const FpMatrix& g, std::size_t cap) {
  FpMatrix power = g;
  for (std::size_t k = 1; k <= cap; ++k) {
    if (power.is_identity()) return k;
    power = compose(power, g);
  }
  throw Error(ErrorKind::order_overflow,
              "order-overflow: element order exceeds cap " + std::to_string(cap));
}

std::size_t hash_value(const FpMatrix& g) noexcept {
  std::size_t h = 1469598103934665603ull ^ g.modulus();
  for (std::size_t r = 0; r < g.dim(); ++r) {
    for (std::size_t c = 0; c < g.dim(); ++c) {
      h ^= g.at(r, c);
      h *= 1099511628211ull;
    }
  }
  return h;
}

}  // namespace fischer_lab::groups
