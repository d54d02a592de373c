#include "fischer_lab/virasoro/virasoro.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

#include "fischer_lab/error.hpp"

namespace fischer_lab::virasoro {

namespace {

void check_m(int m) {
  if (m < 1) throw Error(ErrorKind::domain, "series index m must be >= 1, got " + std::to_string(m));
}

void check_range(int m, int r, int s) {
  check_m(m);
  if (r < 1 || r > m + 1 || s < 1 || s > m + 2) {
    throw Error(ErrorKind::domain, "label (" + std::to_string(r) + "," + std::to_string(s) +
                                       ") out of range for m = " + std::to_string(m));
  }
}

int parity_sign(int k) { return k % 2 == 0 ? 1 : -1; }

Rational raw_weight(long m, long r, long s) {
  const long d = r * (m + 3) - s * (m + 2);
  return Rational(d * d - 1, 4 * (m + 2) * (m + 3));
}

int raw_tau_sign(int m, int r, int s) { return m % 2 == 0 ? parity_sign(r + 1) : parity_sign(s + 1); }

}  // namespace

std::string Label::to_string() const { return "(" + std::to_string(r) + "," + std::to_string(s) + ")"; }

Rational central_charge(int m) {
  check_m(m);
  return Rational(1) - Rational(6, static_cast<long>(m + 2) * (m + 3));
}

Rational weight(int m, int r, int s) {
  check_range(m, r, s);
  const Rational h = raw_weight(m, r, s);
  if (h != raw_weight(m, m + 2 - r, m + 3 - s)) {
    throw Error(ErrorKind::internal, "weight: h_{r,s} != h_{m+2-r,m+3-s}");
  }
  return h;
}

Rational weight(const Label& l) { return weight(l.m, l.r, l.s); }

Label canonical(int m, int r, int s) {
  check_range(m, r, s);
  if (s <= r) return {m, r, s};
  return {m, m + 2 - r, m + 3 - s};
}

std::vector<Label> irreducibles(int m) {
  check_m(m);
  std::vector<Label> out;
  for (int r = 1; r <= m + 1; ++r) {
    for (int s = 1; s <= r; ++s) out.push_back({m, r, s});
  }
  return out;
}

std::vector<Label> fuse(const Label& a, const Label& b) {
  if (a.m != b.m) throw Error(ErrorKind::domain, "fuse: labels from different series");
  const int m = a.m;
  check_range(m, a.r, a.s);
  check_range(m, b.r, b.s);
  const int I = std::min({a.r, b.r, m + 2 - a.r, m + 2 - b.r});
  const int J = std::min({a.s, b.s, m + 3 - a.s, m + 3 - b.s});
  std::set<Label> out;
  for (int i = 1; i <= I; ++i) {
    for (int j = 1; j <= J; ++j) {
      out.insert(canonical(m, std::abs(a.r - b.r) + 2 * i - 1, std::abs(a.s - b.s) + 2 * j - 1));
    }
  }
  return {out.begin(), out.end()};
}

int tau_sign(const Label& l) {
  check_range(l.m, l.r, l.s);
  const int sign = raw_tau_sign(l.m, l.r, l.s);
  if (sign != raw_tau_sign(l.m, l.m + 2 - l.r, l.m + 3 - l.s)) {
    throw Error(ErrorKind::internal, "tau_sign differs on the two representatives of " + l.to_string());
  }
  return sign;
}

std::vector<Label> sigma_sector(int m) {
  check_m(m);
  std::set<Label> out;
  if (m % 2 == 0) {
    for (int s = 1; s <= m + 2; ++s) out.insert(canonical(m, 1, s));
  } else {
    for (int r = 1; r <= m + 1; ++r) out.insert(canonical(m, r, 1));
  }
  return {out.begin(), out.end()};
}

bool in_sigma_sector(const Label& l) {
  const auto p = sigma_sector(l.m);
  return std::binary_search(p.begin(), p.end(), canonical(l.m, l.r, l.s));
}

int sigma_sign(const Label& l) {
  const Label c = canonical(l.m, l.r, l.s);
  const int m = c.m;
  if (m % 2 == 0) {
    // h_{1,s} has canonical form (1,1) or (m+1, m+3−s).
    if (c.r == 1) return parity_sign(c.s + 1);
    if (c.r == m + 1) return parity_sign(m + 3 - c.s + 1);
  } else {
    if (c.s == 1) return parity_sign(c.r + 1);
  }
  throw Error(ErrorKind::domain, "label " + c.to_string() + " is outside P_" + std::to_string(m));
}

bool weight_exists(int m, const Rational& h) {
  const auto labels = irreducibles(m);
  return std::any_of(labels.begin(), labels.end(), [&](const Label& l) { return weight(l) == h; });
}

std::string_view to_string(MiyamotoKind k) { return k == MiyamotoKind::sigma ? "sigma" : "tau"; }

const std::array<SakumaRecord, 9>& sakuma_table() {
  static const std::array<SakumaRecord, 9> table{{
      {"1A", 1, 256, 1, 1, MiyamotoKind::sigma},
      {"2A", 2, 32, 3, 3, MiyamotoKind::sigma},
      {"3A", 3, 13, 4, 3, MiyamotoKind::tau},
      {"4A", 4, 8, 5, 4, MiyamotoKind::tau},
      {"5A", 5, 6, 6, 5, MiyamotoKind::tau},
      {"6A", 6, 5, 8, 7, MiyamotoKind::tau},
      {"4B", 4, 4, 5, 5, MiyamotoKind::tau},
      {"2B", 2, 0, 2, 2, MiyamotoKind::sigma},
      {"3C", 3, 4, 3, 3, MiyamotoKind::tau},
  }};
  return table;
}

const SakumaRecord& sakuma_lookup(std::string_view type) {
  for (const auto& row : sakuma_table()) {
    if (row.type == type) return row;
  }
  throw Error(ErrorKind::not_in_table, "not-in-table: unknown dihedral type '" + std::string(type) + "'");
}

SakumaMatch sakuma_lookup(const Rational& inner_product) {
  SakumaMatch out;
  for (const auto& row : sakuma_table()) {
    if (row.inner_product() == inner_product) out.candidates.push_back(&row);
  }
  if (out.candidates.empty()) {
    throw Error(ErrorKind::not_in_table, "not-in-table: no dihedral type has (e|f) = " + inner_product.to_string());
  }
  return out;
}

const std::vector<W3Module>& w3_modules() {
  static const std::vector<W3Module> modules{
      {"W", {Rational(0), Rational(3)}, 0},
      {"L(2/5+7/5)", {Rational(2, 5), Rational(7, 5)}, 0},
      {"L(2/3)+", {Rational(2, 3)}, 1},
      {"L(2/3)-", {Rational(2, 3)}, -1},
      {"L(1/15)+", {Rational(1, 15)}, 1},
      {"L(1/15)-", {Rational(1, 15)}, -1},
  };
  return modules;
}

}  // namespace fischer_lab::virasoro
