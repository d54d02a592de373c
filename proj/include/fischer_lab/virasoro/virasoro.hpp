#pragma once

#include <array>
#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "fischer_lab/matsuo/rational.hpp"

namespace fischer_lab::virasoro {

/// Irreducible L(c_m, h_{r,s}) of the unitary series. Labels produced by
/// this module are canonical: of the pair (r, s) ~ (m+2−r, m+3−s) the one
/// with s <= r is kept, so canonical labels are 1 <= s <= r <= m+1.
struct Label {
  int m = 1;
  int r = 1;
  int s = 1;

  friend auto operator<=>(const Label&, const Label&) = default;

  /// "(r,s)".
  std::string to_string() const;
};

/// c_m = 1 − 6/((m+2)(m+3)); Error(domain) for m < 1.
Rational central_charge(int m);

/// h_{r,s} = ((r(m+3) − s(m+2))^2 − 1)/(4(m+2)(m+3)) for 1 <= r <= m+1,
/// 1 <= s <= m+2; Error(domain) otherwise.
Rational weight(int m, int r, int s);
Rational weight(const Label& l);

/// Canonical representative of (r, s); Error(domain) if out of range.
Label canonical(int m, int r, int s);

/// All canonical labels, sorted; (m+1)(m+2)/2 of them.
std::vector<Label> irreducibles(int m);

/// Fusion product as a sorted set of canonical labels. Error(domain) if the
/// series indices differ.
std::vector<Label> fuse(const Label& a, const Label& b);

/// (−1)^{r+1} for m even, (−1)^{s+1} for m odd. Checked to agree on both
/// representatives of the label.
int tau_sign(const Label& l);

/// P_m: h_{1,s} (1 <= s <= m+2) for m even, h_{r,1} (1 <= r <= m+1) for m
/// odd, as sorted canonical labels.
std::vector<Label> sigma_sector(int m);
bool in_sigma_sector(const Label& l);

/// (−1)^{s+1} on h_{1,s} for m even, (−1)^{r+1} on h_{r,1} for m odd;
/// Error(domain) outside P_m.
int sigma_sign(const Label& l);

/// Whether h is the weight of some irreducible of the series.
bool weight_exists(int m, const Rational& h);

enum class MiyamotoKind { sigma, tau };

std::string_view to_string(MiyamotoKind k);

/// One row of the dihedral-subalgebra table for two Ising vectors e, f.
struct SakumaRecord {
  std::string_view type;
  int max_tau_order;
  int inner_product_times_1024;  // 2^10 (e|f)
  int griess_dim;
  int ising_count;
  MiyamotoKind miyamoto_kind;

  Rational inner_product() const { return Rational(inner_product_times_1024, 1024); }
};

const std::array<SakumaRecord, 9>& sakuma_table();

/// Row for a type tag such as "3A"; Error(not_in_table) if unknown.
const SakumaRecord& sakuma_lookup(std::string_view type);

/// Rows whose (e|f) equals the given value. More than one row means the
/// value does not determine the type (2^{-8}: 4B or 3C).
struct SakumaMatch {
  std::vector<const SakumaRecord*> candidates;

  bool ambiguous() const noexcept { return candidates.size() > 1; }
};

/// Error(not_in_table) if no row matches.
SakumaMatch sakuma_lookup(const Rational& inner_product);

/// Irreducible modules of the W_3 algebra at c = 4/5 with their Virasoro
/// weights and the power of ζ = e^{2πi/3} assigned by ξ. Static data.
struct W3Module {
  std::string_view name;
  std::vector<Rational> weights;
  int zeta_power;  // 0, 1 or −1
};

const std::vector<W3Module>& w3_modules();

}  // namespace fischer_lab::virasoro
