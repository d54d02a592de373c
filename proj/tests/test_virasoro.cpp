#include <doctest.h>

#include <fstream>
#include <set>

#include <nlohmann/json.hpp>

#include "fischer_lab/error.hpp"
#include "fischer_lab/matsuo/rational.hpp"
#include "fischer_lab/virasoro/virasoro.hpp"

using namespace fischer_lab;
using virasoro::Label;

namespace {

nlohmann::json golden(int m) {
  std::ifstream in(std::string(FISCHER_LAB_GOLDEN_DIR) + "/virasoro_m" + std::to_string(m) + ".json");
  REQUIRE(in.good());
  return nlohmann::json::parse(in);
}

std::set<Rational> weights(int m) {
  std::set<Rational> out;
  for (const auto& l : virasoro::irreducibles(m)) out.insert(virasoro::weight(l));
  return out;
}

}  // namespace

TEST_CASE("central charges") {
  CHECK(virasoro::central_charge(1) == Rational(1, 2));
  CHECK(virasoro::central_charge(2) == Rational(7, 10));
  CHECK(virasoro::central_charge(3) == Rational(4, 5));
  CHECK_THROWS_AS(virasoro::central_charge(0), Error);
}

TEST_CASE("weight sets") {
  CHECK(weights(1) == std::set<Rational>{Rational(0), Rational(1, 2), Rational(1, 16)});
  CHECK_FALSE(weights(2).contains(Rational(7, 10)));
  CHECK_FALSE(virasoro::weight_exists(2, virasoro::central_charge(2)));
  for (const auto& h : {Rational(0), Rational(3), Rational(2, 5), Rational(7, 5), Rational(2, 3), Rational(1, 15)}) {
    CHECK(weights(3).contains(h));
  }
  for (const auto& mod : virasoro::w3_modules()) {
    for (const auto& h : mod.weights) CHECK(virasoro::weight_exists(3, h));
  }
  CHECK(virasoro::irreducibles(3).size() == 10);
  CHECK_THROWS_AS(virasoro::weight(1, 3, 1), Error);
}

TEST_CASE("labels are canonical and the weight is symmetric") {
  for (int m = 1; m <= 6; ++m) {
    for (int r = 1; r <= m + 1; ++r) {
      for (int s = 1; s <= m + 2; ++s) {
        const auto l = virasoro::canonical(m, r, s);
        CHECK(l.s <= l.r);
        CHECK(virasoro::weight(l) == virasoro::weight(m, r, s));
        CHECK(virasoro::weight(m, r, s) == virasoro::weight(m, m + 2 - r, m + 3 - s));
      }
    }
  }
}

TEST_CASE("golden fixtures") {
  for (int m = 1; m <= 4; ++m) {
    CAPTURE(m);
    const auto g = golden(m);
    CHECK(g["central_charge"] == virasoro::central_charge(m).to_string());
    const auto labels = virasoro::irreducibles(m);
    REQUIRE(g["labels"].size() == labels.size());
    for (std::size_t i = 0; i < labels.size(); ++i) {
      const auto& row = g["labels"][i];
      const auto& l = labels[i];
      CHECK(row["label"] == l.to_string());
      CHECK(row["weight"] == virasoro::weight(l).to_string());
      CHECK(row["tau"] == virasoro::tau_sign(l));
      CHECK(row["in_sigma_sector"] == virasoro::in_sigma_sector(l));
      if (virasoro::in_sigma_sector(l)) CHECK(row["sigma"] == virasoro::sigma_sign(l));
    }
    std::size_t k = 0;
    for (std::size_t i = 0; i < labels.size(); ++i) {
      for (std::size_t j = i; j < labels.size(); ++j, ++k) {
        const auto& row = g["fusion"][k];
        REQUIRE(row["left"] == labels[i].to_string());
        REQUIRE(row["right"] == labels[j].to_string());
        std::vector<std::string> got;
        for (const auto& c : virasoro::fuse(labels[i], labels[j])) got.push_back(c.to_string());
        CHECK(row["result"].get<std::vector<std::string>>() == got);
      }
    }
    CHECK(k == g["fusion"].size());
  }
}

TEST_CASE("Ising fusion") {
  const Label sigma{1, 2, 2};
  const auto out = virasoro::fuse(sigma, sigma);
  CHECK(out == std::vector<Label>{{1, 1, 1}, {1, 2, 1}});
  for (const auto& l : out) CHECK(virasoro::tau_sign(l) == 1);
  CHECK(virasoro::tau_sign(sigma) == -1);
  CHECK_THROWS_AS(virasoro::fuse(sigma, Label{2, 1, 1}), Error);
}

TEST_CASE("property: fusion is commutative, unital and tau-graded for m <= 6") {
  for (int m = 1; m <= 6; ++m) {
    CAPTURE(m);
    const auto labels = virasoro::irreducibles(m);
    const Label unit{m, 1, 1};
    for (const auto& a : labels) {
      CHECK(virasoro::fuse(unit, a) == std::vector<Label>{a});
      for (const auto& b : labels) {
        const auto ab = virasoro::fuse(a, b);
        CHECK(ab == virasoro::fuse(b, a));
        CHECK_FALSE(ab.empty());
        for (const auto& c : ab) CHECK(virasoro::tau_sign(c) == virasoro::tau_sign(a) * virasoro::tau_sign(b));
      }
    }
  }
}

TEST_CASE("property: P_m is fusion-closed with multiplicative sigma for m <= 6") {
  for (int m = 1; m <= 6; ++m) {
    CAPTURE(m);
    const auto p = virasoro::sigma_sector(m);
    CHECK(p.size() == static_cast<std::size_t>(m % 2 == 0 ? m + 2 : m + 1));
    for (const auto& a : p) {
      CHECK(virasoro::tau_sign(a) == 1);
      for (const auto& b : p) {
        for (const auto& c : virasoro::fuse(a, b)) {
          REQUIRE(virasoro::in_sigma_sector(c));
          CHECK(virasoro::sigma_sign(c) == virasoro::sigma_sign(a) * virasoro::sigma_sign(b));
        }
      }
    }
    for (const auto& l : virasoro::irreducibles(m)) {
      if (!virasoro::in_sigma_sector(l)) CHECK_THROWS_AS(virasoro::sigma_sign(l), Error);
    }
  }
}

TEST_CASE("Sakuma table") {
  const std::vector<std::pair<const char*, int>> expected = {{"1A", 256}, {"2A", 32}, {"3A", 13}, {"4A", 8},
                                                             {"5A", 6},   {"6A", 5},  {"4B", 4},  {"2B", 0},
                                                             {"3C", 4}};
  REQUIRE(virasoro::sakuma_table().size() == expected.size());
  for (const auto& [tag, x] : expected) {
    CAPTURE(tag);
    const auto& r = virasoro::sakuma_lookup(tag);
    CHECK(r.type == tag);
    CHECK(r.inner_product() == Rational(x, 1024));
  }
  CHECK(virasoro::sakuma_lookup("3A").inner_product() == Rational(13, 1024));
  CHECK(virasoro::sakuma_lookup("2A").inner_product() == Rational(1, 32));
  CHECK(virasoro::sakuma_lookup("2A").griess_dim == 3);
  CHECK(virasoro::sakuma_lookup("2B").miyamoto_kind == virasoro::MiyamotoKind::sigma);
  CHECK(virasoro::sakuma_lookup("3A").miyamoto_kind == virasoro::MiyamotoKind::tau);
  CHECK_THROWS_AS(virasoro::sakuma_lookup("7A"), Error);

  const auto amb = virasoro::sakuma_lookup(Rational(1, 256));
  CHECK(amb.ambiguous());
  std::set<std::string_view> types;
  for (const auto* r : amb.candidates) types.insert(r->type);
  CHECK(types == std::set<std::string_view>{"4B", "3C"});
  CHECK_FALSE(virasoro::sakuma_lookup(Rational(13, 1024)).ambiguous());
  CHECK_THROWS_AS(virasoro::sakuma_lookup(Rational(1, 3)), Error);
}

TEST_CASE("W3 modules") {
  const auto& mods = virasoro::w3_modules();
  CHECK(mods.size() == 6);
  int total = 0;
  for (const auto& m : mods) total += m.zeta_power;
  CHECK(total == 0);
}
