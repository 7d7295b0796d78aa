#include <random>

#include "doctest.h"
#include "frobkern/field.hpp"
#include "frobkern/verma.hpp"

using namespace fk;

namespace {

const RootSystem& a1() {
  static RootSystem rs = build_root_system(CartanSpec::of_type("A1"));
  return rs;
}

// Least s with some pairing of lambda + rho not divisible by p^s, found by
// walking s upward through the sets Psi^s.
DepthValue depth_by_definition(const Weight& lambda, std::int64_t p, const RootSystem& rs) {
  for (int s = 0; s < 64; ++s)
    if (psi_r(lambda, s, p, rs).size() != rs.positive_roots().size()) return DepthValue::finite(s);
  return DepthValue::infinite();
}

DepthValue sl2_depth_oracle(std::int64_t lambda, std::int64_t p) {
  std::int64_t x = lambda + 1;
  if (x == 0) return DepthValue::infinite();
  int s = 1;
  while (x % p == 0) {
    x /= p;
    ++s;
  }
  return DepthValue::finite(s);
}

// B_r(lambda) for SL(2): lambda or -lambda-2 modulo p^min(depth, r).
bool sl2_block_oracle(std::int64_t g, std::int64_t l, int r, std::int64_t p) {
  auto d = sl2_depth_oracle(l, p);
  std::int64_t m = ipow(p, d.neg_infinity ? r : std::min(d.value, r));
  return mod_floor(g - l, m) == 0 || mod_floor(g + l + 2, m) == 0;
}

}  // namespace

TEST_CASE("SL(2) depth agrees with the valuation oracle") {
  for (std::int64_t p : {3, 5, 7})
    for (std::int64_t l = -100; l <= 100; ++l) {
      CHECK(depth({l}, p, a1()) == sl2_depth_oracle(l, p));
      CHECK(depth({l}, p, a1()) == depth_by_definition({l}, p, a1()));
    }
}

TEST_CASE("rank two depth agrees with the definition") {
  std::mt19937_64 rng(31);
  for (auto t : {"A2", "B2", "G2", "A1xA1"}) {
    auto rs = build_root_system(CartanSpec::of_type(t));
    for (std::int64_t p : {3, 5, 7})
      for (int s = 0; s < 200; ++s) {
        Weight w = {static_cast<std::int64_t>(rng() % 401) - 200, static_cast<std::int64_t>(rng() % 401) - 200};
        if (s % 7 == 0) w = {p * p - 1, p - 1};
        CHECK(depth(w, p, rs) == depth_by_definition(w, p, rs));
        for (auto& g : rs.weyl_elements()) CHECK(depth(rs.dot_action(g, w), p, rs) == depth(w, p, rs));
      }
  }
}

TEST_CASE("depth examples") {
  for (std::int64_t p : {3, 5, 7})
    for (int r = 1; r <= 4; ++r)
      for (std::int64_t a = -12; a <= 12; ++a)
        if (a % p) CHECK(depth({ipow(p, r - 1) * a - 1}, p, a1()) == DepthValue::finite(r));
  CHECK(depth({-1}, 5, a1()).neg_infinity);
  CHECK(depth({-1, -1}, 5, build_root_system(CartanSpec::of_type("A2"))).neg_infinity);
  CHECK(depth({2}, 5, a1()) == DepthValue::finite(1));
  CHECK(depth({-1}, 5, a1()).str() == "-inf");
}

TEST_CASE("projectivity of Verma modules") {
  for (int r = 1; r <= 3; ++r) CHECK(is_projective_verma({ipow(5, r) - 1}, r, 5, a1()));
  CHECK_FALSE(is_projective_verma({0}, 1, 5, a1()));
  CHECK(is_projective_verma({-1}, 4, 5, a1()));
  CHECK_THROWS_AS(is_projective_verma({0, 0}, 1, 3, build_root_system(CartanSpec::of_type("G2"))), BadPrime);
  for (std::int64_t l = -60; l <= 60; ++l)
    for (int r = 1; r <= 3; ++r)
      if (is_projective_verma({l}, r, 3, a1()))
        for (int s = 1; s <= r; ++s) CHECK(is_projective_verma({l}, s, 3, a1()));
}

TEST_CASE("depth reduction") {
  auto red = depth_reduce({74}, 5, 3, a1());
  CHECK(red.d == 2);
  CHECK(red.mu == Weight{2});
  red = depth_reduce({5}, 3, 2, a1());
  CHECK(red.d == 1);
  CHECK(red.mu == Weight{1});
  CHECK_THROWS_AS(depth_reduce({2}, 5, 3, a1()), DepthOutOfRange);
  CHECK_THROWS_AS(depth_reduce({-1}, 5, 3, a1()), DepthOutOfRange);
  CHECK_THROWS_AS(depth_reduce({24}, 5, 1, a1()), DepthOutOfRange);
  auto a2 = build_root_system(CartanSpec::of_type("A2"));
  for (std::int64_t p : {3, 5})
    for (std::int64_t x = -40; x <= 40; ++x)
      for (std::int64_t y = -40; y <= 40; ++y) {
        Weight w = {x, y};
        auto d = depth(w, p, a2);
        if (d.neg_infinity || d.value < 2) continue;
        auto rr = depth_reduce(w, p, d.value, a2);
        CHECK(depth(rr.mu, p, a2) == DepthValue::finite(1));
        std::int64_t pd = ipow(p, rr.d);
        CHECK(add(scale(pd, rr.mu), scale(pd - 1, a2.rho())) == w);
      }
}

TEST_CASE("block membership matches the SL(2) residue oracle") {
  for (int r : {1, 2})
    for (std::int64_t l = -50; l <= 50; ++l)
      for (std::int64_t g = -50; g <= 50; ++g)
        CHECK(block_contains({g}, {l}, r, 5, a1()) == sl2_block_oracle(g, l, r, 5));
  CHECK(block_contains({1}, {2}, 1, 5, a1()));
  CHECK_FALSE(block_contains({0}, {2}, 1, 5, a1()));
}

static void check_equivalence(const std::vector<Weight>& window, int r, std::int64_t p, const RootSystem& rs) {
  const std::size_t n = window.size();
  std::vector<std::vector<char>> rel(n, std::vector<char>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) rel[i][j] = block_contains(window[j], window[i], r, p, rs);
  std::size_t bad_sym = 0, bad_trans = 0;
  for (std::size_t i = 0; i < n; ++i) {
    CHECK(rel[i][i]);
    for (std::size_t j = 0; j < n; ++j) {
      bad_sym += rel[i][j] != rel[j][i];
      if (rel[i][j])
        for (std::size_t k = 0; k < n; ++k) bad_trans += rel[j][k] && !rel[i][k];
    }
  }
  CHECK(bad_sym == 0);
  CHECK(bad_trans == 0);
}

TEST_CASE("block membership is an equivalence relation on a window") {
  std::vector<Weight> line;
  for (std::int64_t l = -50; l <= 50; ++l) line.push_back({l});
  for (int r : {1, 2}) check_equivalence(line, r, 5, a1());

  for (auto t : {"A2", "B2"}) {
    auto rs = build_root_system(CartanSpec::of_type(t));
    std::vector<Weight> square;
    for (std::int64_t x = -4; x <= 4; ++x)
      for (std::int64_t y = -4; y <= 4; ++y) square.push_back({x, y});
    for (int r : {1, 2}) check_equivalence(square, r, 3, rs);
  }
}

TEST_CASE("classification reports") {
  auto rep = classify({24}, 2, 5, a1());
  CHECK(rep.projective);
  CHECK(rep.ar_position == ArPosition::Projective);

  rep = classify({9}, 2, 5, a1());
  CHECK(rep.depth_value == DepthValue::finite(2));
  REQUIRE(rep.reduction.has_value());
  CHECK(rep.reduction->d == 1);
  CHECK(rep.reduction->mu == Weight{1});
  CHECK(rep.variety_dim == 1);
  CHECK(rep.ar_position == ArPosition::HomogeneousTube);

  auto a2 = build_root_system(CartanSpec::of_type("A2"));
  rep = classify({1, 1}, 1, 7, a2);
  CHECK(rep.depth_value == DepthValue::finite(1));
  CHECK(rep.variety_dim == 3);
  CHECK(rep.complexity == 3);
  CHECK(rep.ar_position == ArPosition::QuasiSimpleAInfty);

  auto j = to_json(classify({-1}, 2, 5, a1()));
  CHECK(j["depth"] == "-inf");
  CHECK(j["reduction"].is_null());
  CHECK(to_string(sl2_simple_ar_position(1, 5)) == "TildeA12Possible");
  CHECK(sl2_simple_ar_position(4, 5) == ArPosition::Projective);
}

TEST_CASE("classification invariants over SL(2) and SL(3) windows") {
  auto a2 = build_root_system(CartanSpec::of_type("A2"));
  for (std::int64_t p : {3, 5, 7})
    for (int r = 1; r <= 3; ++r) {
      std::vector<std::pair<Weight, const RootSystem*>> inputs;
      for (std::int64_t l = -30; l <= 130; ++l) inputs.push_back({{l}, &a1()});
      for (std::int64_t x = -6; x <= 12; x += 3)
        for (std::int64_t y = -6; y <= 12; y += 2) inputs.push_back({{x, y}, &a2});
      for (auto& [w, rs] : inputs) {
        auto rep = classify(w, r, p, *rs);
        CHECK(rep.projective == (rep.ar_position == ArPosition::Projective));
        if (rep.ar_position == ArPosition::HomogeneousTube) CHECK(rep.complexity == 1);
        bool in_range = !rep.depth_value.neg_infinity && rep.depth_value.value >= 2 && rep.depth_value.value <= r;
        CHECK(rep.reduction.has_value() == in_range);
        if (rep.variety_dim) CHECK(*rep.variety_dim >= rep.cx_lower_bound);
        if (rep.complexity) CHECK(*rep.complexity >= rep.cx_lower_bound);
        CHECK(rep.ar_position != ArPosition::TildeA12Possible);
      }
    }
}
