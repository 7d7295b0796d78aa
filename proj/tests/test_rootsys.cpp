#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "frobkern/field.hpp"
#include "frobkern/rootsys.hpp"

using namespace fk;

namespace {

RootSystem rs_of(const std::string& t) { return build_root_system(CartanSpec::of_type(t)); }

Weight random_weight(std::size_t n, std::mt19937_64& rng, int bound = 60) {
  Weight w(n);
  for (auto& x : w) x = static_cast<std::int64_t>(rng() % (2 * bound + 1)) - bound;
  return w;
}

// <lambda, beta^vee> through the invariant form: (alpha_i, alpha_i) = eps_i
// chosen so that eps_i a_ij = eps_j a_ji, then beta^vee = 2 beta / (beta, beta)
// and alpha_i = (eps_i / 2) alpha_i^vee.
std::int64_t pairing_oracle(const IntMatrix& a, const std::vector<std::int64_t>& c, const Weight& lambda) {
  const std::size_t n = a.size();
  std::vector<double> eps(n, 0);
  for (std::size_t s = 0; s < n; ++s) {
    if (eps[s] != 0) continue;
    eps[s] = 1;
    for (bool changed = true; changed;) {
      changed = false;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (eps[i] != 0 && eps[j] == 0 && a[i][j] != 0) {
            eps[j] = eps[i] * a[i][j] / a[j][i];
            changed = true;
          }
    }
  }
  double bb = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) bb += c[i] * c[j] * a[i][j] * eps[i] / 2.0;
  double sum = 0;
  for (std::size_t i = 0; i < n; ++i) sum += c[i] * eps[i] / bb * lambda[i];
  return static_cast<std::int64_t>(std::llround(sum));
}

}  // namespace

TEST_CASE("root and Weyl group sizes of the classical types") {
  std::map<std::string, std::pair<std::size_t, std::size_t>> expected = {
      {"A1", {1, 2}},   {"A2", {3, 6}},    {"B2", {4, 8}},      {"G2", {6, 12}},   {"A3", {6, 24}},
      {"B3", {9, 48}},  {"C3", {9, 48}},   {"D4", {12, 192}},   {"F4", {24, 1152}}, {"A1xA1", {2, 4}},
      {"E6", {36, 51840}}};
  for (auto& [t, sizes] : expected) {
    auto rs = rs_of(t);
    CHECK_MESSAGE(rs.positive_roots().size() == sizes.first, t);
    CHECK_MESSAGE(rs.weyl_elements().size() == sizes.second, t);
  }
}

TEST_CASE("oversized Weyl groups and infinite types are rejected") {
  CHECK_THROWS_AS(rs_of("E7"), NotFiniteType);
  CHECK_THROWS_AS(build_root_system(CartanSpec::parse("2,-3;-3,2")), NotFiniteType);
  CHECK_THROWS_AS(build_root_system(CartanSpec::parse("2,-2;-2,2")), NotFiniteType);
  CHECK_THROWS_AS(build_root_system(CartanSpec::parse("2,1;1,2")), NotFiniteType);
  CHECK_THROWS_AS(CartanSpec::parse("2,-1;-1"), ParseError);
  CHECK_THROWS_AS(CartanSpec::parse("Q2"), std::exception);
}

TEST_CASE("parse accepts type names and matrix rows") {
  auto a = CartanSpec::parse("type=A2");
  auto b = CartanSpec::parse("2,-1;-1,2");
  CHECK(a.matrix == b.matrix);
  CHECK(CartanSpec::parse("A1xA1").matrix == IntMatrix{{2, 0}, {0, 2}});
}

TEST_CASE("coxeter numbers and rho") {
  std::map<std::string, int> h = {{"A1", 2}, {"A2", 3}, {"A3", 4}, {"B2", 4}, {"G2", 6}, {"B3", 6}, {"C3", 6}, {"D4", 6}, {"F4", 12}};
  for (auto& [t, want] : h) {
    auto rs = rs_of(t);
    CHECK_MESSAGE(rs.coxeter_number() == want, t);
    std::int64_t best = 0;
    for (std::size_t k = 0; k < rs.positive_roots().size(); ++k) {
      auto& c = rs.positive_roots()[k].coroot;
      bool simple = std::count(c.begin(), c.end(), 0) == static_cast<long>(c.size()) - 1;
      if (simple) CHECK(rs.pairing(rs.rho(), k) == 1);
      best = std::max(best, rs.pairing(rs.rho(), k));
    }
    CHECK_MESSAGE(best == want - 1, t);
  }
}

TEST_CASE("pairings agree with the invariant form") {
  std::mt19937_64 rng(21);
  for (auto t : {"A2", "B2", "G2", "B3", "C3", "F4"}) {
    auto rs = rs_of(t);
    for (int s = 0; s < 10; ++s) {
      auto w = random_weight(rs.rank(), rng);
      for (std::size_t k = 0; k < rs.positive_roots().size(); ++k)
        CHECK(rs.pairing(w, k) == pairing_oracle(rs.cartan().matrix, rs.positive_roots()[k].coeffs, w));
    }
  }
}

TEST_CASE("simple reflections permute the roots") {
  for (auto t : {"A3", "B2", "G2", "C3", "D4"}) {
    auto rs = rs_of(t);
    std::set<std::vector<std::int64_t>> roots;
    for (auto& r : rs.positive_roots()) roots.insert(r.coeffs);
    const auto& a = rs.cartan().matrix;
    for (auto& r : rs.positive_roots())
      for (std::size_t i = 0; i < rs.rank(); ++i) {
        auto c = r.coeffs;
        std::int64_t s = 0;
        for (std::size_t j = 0; j < rs.rank(); ++j) s += a[i][j] * c[j];
        c[i] -= s;
        auto neg = c;
        for (auto& x : neg) x = -x;
        CHECK((roots.count(c) || roots.count(neg)));
      }
  }
}

TEST_CASE("psi chain and regularity under the dot action") {
  std::mt19937_64 rng(22);
  for (auto t : {"A1", "A2", "B2", "G2"}) {
    auto rs = rs_of(t);
    for (std::int64_t p : {3, 5, 7}) {
      if (!is_good_prime(p, rs)) continue;
      for (int s = 0; s < 30; ++s) {
        auto w = random_weight(rs.rank(), rng, 200);
        for (int r = 0; r < 4; ++r) {
          auto lo = psi_r(w, r, p, rs), hi = psi_r(w, r + 1, p, rs);
          CHECK(std::includes(lo.begin(), lo.end(), hi.begin(), hi.end()));
          CHECK(is_pr_regular(w, r, p, rs) == lo.empty());
          for (auto& g : rs.weyl_elements()) CHECK(is_pr_regular(rs.dot_action(g, w), r, p, rs) == lo.empty());
        }
      }
    }
  }
  CHECK(psi_r({0}, 0, 5, rs_of("A1")).size() == 1);
}

TEST_CASE("restricted decomposition recomposes") {
  std::mt19937_64 rng(23);
  for (std::int64_t p : {3, 5})
    for (int r = 1; r <= 3; ++r)
      for (int s = 0; s < 50; ++s) {
        auto w = random_weight(2, rng, 500);
        auto [l0, l1] = restricted_decompose(w, r, p);
        CHECK(add(l0, scale(ipow(p, r), l1)) == w);
        for (auto x : l0) CHECK((x >= 0 && x < ipow(p, r)));
      }
}

TEST_CASE("good primes and the fundamental alcove") {
  CHECK(is_good_prime(3, rs_of("A2")));
  CHECK_FALSE(is_good_prime(3, rs_of("G2")));
  CHECK(is_good_prime(5, rs_of("G2")));
  CHECK(is_good_prime(3, rs_of("A1")));
  CHECK(in_alcove_c0({0, 0}, 7, rs_of("A2")));
  CHECK_FALSE(in_alcove_c0({3, 3}, 7, rs_of("A2")));
  CHECK_FALSE(in_alcove_c0({-1}, 5, rs_of("A1")));
}

TEST_CASE("dot action fixes -rho") {
  auto rs = rs_of("B2");
  Weight m = scale(-1, rs.rho());
  for (auto& g : rs.weyl_elements()) CHECK(rs.dot_action(g, m) == m);
  CHECK(parse_weight("3,-2") == Weight{3, -2});
  CHECK(to_string(Weight{1, -1}) == "1,-1");
}
