#include "frobkern/verma.hpp"

#include <algorithm>
#include <climits>

#include "frobkern/field.hpp"
#include "frobkern/lattice.hpp"

namespace fk {

DepthValue depth(const Weight& lambda, std::int64_t p, const RootSystem& rs) {
  Weight lr = add(lambda, rs.rho());
  int best = INT_MAX;
  for (std::size_t k = 0; k < rs.positive_roots().size(); ++k) {
    auto v = rs.pairing(lr, k);
    if (v != 0) best = std::min(best, valuation(v, p));
  }
  if (best == INT_MAX) return DepthValue::infinite();
  return DepthValue::finite(best + 1);
}

bool is_projective_verma(const Weight& lambda, int r, std::int64_t p, const RootSystem& rs) {
  if (!is_good_prime(p, rs)) throw BadPrime("p = " + std::to_string(p) + " is not good for this root system");
  return psi_r(lambda, r, p, rs).size() == rs.positive_roots().size();
}

Reduction depth_reduce(const Weight& lambda, std::int64_t p, int r, const RootSystem& rs) {
  DepthValue dv = depth(lambda, p, rs);
  if (dv.neg_infinity) throw DepthOutOfRange("depth is -inf");
  if (dv.value < 2 || dv.value > r)
    throw DepthOutOfRange("depth " + std::to_string(dv.value) + " outside [2, " + std::to_string(r) + "]");
  Reduction red;
  red.d = dv.value - 1;
  const std::int64_t pd = ipow(p, red.d);
  Weight shifted = sub(lambda, scale(pd - 1, rs.rho()));
  red.mu.resize(lambda.size());
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    if (shifted[i] % pd != 0) throw std::logic_error("depth reduction: coordinate not divisible");
    red.mu[i] = shifted[i] / pd;
  }
  DepthValue dm = depth(red.mu, p, rs);
  if (dm.neg_infinity || dm.value != 1) throw std::logic_error("depth reduction: mu does not have depth 1");
  return red;
}

bool block_contains(const Weight& gamma, const Weight& lambda, int r, std::int64_t p, const RootSystem& rs) {
  DepthValue dv = depth(lambda, p, rs);
  const std::size_t n = rs.rank();
  std::vector<std::vector<std::int64_t>> gens;
  const std::int64_t pr = ipow(p, r);
  if (!dv.neg_infinity) {
    const std::int64_t pd = ipow(p, std::min(dv.value, r));
    for (std::size_t j = 0; j < n; ++j) gens.push_back(scale(pd, rs.simple_root(j)));
  }
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::int64_t> e(n, 0);
    e[j] = pr;
    gens.push_back(e);
  }
  Lattice lat(n, gens);
  for (auto& w : rs.weyl_elements())
    if (lat.contains(sub(gamma, rs.dot_action(w, lambda)))) return true;
  return false;
}

std::string to_string(ArPosition a) {
  switch (a) {
    case ArPosition::Projective: return "Projective";
    case ArPosition::QuasiSimpleAInfty: return "QuasiSimpleAInfty";
    case ArPosition::HomogeneousTube: return "HomogeneousTube";
    case ArPosition::TildeA12Possible: return "TildeA12Possible";
  }
  return "?";
}

bool is_type_a1(const RootSystem& rs) { return rs.rank() == 1; }

bool is_type_a2(const RootSystem& rs) {
  return rs.rank() == 2 && rs.cartan().matrix[0][1] == -1 && rs.cartan().matrix[1][0] == -1;
}

VermaReport classify(const Weight& lambda, int r, std::int64_t p, const RootSystem& rs) {
  if (p < 3 || !is_prime(p)) throw std::invalid_argument("p must be a prime >= 3");
  if (r < 1) throw std::invalid_argument("r must be >= 1");
  VermaReport rep;
  rep.lambda = lambda;
  rep.r = r;
  rep.p = p;
  rep.depth_value = depth(lambda, p, rs);
  rep.notes.push_back("depth: least s such that some <lambda+rho, alpha^vee> is not divisible by p^s; -inf when all vanish");
  rep.projective = is_projective_verma(lambda, r, p, rs);
  rep.notes.push_back(
      "projective: for p good, Z_r(lambda) is projective iff every <lambda+rho, alpha^vee> lies in p^r Z");

  const bool finite = !rep.depth_value.neg_infinity;
  const int dep = rep.depth_value.value;
  if (finite && dep >= 2 && dep <= r) {
    rep.reduction = depth_reduce(lambda, p, r, rs);
    rep.notes.push_back(
        "reduction: lambda = p^d mu + (p^d - 1) rho with depth(mu) = 1, Z_r(lambda) ~ Z_{r-d}(mu)^[d] (x) St_d, "
        "and the support varieties of Z_r(lambda) and Z_{r-d}(mu) agree");
  }
  if (rep.projective) {
    rep.cx_lower_bound = 0;
  } else {
    rep.cx_lower_bound = r - (dep - 1);
    rep.notes.push_back("cx_lower_bound: cx(Z_r(lambda)) >= r - d where depth(lambda) = d + 1");
  }

  if (is_type_a1(rs)) {
    rep.variety_dim = rep.projective ? 0 : r + 1 - dep;
    rep.complexity = rep.variety_dim;
    rep.variety_irreducible = true;
    rep.notes.push_back(rep.projective ? "variety_dim: projective modules have support variety {0}"
                                       : "variety_dim: for SL(2), V(Z_r(lambda)) ~ k^(r+1-depth(lambda))");
  } else if (is_type_a2(rs)) {
    if (rep.projective) {
      rep.variety_dim = 0;
      rep.complexity = 0;
      rep.notes.push_back("variety_dim: projective modules have support variety {0}");
    } else if (p >= rs.coxeter_number() && is_pr_regular(lambda, dep, p, rs)) {
      rep.variety_dim = 2 * (r - dep) + 3;
      rep.complexity = rep.variety_dim;
      rep.variety_irreducible = true;
      rep.variety_verifiable = false;
      rep.notes.push_back(
          "variety_dim: for SL(3), p >= h and lambda p^depth-regular, V(Z_r(lambda)) ~ V_{U_(r+1-depth)}(k), "
          "the Heisenberg commuting variety of dimension 2(r-depth)+3 (irreducible)");
      rep.notes.push_back("variety_dim: formula only, not verified by module computation");
    }
  }

  if (rep.projective) {
    rep.ar_position = ArPosition::Projective;
  } else if (rep.complexity && *rep.complexity == 1) {
    rep.ar_position = ArPosition::HomogeneousTube;
    rep.notes.push_back("ar_position: complexity 1 places Z_r(lambda) in a homogeneous tube Z[A_inf]/(tau)");
  } else {
    rep.ar_position = ArPosition::QuasiSimpleAInfty;
    rep.notes.push_back(
        "ar_position: a non-projective Z_r(lambda) is quasi-simple in a Z[A_inf] component, and the middle term "
        "of the almost split sequence ending in it is indecomposable");
  }
  return rep;
}

nlohmann::json to_json(const VermaReport& rep) {
  nlohmann::json j;
  j["lambda"] = rep.lambda;
  j["r"] = rep.r;
  j["p"] = rep.p;
  if (rep.depth_value.neg_infinity)
    j["depth"] = "-inf";
  else
    j["depth"] = rep.depth_value.value;
  j["projective"] = rep.projective;
  if (rep.reduction)
    j["reduction"] = {{"d", rep.reduction->d}, {"mu", rep.reduction->mu}};
  else
    j["reduction"] = nullptr;
  j["cx_lower_bound"] = rep.cx_lower_bound;
  j["variety_dim"] = rep.variety_dim ? nlohmann::json(*rep.variety_dim) : nlohmann::json(nullptr);
  j["complexity"] = rep.complexity ? nlohmann::json(*rep.complexity) : nlohmann::json(nullptr);
  j["variety_irreducible"] =
      rep.variety_irreducible ? nlohmann::json(*rep.variety_irreducible) : nlohmann::json(nullptr);
  j["formula_only"] = !rep.variety_verifiable;
  j["ar_position"] = to_string(rep.ar_position);
  j["notes"] = rep.notes;
  return j;
}

ArPosition sl2_simple_ar_position(std::int64_t m, std::int64_t p) {
  // L(p-1) is the Steinberg module; every other simple G_1-module has a
  // two-dimensional support variety.
  return mod_floor(m, p) == p - 1 ? ArPosition::Projective : ArPosition::TildeA12Possible;
}

}  // namespace fk
