#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "frobkern/modalg.hpp"
#include "frobkern/module.hpp"
#include "json.hpp"

// SL(2) Frobenius kernels: r = 1 (restricted enveloping algebra, labels e,f,h)
// and r = 2 (hyperalgebra, labels e,f,h,e_p,f_p with e_p = e^(p), f_p = f^(p)).
namespace fk::sl2 {

class UnsupportedPrime : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DimensionNotDivisible : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

SchemaPtr schema(int p, int r);

FpModule build_simple(int m, int p);
// L_2(lambda) = L(lambda_0) (x) L(lambda_1)^[1] for lambda = lambda_0 + p lambda_1.
FpModule build_simple_r2(int lambda, int p);
FpModule build_verma_r1(std::int64_t lambda, int p);
FpModule build_verma_r2(std::int64_t lambda, int p);
// St_r as a module over the r-th kernel.
FpModule steinberg(int p, int r);
// St_1 regarded as an r = 2 module (e_p, f_p act as zero).
FpModule steinberg1_r2(int p);

FpModule frobenius_twist(const FpModule& m);
FpModule restrict_to_r1(const FpModule& m);
FpModule tensor(const FpModule& m, const FpModule& n);

// Divided power x^(i) for i < p computed from the action of x.
FpMatrix divided_power(const FpMatrix& x, int i);

// Dist(G_r) (x)_{Dist(T_r)} k_lambda, basis f^(i) e^(j) v, index i * p^r + j.
FpModule torus_induced(std::int64_t lambda, int p, int r);
// Q_r(lambda) -> Z_r(lambda) sending v to the highest weight vector.
Presentation verma_presentation(std::int64_t lambda, int p, int r);
// Q_r(lambda) -> Z_r(lambda) -> L_r(lambda).
Presentation simple_presentation(int lambda, int p, int r);

std::vector<FpModule> simples(int p, int r);

// P(lambda) for r = 1, found among the summands of St_1 (x) L(m); cached per p.
const std::vector<ProjectiveEntry>& projectives_r1(int p);

struct RankPoint {
  std::array<int, 3> coords;  // [a:b:c], x = a e + b h + c f; field codes
};

struct RankVarietyScan {
  int q = 0;
  std::vector<RankPoint> nonfree;
  std::size_t points_scanned = 0;
  // Non-free counts over F_p and F_{p^2}.
  std::size_t count_p = 0, count_p2 = 0;
  int dimension = 0;
};

// Scans the nullcone over F_q and, when q = p, also over F_{p^2} for the
// dimension estimate. Requires p | dim M.
RankVarietyScan rank_variety_scan(const FpModule& m, int q);
std::vector<RankPoint> nonfree_points_serial(const FpModule& m, const Field& big);
std::vector<RankPoint> nonfree_points_parallel(const FpModule& m, const Field& big);
bool is_free_at(const FpModule& m, const std::array<elem, 3>& point);
nlohmann::json to_json(const RankVarietyScan& scan);

struct CaseResult {
  std::int64_t lambda = 0;
  nlohmann::json expected, got, witness;
  bool ok = false;
};

struct Report {
  std::string check;
  int p = 0, r = 1;
  std::vector<CaseResult> cases;
  bool pass() const;
  nlohmann::json to_json() const;
};

Report verify_vv6(int p, int r, std::uint64_t seed = 0);
Report verify_dr2(int p, std::uint64_t seed = 0);
Report verify_tube(int p, std::uint64_t seed = 0);
Report verify_ar(int p, std::uint64_t seed = 0);
Report verify_heart(int p, std::uint64_t seed = 0);
Report verify_vv4(int p, std::uint64_t seed = 0);
// Components of the Ext^1 graph on simples against the block formula, r = 1.
Report verify_linkage(int p, std::uint64_t seed = 0);

std::vector<std::string> check_names();
Report run_check(const std::string& name, int p, int r, std::uint64_t seed = 0);

}  // namespace fk::sl2
