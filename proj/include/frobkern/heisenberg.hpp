#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "json.hpp"

// Commuting r-tuples in the Heisenberg algebra u of sl3 over F_q: tuples
// (x_i e_1 + y_i e_2 + c_i e_3) with x_i y_j = x_j y_i for all i, j.
namespace fk::heisenberg {

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t kBudget = 1'000'000'000ULL;

struct PointCount {
  std::int64_t q = 0;
  int r = 0;
  std::uint64_t count = 0;
};

PointCount count_points(int r, std::int64_t q);
std::uint64_t closed_form(int r, std::int64_t q);

struct DimensionFit {
  int r = 0;
  std::vector<PointCount> counts;
  double slope = 0;
  double residual = 0;
  int target = 0;
  double tolerance = 0;
  bool pass = false;
};

// Least-squares slope of log(count) against log(q).
DimensionFit dimension_fit(int r, const std::vector<std::int64_t>& qs, double tolerance);
double default_tolerance(int r);
nlohmann::json to_json(const DimensionFit& fit);

}  // namespace fk::heisenberg
