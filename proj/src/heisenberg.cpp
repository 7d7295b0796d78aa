#include "frobkern/heisenberg.hpp"

#include <cmath>
#include <string>

#include "frobkern/kernels.hpp"

namespace fk::heisenberg {

PointCount count_points(int r, std::int64_t q) {
  if (r < 1) throw std::invalid_argument("r must be positive");
  if (prime_power(q).first == 0) throw std::invalid_argument(std::to_string(q) + " is not a prime power");
  double pairs = std::pow(static_cast<double>(q), 2.0 * r);
  if (pairs > static_cast<double>(kBudget))
    throw BudgetExceeded("q^(2r) = " + std::to_string(static_cast<std::uint64_t>(pairs)) + " exceeds the enumeration budget");
  const Field& f = Field::get(static_cast<int>(q));
  return {q, r, static_cast<std::uint64_t>(ipow(q, r)) * kernels::rank1_pairs_parallel(f, r)};
}

std::uint64_t closed_form(int r, std::int64_t q) {
  const auto qr = static_cast<std::uint64_t>(ipow(q, r));
  return qr * (1 + static_cast<std::uint64_t>(q + 1) * (qr - 1));
}

double default_tolerance(int r) { return r <= 2 ? 0.15 : 0.3; }

DimensionFit dimension_fit(int r, const std::vector<std::int64_t>& qs, double tolerance) {
  if (qs.size() < 2) throw std::invalid_argument("dimension fit needs at least two fields");
  DimensionFit fit;
  fit.r = r;
  fit.target = 2 * r + 1;
  fit.tolerance = tolerance;
  std::vector<double> xs, ys;
  for (auto q : qs) {
    fit.counts.push_back(count_points(r, q));
    xs.push_back(std::log(static_cast<double>(q)));
    ys.push_back(std::log(static_cast<double>(fit.counts.back().count)));
  }
  const double n = static_cast<double>(xs.size());
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i] / n;
    my += ys[i] / n;
  }
  double sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxy += (xs[i] - mx) * (ys[i] - my);
    sxx += (xs[i] - mx) * (xs[i] - mx);
  }
  if (sxx == 0) throw std::invalid_argument("dimension fit needs distinct fields");
  fit.slope = sxy / sxx;
  const double intercept = my - fit.slope * mx;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double e = ys[i] - (intercept + fit.slope * xs[i]);
    fit.residual += e * e;
  }
  fit.residual = std::sqrt(fit.residual);
  fit.pass = std::abs(fit.slope - fit.target) <= tolerance;
  return fit;
}

nlohmann::json to_json(const DimensionFit& fit) {
  nlohmann::json counts = nlohmann::json::array();
  for (auto& c : fit.counts) counts.push_back({{"q", c.q}, {"count", c.count}});
  auto round6 = [](double x) { return std::round(x * 1e6) / 1e6; };
  return {{"r", fit.r},
          {"counts", counts},
          {"slope", round6(fit.slope)},
          {"residual", round6(fit.residual)},
          {"target", fit.target},
          {"tolerance", fit.tolerance},
          {"pass", fit.pass}};
}

}  // namespace fk::heisenberg
