#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "frobkern/rootsys.hpp"
#include "json.hpp"

namespace fk {

class BadPrime : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DepthOutOfRange : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct DepthValue {
  bool neg_infinity = false;
  int value = 0;  // >= 1 when finite

  static DepthValue infinite() { return {true, 0}; }
  static DepthValue finite(int s) { return {false, s}; }
  bool operator==(const DepthValue&) const = default;
  std::string str() const { return neg_infinity ? "-inf" : std::to_string(value); }
};

DepthValue depth(const Weight& lambda, std::int64_t p, const RootSystem& rs);
bool is_projective_verma(const Weight& lambda, int r, std::int64_t p, const RootSystem& rs);

struct Reduction {
  int d = 0;
  Weight mu;
};
Reduction depth_reduce(const Weight& lambda, std::int64_t p, int r, const RootSystem& rs);

bool block_contains(const Weight& gamma, const Weight& lambda, int r, std::int64_t p, const RootSystem& rs);

enum class ArPosition { Projective, QuasiSimpleAInfty, HomogeneousTube, TildeA12Possible };
std::string to_string(ArPosition a);

struct VermaReport {
  Weight lambda;
  int r = 1;
  std::int64_t p = 0;
  DepthValue depth_value;
  bool projective = false;
  std::optional<Reduction> reduction;
  int cx_lower_bound = 0;
  std::optional<int> variety_dim;
  std::optional<int> complexity;
  std::optional<bool> variety_irreducible;
  bool variety_verifiable = true;
  ArPosition ar_position = ArPosition::QuasiSimpleAInfty;
  std::vector<std::string> notes;
};

VermaReport classify(const Weight& lambda, int r, std::int64_t p, const RootSystem& rs);
nlohmann::json to_json(const VermaReport& rep);

// Report label for a simple G_1-module L(m) of SL(2) (non-Verma path).
ArPosition sl2_simple_ar_position(std::int64_t m, std::int64_t p);

// True iff the Cartan matrix is that of A1 (resp. A2).
bool is_type_a1(const RootSystem& rs);
bool is_type_a2(const RootSystem& rs);

}  // namespace fk
