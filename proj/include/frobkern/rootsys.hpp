#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fk {

// Fundamental-weight coordinates: entry i is <lambda, alpha_i^vee>.
using Weight = std::vector<std::int64_t>;
using IntMatrix = std::vector<std::vector<std::int64_t>>;

class NotFiniteType : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Cartan matrix with a_ij = <alpha_j, alpha_i^vee>.
struct CartanSpec {
  std::size_t rank = 0;
  IntMatrix matrix;
  std::string label;  // type name when parsed from one, else empty

  static CartanSpec of_type(const std::string& type);
  // "type=A2", "A2", "A1xA1" or explicit rows "2,-1;-1,2".
  static CartanSpec parse(const std::string& text);
  // Throws NotFiniteType unless the matrix is a finite-type Cartan matrix.
  void validate() const;
};

struct Root {
  std::vector<std::int64_t> coeffs;    // over the simple roots
  std::vector<std::int64_t> coroot;    // over the simple coroots
};

struct Component {
  std::vector<std::size_t> nodes;
  std::size_t positive_roots = 0;
  bool simply_laced = true;
};

class RootSystem {
 public:
  explicit RootSystem(CartanSpec spec);

  const CartanSpec& cartan() const { return spec_; }
  std::size_t rank() const { return spec_.rank; }
  const std::vector<Root>& positive_roots() const { return roots_; }
  const std::vector<IntMatrix>& weyl_elements() const { return weyl_; }
  const std::vector<Component>& components() const { return comps_; }
  int coxeter_number() const { return h_; }

  // <lambda, beta^vee> for the positive root with this index.
  std::int64_t pairing(const Weight& lambda, std::size_t root) const;
  // Simple root alpha_j in fundamental-weight coordinates (column j of the Cartan matrix).
  Weight simple_root(std::size_t j) const;
  Weight rho() const { return Weight(rank(), 1); }
  Weight act(const IntMatrix& w, const Weight& lambda) const;
  Weight dot_action(const IntMatrix& w, const Weight& lambda) const;
  std::size_t identity_index() const { return 0; }

 private:
  CartanSpec spec_;
  std::vector<Root> roots_;
  std::vector<IntMatrix> weyl_;
  std::vector<Component> comps_;
  int h_ = 0;
};

RootSystem build_root_system(const CartanSpec& spec);

IntMatrix compose(const IntMatrix& a, const IntMatrix& b);

std::vector<std::size_t> psi_r(const Weight& lambda, int r, std::int64_t p, const RootSystem& rs);
bool is_pr_regular(const Weight& lambda, int r, std::int64_t p, const RootSystem& rs);
std::pair<Weight, Weight> restricted_decompose(const Weight& lambda, int r, std::int64_t p);
bool in_alcove_c0(const Weight& lambda, std::int64_t p, const RootSystem& rs);
bool is_good_prime(std::int64_t p, const RootSystem& rs);

Weight add(const Weight& a, const Weight& b);
Weight sub(const Weight& a, const Weight& b);
Weight scale(std::int64_t c, const Weight& a);
std::string to_string(const Weight& w);
Weight parse_weight(const std::string& text);

}  // namespace fk
