#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "frobkern/matrix.hpp"

namespace fk {

enum class Verdict { Yes, No, Undecided };
std::string to_string(Verdict v);

// Jacobson radical of the matrix algebra spanned by `basis` (closed under
// products, containing the identity), by iterated trace-form kernels of
// p^i-th powers lifted to the Galois ring of characteristic p^{i+1}.
// Returns radical elements as coordinate vectors over `basis`.
std::vector<std::vector<elem>> jacobson_radical(const std::vector<FpMatrix>& basis);

struct LocalityCertificate {
  Verdict local = Verdict::Undecided;
  std::size_t algebra_dim = 0;
  std::size_t radical_dim = 0;
  // Set when local: an element of E whose image generates E/J as a field,
  // with its minimal polynomial over the base field (low degree first).
  std::optional<FpMatrix> generator;
  std::vector<elem> min_poly;
  // Set when not local: a nontrivial idempotent of E.
  std::optional<FpMatrix> idempotent;
  std::string detail;
};

// Decides whether the algebra spanned by `basis` is local.
LocalityCertificate analyze_local(const std::vector<FpMatrix>& basis, std::uint64_t seed,
                                  std::size_t exhaustive_bound = 4096);

// Idempotent projecting onto the Fitting-stable image of x, if nontrivial.
std::optional<FpMatrix> fitting_idempotent(const FpMatrix& x);

// Monic polynomial f over the field, low degree first.
bool is_irreducible(const Field& f, const std::vector<elem>& poly);

}  // namespace fk
