#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "frobkern/homs.hpp"
#include "frobkern/module.hpp"
#include "frobkern/radical.hpp"

namespace fk {

class MissingProjective : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Undecided : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Submodule {
  FpModule module;
  FpMatrix inclusion;  // dim M x dim S, columns in reduced echelon form
};

struct Quotient {
  FpModule module;
  FpMatrix projection;                  // dim Q x dim M
  std::vector<std::size_t> complement;  // standard basis vectors of M lifting the basis of Q
};

// Span of the given columns, which must be invariant under all generators.
Submodule submodule(const FpModule& m, const FpMatrix& columns);
// Smallest submodule containing the given columns.
Submodule generated_submodule(const FpModule& m, const FpMatrix& columns);
Quotient quotient(const FpModule& m, const FpMatrix& sub_columns);
Submodule kernel(const FpModule& m, const FpMatrix& hom);
FpModule direct_sum(const FpModule& a, const FpModule& b);

struct TopInfo {
  Submodule radical;
  std::vector<std::size_t> multiplicities;  // dim Hom(M, S) per simple
  bool no_simples = false;
};
TopInfo radical_and_top(const FpModule& m, const std::vector<FpModule>& simples, std::uint64_t seed = 0);
// Sum of the images of all maps from the simples.
Submodule socle(const FpModule& m, const std::vector<FpModule>& simples, std::uint64_t seed = 0);

struct ProjectiveEntry {
  std::string label;
  FpModule simple;
  FpModule projective;
};

// A projective P with an epimorphism onto M; K = ker(pi) with its inclusion.
struct Presentation {
  FpModule p;
  FpMatrix pi;
  Submodule k;
  std::vector<std::size_t> summands;  // entry index per summand of a minimal cover
};
Presentation make_presentation(const FpModule& p, const FpMatrix& pi);

// Validates that each P(S) has simple top S against the full list of simples.
void validate_projectives(const std::vector<ProjectiveEntry>& projectives);
Presentation projective_cover(const FpModule& m, const std::vector<ProjectiveEntry>& projectives,
                              std::uint64_t seed = 0);
FpModule syzygy(const FpModule& m, const std::vector<ProjectiveEntry>& projectives, std::uint64_t seed = 0);

// Ext^1(M, -) from a fixed projective presentation of M.
class Ext1Engine {
 public:
  explicit Ext1Engine(Presentation pres, std::uint64_t seed = 0);
  const Presentation& presentation() const { return pres_; }

  struct Result {
    std::size_t dim = 0;
    // Cocycles K -> N (dim N x dim K) whose classes form a basis of Ext^1.
    std::vector<FpMatrix> cocycles;
  };
  Result compute(const FpModule& n, bool want_cocycles = false) const;
  std::size_t dim(const FpModule& n) const { return compute(n).dim; }

 private:
  Presentation pres_;
  HomSolver k_solver_, p_solver_;
  std::vector<std::vector<elem>> k_seeds_in_p_;
};

std::size_t ext1_dim(const FpModule& m, const FpModule& n, const std::vector<ProjectiveEntry>& projectives,
                     std::uint64_t seed = 0);

struct Extension {
  FpModule e;
  FpMatrix incl;  // N -> E
  FpMatrix proj;  // E -> M
};
// Pushout of P <- K -> N along the cocycle.
Extension build_extension(const Presentation& pres, const FpModule& n, const FpMatrix& cocycle);
Extension build_extension(const FpModule& m, const FpModule& n, const FpMatrix& cocycle,
                          const std::vector<ProjectiveEntry>& projectives, std::uint64_t seed = 0);

struct IsoResult {
  Verdict verdict = Verdict::Undecided;
  std::optional<FpMatrix> witness;  // N <- M
  std::string detail;
};
IsoResult is_isomorphic(const FpModule& m, const FpModule& n, std::uint64_t seed = 0, int retries = 64,
                        std::size_t exhaustive_bound = 4096);
// Independent check of a witness: intertwiner and invertible.
bool verify_isomorphism(const FpModule& m, const FpModule& n, const FpMatrix& w);

struct IndecResult {
  Verdict verdict = Verdict::Undecided;
  LocalityCertificate certificate;
};
IndecResult is_indecomposable(const FpModule& m, std::uint64_t seed = 0);

// Splits M into indecomposable summands using certified idempotents.
std::vector<Submodule> split_indecomposables(const FpModule& m, std::uint64_t seed = 0);

bool is_projective_module(const FpModule& m, const std::vector<FpModule>& simples,
                          const std::vector<ProjectiveEntry>& projectives, std::uint64_t seed = 0);
bool is_projective_module(const Presentation& pres, const std::vector<FpModule>& simples, std::uint64_t seed = 0);

}  // namespace fk
