#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "frobkern/module.hpp"

namespace fk {

// Hom(M, -) for a fixed source M. M is spun once from random homogeneous
// seeds; a homomorphism is then determined by the seed images, and the
// recorded relations among spun vectors give the linear conditions on them.
class HomSolver {
 public:
  explicit HomSolver(const FpModule& source, std::uint64_t seed = 0, bool force_ungraded = false);

  const FpModule& source() const;
  // Seeds in source coordinates.
  std::vector<std::vector<elem>> seed_vectors() const;

  // Solution space of seed images for one target, with helpers to convert
  // between seed-image coordinates and full homomorphism matrices.
  class Space {
   public:
    std::size_t dim() const { return basis_.cols(); }
    std::size_t unknowns() const { return basis_.rows(); }
    // Columns: admissible seed-image vectors.
    const FpMatrix& basis() const { return basis_; }
    FpMatrix to_matrix(const std::vector<elem>& x) const;
    std::vector<FpMatrix> matrices() const;
    // Seed-image coordinates of a homomorphism given as a matrix.
    std::vector<elem> encode(const FpMatrix& hom) const;
    // Same, from the images of the seeds (target coordinates), one per seed.
    std::vector<elem> encode_images(const std::vector<std::vector<elem>>& images) const;

   private:
    friend class HomSolver;
    struct Impl;
    std::shared_ptr<const Impl> impl_;
    FpMatrix basis_;
  };

  Space solve(const FpModule& target) const;
  std::vector<FpMatrix> basis(const FpModule& target) const { return solve(target).matrices(); }
  std::size_t dimension(const FpModule& target) const { return solve(target).dim(); }

 private:
  struct Plan;
  std::shared_ptr<const Plan> plan_;
  std::uint64_t seed_;
};

// Basis of Hom(M, N); every element is re-verified as an intertwiner.
std::vector<FpMatrix> hom_space(const FpModule& m, const FpModule& n, std::uint64_t seed = 0);

}  // namespace fk
