#pragma once

#include <cstdint>
#include <vector>

#include "frobkern/rootsys.hpp"

namespace fk {

// Sublattice of Z^n spanned by integer columns, with a membership test from a
// diagonal (Smith) form D = U A V.
class Lattice {
 public:
  Lattice(std::size_t n, const std::vector<std::vector<std::int64_t>>& generators);
  bool contains(const std::vector<std::int64_t>& v) const;
  const std::vector<std::int64_t>& invariants() const { return diag_; }

 private:
  std::size_t n_;
  IntMatrix u_;
  std::vector<std::int64_t> diag_;
};

}  // namespace fk
