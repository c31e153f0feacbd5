#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "pq/fp/presentation.hpp"

namespace pq {

using BigInt = boost::multiprecision::cpp_int;
using IntMatrix = std::vector<std::vector<BigInt>>;

// Z^free_rank + Z/d1 + ... + Z/dk with d1 | d2 | ... | dk and every di >= 2.
struct AbelianInvariants {
  std::size_t free_rank = 0;
  std::vector<BigInt> torsion;

  bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
  bool is_torsion_free() const { return torsion.empty(); }
  std::string to_string() const;

  friend bool operator==(const AbelianInvariants&, const AbelianInvariants&) = default;
};

struct SmithForm {
  // Nonzero diagonal entries d1 | d2 | ... (units included), one per rank.
  std::vector<BigInt> diagonal;
  std::size_t rank = 0;
  // Unimodular V with U * M * V = D, when requested.
  IntMatrix column_transform;
};

// Exact Smith normal form. Runs in checked 64-bit arithmetic and restarts in
// arbitrary precision if any intermediate overflows.
SmithForm smith_normal_form(const IntMatrix& m, std::size_t columns,
                            bool track_columns = false);

// Relator exponent-sum matrix: one row per relator, one column per generator.
IntMatrix exponent_matrix(const Presentation& p);

AbelianInvariants invariants_from_matrix(const IntMatrix& m, std::size_t columns);
AbelianInvariants abelian_invariants(const Presentation& p);

}  // namespace pq
