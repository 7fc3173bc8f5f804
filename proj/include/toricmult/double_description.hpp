#pragma once

#include <vector>

#include "toricmult/exact.hpp"

namespace toricmult {

/// Generators of a polyhedral cone {x : (a, x) >= 0 for every row a}:
/// cone = span(lineality) + cone(rays), rays extremal modulo the lineality space.
struct ConeGenerators {
  std::vector<LatticeVector> lineality;
  std::vector<LatticeVector> rays;
};

/// Double description method (Motzkin et al.) over exact integers, with the
/// combinatorial adjacency test. Rays come back primitive and sorted.
ConeGenerators cone_from_inequalities(std::size_t dim, const std::vector<LatticeVector>& rows);

}  // namespace toricmult
