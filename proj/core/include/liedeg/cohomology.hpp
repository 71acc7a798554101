#pragma once

#include <vector>

#include "liedeg/lie_algebra.hpp"

namespace liedeg {

/// Matrix of the Chevalley-Eilenberg differential d_k: C^k -> C^{k+1} on
/// alternating forms with trivial coefficients. Rows are (k+1)-subsets,
/// columns k-subsets, both ordered lexicographically.
Mat ce_differential(const LieAlgebra& a, int k);

/// dim H^k = C(n,k) - rank d_k - rank d_{k-1}.
int ce_betti(const LieAlgebra& a, int k);

/// All of H^0..H^n at once (each differential rank computed once).
std::vector<int> betti_table(const LieAlgebra& a);

}  // namespace liedeg
