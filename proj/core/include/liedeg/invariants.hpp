#pragma once

#include <array>
#include <optional>
#include <vector>

#include "liedeg/lie_algebra.hpp"
#include "liedeg/subspace.hpp"

namespace liedeg {

/// An integer known to lie in [lower, upper]; certified when equal. The
/// witness, when present, realizes the lower bound.
struct CertifiedValue {
  int lower = 0;
  int upper = 0;
  std::optional<Subspace> witness;

  bool certified() const { return lower == upper; }
};

struct InvariantProfile {
  int orbit_dim = 0;
  int center_dim = 0;
  int derived_dim = 0;
  std::vector<int> betti;  // dim H^0 .. dim H^n
  CertifiedValue max_abelian;
  int nilpotency_class = 1;
};

Subspace center(const LieAlgebra& a);
Subspace derived(const LieAlgebra& a);

/// Nullity of the exact linear system D[x,y] = [Dx,y] + [x,Dy].
int derivation_dim(const LieAlgebra& a);

/// n^2 - dim Der(a); the stabilizer of a point of the variety is its
/// automorphism group, whose Lie algebra is Der(a).
int orbit_dim(const LieAlgebra& a);

struct MaxAbelianOptions {
  int height = 2;        // coefficient bound for the isotropic search
  int samples = 50;      // random pencil members for the rank upper bound
  std::uint64_t seed = 1;
  bool gaussian = false;  // extend the search basis with i-multiples
};

/// a(g) for 2-step g, as a certified interval (see CertifiedValue).
CertifiedValue max_abelian(const LieAlgebra& a, const MaxAbelianOptions& opt = {});

InvariantProfile profile(const LieAlgebra& a, const MaxAbelianOptions& opt = {});

}  // namespace liedeg
