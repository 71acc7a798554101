#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "liedeg/matrix.hpp"

namespace liedeg {

using BasisChange = Mat;

/// Lie algebra given by sparse exact structure constants c_ij^k. Only pairs
/// i < j are stored (1-based); skew-symmetry is implicit. Immutable in use:
/// operations return new values.
class LieAlgebra {
 public:
  using Brackets = std::map<std::pair<int, int>, std::map<int, Scalar>>;

  LieAlgebra() = default;
  LieAlgebra(std::string name, int dim, Brackets brackets);

  const std::string& name() const { return name_; }
  int dim() const { return dim_; }
  const Brackets& brackets() const { return brackets_; }

  /// c_ij^k for arbitrary i, j (skew-extended); 1-based indices.
  Scalar c(int i, int j, int k) const;

  /// [x, y] for coordinate vectors.
  std::vector<Scalar> bracket(const std::vector<Scalar>& x,
                              const std::vector<Scalar>& y) const;

  /// Structure constants equal (names ignored).
  bool same_constants(const LieAlgebra& other) const {
    return dim_ == other.dim_ && brackets_ == other.brackets_;
  }

  LieAlgebra renamed(std::string name) const;

  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
    return a.same_constants(b);
  }

 private:
  std::string name_;
  int dim_ = 0;
  Brackets brackets_;  // normalized: i < j, nonzero coefficients only
};

struct JacobiViolation {
  int i, j, l;                  // 1-based basis triple
  std::vector<Scalar> residual;  // nonzero cyclic-sum vector
};

/// Empty iff the constants satisfy the Jacobi identity.
std::vector<JacobiViolation> jacobi_residual(const LieAlgebra& a);

/// True iff [g,[g,g]] = 0.
bool is_two_step(const LieAlgebra& a);

/// 1 for abelian, 2 for genuinely 2-step, etc.
int nilpotency_class(const LieAlgebra& a);

/// The algebra with constants of g.mu(g^-1 x, g^-1 y); a left group action.
LieAlgebra change_basis(const LieAlgebra& a, const BasisChange& g);

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b);

/// change_basis(a, m) has exactly b's constants.
bool is_isomorphic_via(const LieAlgebra& a, const LieAlgebra& b, const BasisChange& m);

}  // namespace liedeg
