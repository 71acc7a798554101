#pragma once

#include <vector>

#include "liedeg/matrix.hpp"

namespace liedeg {

/// Subspace of an ambient coordinate space, stored as a reduced
/// column-echelon basis so equal subspaces have identical matrices.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient) : ambient_(ambient), basis_(ambient, 0) {}

  /// Span of the given vectors (each of length `ambient`).
  static Subspace span(std::size_t ambient, const std::vector<std::vector<Scalar>>& vecs);

  /// Column span of a matrix.
  static Subspace col_span(const Mat& m);

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.cols(); }

  /// Basis matrix, columns are basis vectors in reduced column echelon form.
  const Mat& basis() const { return basis_; }

  std::vector<Scalar> basis_vector(std::size_t k) const;

  bool contains(const std::vector<Scalar>& v) const;
  bool contains(const Subspace& other) const;

  Subspace intersect(const Subspace& other) const;
  Subspace sum(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  std::size_t ambient_ = 0;
  Mat basis_;  // ambient x dim, canonical
};

}  // namespace liedeg
