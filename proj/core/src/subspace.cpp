#include "liedeg/subspace.hpp"

#include <stdexcept>

namespace liedeg {

Subspace Subspace::span(std::size_t ambient, const std::vector<std::vector<Scalar>>& vecs) {
  Mat rowmat(vecs.size(), ambient);
  for (std::size_t r = 0; r < vecs.size(); ++r) {
    if (vecs[r].size() != ambient)
      throw std::invalid_argument("span: vector length != ambient dimension");
    for (std::size_t c = 0; c < ambient; ++c) rowmat(r, c) = vecs[r][c];
  }
  std::vector<std::size_t> piv = rowmat.rref();
  Subspace s(ambient);
  s.basis_ = Mat(ambient, piv.size());
  for (std::size_t k = 0; k < piv.size(); ++k)
    for (std::size_t c = 0; c < ambient; ++c) s.basis_(c, k) = rowmat(k, c);
  return s;
}

Subspace Subspace::col_span(const Mat& m) {
  std::vector<std::vector<Scalar>> vecs;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    std::vector<Scalar> v(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) v[r] = m(r, c);
    vecs.push_back(std::move(v));
  }
  return span(m.rows(), vecs);
}

std::vector<Scalar> Subspace::basis_vector(std::size_t k) const {
  std::vector<Scalar> v(ambient_);
  for (std::size_t r = 0; r < ambient_; ++r) v[r] = basis_(r, k);
  return v;
}

bool Subspace::contains(const std::vector<Scalar>& v) const {
  std::vector<std::vector<Scalar>> vecs;
  for (std::size_t c = 0; c < basis_.cols(); ++c) vecs.push_back(basis_vector(c));
  vecs.push_back(v);
  return span(ambient_, vecs).dim() == dim();
}

bool Subspace::contains(const Subspace& other) const {
  return sum(other).dim() == dim();
}

Subspace Subspace::sum(const Subspace& other) const {
  if (ambient_ != other.ambient_) throw std::invalid_argument("ambient mismatch");
  std::vector<std::vector<Scalar>> vecs;
  for (std::size_t c = 0; c < basis_.cols(); ++c) vecs.push_back(basis_vector(c));
  for (std::size_t c = 0; c < other.basis_.cols(); ++c)
    vecs.push_back(other.basis_vector(c));
  return span(ambient_, vecs);
}

Subspace Subspace::intersect(const Subspace& other) const {
  if (ambient_ != other.ambient_) throw std::invalid_argument("ambient mismatch");
  // x = A u = B w  =>  [A | -B] (u,w)^T = 0; intersection = A * (u-part of kernel)
  const std::size_t da = dim(), db = other.dim();
  if (da == 0 || db == 0) return Subspace(ambient_);
  Mat ab(ambient_, da + db);
  for (std::size_t r = 0; r < ambient_; ++r) {
    for (std::size_t c = 0; c < da; ++c) ab(r, c) = basis_(r, c);
    for (std::size_t c = 0; c < db; ++c) ab(r, da + c) = -other.basis_(r, c);
  }
  Mat ker = ab.kernel();
  std::vector<std::vector<Scalar>> vecs;
  for (std::size_t k = 0; k < ker.cols(); ++k) {
    std::vector<Scalar> u(da);
    for (std::size_t c = 0; c < da; ++c) u[c] = ker(c, k);
    std::vector<Scalar> x(ambient_);
    for (std::size_t r = 0; r < ambient_; ++r)
      for (std::size_t c = 0; c < da; ++c)
        if (!basis_(r, c).is_zero() && !u[c].is_zero()) x[r] += basis_(r, c) * u[c];
    vecs.push_back(std::move(x));
  }
  return span(ambient_, vecs);
}

}  // namespace liedeg
