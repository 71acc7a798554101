#include "liedeg/lie_algebra.hpp"

#include <stdexcept>

#include "liedeg/subspace.hpp"

namespace liedeg {

LieAlgebra::LieAlgebra(std::string name, int dim, Brackets brackets)
    : name_(std::move(name)), dim_(dim) {
  if (dim < 0) throw std::invalid_argument("negative dimension");
  for (auto& [pair, vec] : brackets) {
    auto [i, j] = pair;
    if (i < 1 || j < 1 || i > dim || j > dim)
      throw std::out_of_range("bracket index out of range");
    if (i >= j) throw std::invalid_argument("brackets must be keyed by i < j");
    std::map<int, Scalar> clean;
    for (auto& [k, v] : vec) {
      if (k < 1 || k > dim) throw std::out_of_range("bracket component out of range");
      if (!v.is_zero()) clean.emplace(k, v);
    }
    if (!clean.empty()) brackets_.emplace(pair, std::move(clean));
  }
}

Scalar LieAlgebra::c(int i, int j, int k) const {
  if (i == j) return Scalar(0);
  bool flip = i > j;
  if (flip) std::swap(i, j);
  auto it = brackets_.find({i, j});
  if (it == brackets_.end()) return Scalar(0);
  auto kt = it->second.find(k);
  if (kt == it->second.end()) return Scalar(0);
  return flip ? -kt->second : kt->second;
}

std::vector<Scalar> LieAlgebra::bracket(const std::vector<Scalar>& x,
                                        const std::vector<Scalar>& y) const {
  std::vector<Scalar> out(dim_);
  for (const auto& [pair, vec] : brackets_) {
    auto [i, j] = pair;
    // coefficient of e_i ^ e_j in x ^ y
    Scalar w = x[i - 1] * y[j - 1] - x[j - 1] * y[i - 1];
    if (w.is_zero()) continue;
    for (const auto& [k, v] : vec) out[k - 1] += w * v;
  }
  return out;
}

LieAlgebra LieAlgebra::renamed(std::string name) const {
  LieAlgebra out = *this;
  out.name_ = std::move(name);
  return out;
}

std::vector<JacobiViolation> jacobi_residual(const LieAlgebra& a) {
  std::vector<JacobiViolation> out;
  const int n = a.dim();
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int l = j + 1; l <= n; ++l) {
        std::vector<Scalar> r(n);
        bool nonzero = false;
        for (int k = 1; k <= n; ++k) {
          Scalar s;
          for (int m = 1; m <= n; ++m) {
            s += a.c(i, j, m) * a.c(m, l, k);
            s += a.c(j, l, m) * a.c(m, i, k);
            s += a.c(l, i, m) * a.c(m, j, k);
          }
          if (!s.is_zero()) nonzero = true;
          r[k - 1] = s;
        }
        if (nonzero) out.push_back({i, j, l, std::move(r)});
      }
  return out;
}

bool is_two_step(const LieAlgebra& a) {
  const int n = a.dim();
  for (const auto& [pair, vec] : a.brackets()) {
    (void)pair;
    // d = bracket image; check [e_i, d] = 0 for all i
    std::vector<Scalar> d(n);
    for (const auto& [k, v] : vec) d[k - 1] = v;
    for (int i = 1; i <= n; ++i) {
      std::vector<Scalar> ei(n);
      ei[i - 1] = Scalar(1);
      for (const Scalar& comp : a.bracket(ei, d))
        if (!comp.is_zero()) return false;
    }
  }
  return true;
}

int nilpotency_class(const LieAlgebra& a) {
  const int n = a.dim();
  // lower central series via subspaces
  std::vector<std::vector<Scalar>> whole;
  for (int i = 0; i < n; ++i) {
    std::vector<Scalar> e(n);
    e[i] = Scalar(1);
    whole.push_back(std::move(e));
  }
  Subspace cur = Subspace::span(n, whole);
  int cls = 0;
  while (cur.dim() > 0) {
    std::vector<std::vector<Scalar>> next;
    for (int i = 0; i < n; ++i)
      for (std::size_t k = 0; k < cur.dim(); ++k)
        next.push_back(a.bracket(whole[i], cur.basis_vector(k)));
    Subspace nxt = Subspace::span(n, next);
    ++cls;
    if (nxt.dim() == cur.dim())
      throw std::domain_error("algebra is not nilpotent");
    cur = nxt;
  }
  return cls == 0 ? 1 : cls;  // dim 0 algebra: treat as class 1
}

LieAlgebra change_basis(const LieAlgebra& a, const BasisChange& g) {
  const int n = a.dim();
  if (g.rows() != static_cast<std::size_t>(n) || g.cols() != static_cast<std::size_t>(n))
    throw std::invalid_argument("basis change has wrong shape");
  Mat ginv = g.inverse();  // throws if singular
  LieAlgebra::Brackets out;
  for (int i = 1; i <= n; ++i) {
    std::vector<Scalar> u(n);
    for (int r = 0; r < n; ++r) u[r] = ginv(r, i - 1);
    for (int j = i + 1; j <= n; ++j) {
      std::vector<Scalar> v(n);
      for (int r = 0; r < n; ++r) v[r] = ginv(r, j - 1);
      std::vector<Scalar> w = g.apply(a.bracket(u, v));
      std::map<int, Scalar> entry;
      for (int k = 1; k <= n; ++k)
        if (!w[k - 1].is_zero()) entry.emplace(k, w[k - 1]);
      if (!entry.empty()) out.emplace(std::make_pair(i, j), std::move(entry));
    }
  }
  return LieAlgebra(a.name(), n, std::move(out));
}

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b) {
  const int na = a.dim();
  LieAlgebra::Brackets out = a.brackets();
  for (const auto& [pair, vec] : b.brackets()) {
    std::map<int, Scalar> shifted;
    for (const auto& [k, v] : vec) shifted.emplace(k + na, v);
    out.emplace(std::make_pair(pair.first + na, pair.second + na), std::move(shifted));
  }
  return LieAlgebra(a.name() + "+" + b.name(), na + b.dim(), std::move(out));
}

bool is_isomorphic_via(const LieAlgebra& a, const LieAlgebra& b, const BasisChange& m) {
  if (a.dim() != b.dim()) throw std::invalid_argument("dimension mismatch");
  return change_basis(a, m).same_constants(b);
}

}  // namespace liedeg
