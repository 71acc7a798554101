#include "liedeg/invariants.hpp"

#include <stdexcept>

#include "liedeg/cohomology.hpp"

namespace liedeg {

Subspace center(const LieAlgebra& a) {
  const int n = a.dim();
  // stack the adjoint constraints: x central iff c_ijk-weighted sums vanish
  std::vector<std::vector<Scalar>> rows;
  for (int j = 1; j <= n; ++j)
    for (int k = 1; k <= n; ++k) {
      std::vector<Scalar> row(n);
      bool nz = false;
      for (int i = 1; i <= n; ++i) {
        row[i - 1] = a.c(i, j, k);
        if (!row[i - 1].is_zero()) nz = true;
      }
      if (nz) rows.push_back(std::move(row));
    }
  if (rows.empty()) {
    std::vector<std::vector<Scalar>> full;
    for (int i = 0; i < n; ++i) {
      std::vector<Scalar> e(n);
      e[i] = Scalar(1);
      full.push_back(std::move(e));
    }
    return Subspace::span(n, full);
  }
  Mat m(rows.size(), n);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (int c = 0; c < n; ++c) m(r, c) = rows[r][c];
  return Subspace::col_span(m.kernel());
}

Subspace derived(const LieAlgebra& a) {
  const int n = a.dim();
  std::vector<std::vector<Scalar>> vecs;
  for (const auto& [pair, vec] : a.brackets()) {
    (void)pair;
    std::vector<Scalar> v(n);
    for (const auto& [k, w] : vec) v[k - 1] = w;
    vecs.push_back(std::move(v));
  }
  return Subspace::span(n, vecs);
}

int derivation_dim(const LieAlgebra& a) {
  const int n = a.dim();
  // unknowns d_{kb} (D e_b = sum_k d_{kb} e_k), index k*n+b
  std::vector<std::vector<Scalar>> rows;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k) {
        std::vector<Scalar> row(n * n);
        bool nz = false;
        for (int m = 1; m <= n; ++m) {
          Scalar v = a.c(i, j, m);
          if (!v.is_zero()) {
            row[(k - 1) * n + (m - 1)] += v;
            nz = true;
          }
        }
        for (int p = 1; p <= n; ++p) {
          Scalar v1 = a.c(p, j, k);
          if (!v1.is_zero()) {
            row[(p - 1) * n + (i - 1)] -= v1;
            nz = true;
          }
          Scalar v2 = a.c(i, p, k);
          if (!v2.is_zero()) {
            row[(p - 1) * n + (j - 1)] -= v2;
            nz = true;
          }
        }
        if (nz) rows.push_back(std::move(row));
      }
  if (rows.empty()) return n * n;
  Mat m(rows.size(), n * n);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (int c = 0; c < n * n; ++c) m(r, c) = rows[r][c];
  return static_cast<int>(n * n - m.rank());
}

int orbit_dim(const LieAlgebra& a) { return a.dim() * a.dim() - derivation_dim(a); }

InvariantProfile profile(const LieAlgebra& a, const MaxAbelianOptions& opt) {
  InvariantProfile p;
  p.orbit_dim = orbit_dim(a);
  p.center_dim = static_cast<int>(center(a).dim());
  p.derived_dim = static_cast<int>(derived(a).dim());
  p.betti = betti_table(a);
  p.max_abelian = max_abelian(a, opt);
  p.nilpotency_class = nilpotency_class(a);
  return p;
}

}  // namespace liedeg
