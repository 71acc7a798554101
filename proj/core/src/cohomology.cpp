#include "liedeg/cohomology.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace liedeg {

namespace {

std::vector<std::vector<int>> subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  // lexicographic enumeration of k-subsets of {0..n-1}
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int i = start; i < n; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

long long binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

Mat ce_differential(const LieAlgebra& a, int k) {
  const int n = a.dim();
  if (k < 0 || k > n) throw std::out_of_range("cochain degree out of range");
  auto cols = subsets(n, k);
  auto rows = subsets(n, k + 1);
  std::map<std::vector<int>, std::size_t> colidx;
  for (std::size_t i = 0; i < cols.size(); ++i) colidx.emplace(cols[i], i);

  Mat d(rows.size(), cols.size());
  // (dw)(e_T) = sum_{p<q} (-1)^{p+q} w([e_{T_p}, e_{T_q}], T minus p,q)
  for (std::size_t ri = 0; ri < rows.size(); ++ri) {
    const auto& T = rows[ri];
    for (int p = 0; p <= k; ++p)
      for (int q = p + 1; q <= k + 1; ++q) {
        int sgn = ((p + q) % 2 == 0) ? 1 : -1;
        std::vector<int> rest;
        for (int idx = 0; idx <= k; ++idx)
          if (idx != p && idx != q) rest.push_back(T[idx]);
        for (int m = 1; m <= n; ++m) {
          Scalar v = a.c(T[p] + 1, T[q] + 1, m);
          if (v.is_zero()) continue;
          int m0 = m - 1;
          if (std::find(rest.begin(), rest.end(), m0) != rest.end()) continue;
          std::vector<int> merged = rest;
          merged.push_back(m0);
          std::sort(merged.begin(), merged.end());
          auto pos = std::find(merged.begin(), merged.end(), m0) - merged.begin();
          int s2 = (pos % 2 == 0) ? 1 : -1;
          d(ri, colidx.at(merged)) += Scalar(sgn * s2) * v;
        }
      }
  }
  return d;
}

int ce_betti(const LieAlgebra& a, int k) {
  const int n = a.dim();
  if (k < 0 || k > n) throw std::out_of_range("cohomology degree out of range");
  std::size_t rk = (k < n) ? ce_differential(a, k).rank() : 0;
  std::size_t rkm1 = (k >= 1) ? ce_differential(a, k - 1).rank() : 0;
  return static_cast<int>(binom(n, k) - rk - rkm1);
}

std::vector<int> betti_table(const LieAlgebra& a) {
  const int n = a.dim();
  std::vector<std::size_t> ranks(n + 1, 0);
  for (int k = 0; k < n; ++k) ranks[k] = ce_differential(a, k).rank();
  std::vector<int> out(n + 1);
  for (int k = 0; k <= n; ++k) {
    std::size_t rk = (k < n) ? ranks[k] : 0;
    std::size_t rkm1 = (k >= 1) ? ranks[k - 1] : 0;
    out[k] = static_cast<int>(binom(n, k) - rk - rkm1);
  }
  return out;
}

}  // namespace liedeg
