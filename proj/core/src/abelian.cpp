#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "liedeg/invariants.hpp"
#include "liedeg/rng.hpp"

namespace liedeg {

namespace {

// Gaussian integer with small entries; the search basis.
struct GInt {
  std::int64_t re = 0, im = 0;
  bool zero() const { return re == 0 && im == 0; }
};

struct QuotientForms {
  int zdim = 0;
  int m = 0;                   // quotient dimension
  std::vector<int> comp;       // ambient coordinates spanning the complement
  // one integer matrix per derived direction (denominators cleared)
  std::vector<std::vector<std::vector<std::int64_t>>> forms;
  bool int_ok = true;          // all magnitudes small enough for int64 path
  std::vector<Mat> exact;      // exact copies, for witness re-checks
};

std::vector<std::size_t> echelon_pivots(const Mat& basis) {
  std::vector<std::size_t> piv;
  for (std::size_t c = 0; c < basis.cols(); ++c)
    for (std::size_t r = 0; r < basis.rows(); ++r)
      if (!basis(r, c).is_zero()) {
        piv.push_back(r);
        break;
      }
  return piv;
}

QuotientForms quotient_forms(const LieAlgebra& a) {
  const int n = a.dim();
  Subspace z = center(a);
  Subspace d = derived(a);
  QuotientForms q;
  q.zdim = static_cast<int>(z.dim());
  std::vector<std::size_t> zpiv = echelon_pivots(z.basis());
  for (int i = 0; i < n; ++i)
    if (std::find(zpiv.begin(), zpiv.end(), static_cast<std::size_t>(i)) == zpiv.end())
      q.comp.push_back(i);
  q.m = static_cast<int>(q.comp.size());
  std::vector<std::size_t> dpiv = echelon_pivots(d.basis());
  const int r = static_cast<int>(d.dim());
  for (int s = 0; s < r; ++s) q.exact.push_back(Mat(q.m, q.m));
  for (int ai = 0; ai < q.m; ++ai)
    for (int bi = ai + 1; bi < q.m; ++bi) {
      // [e_comp(ai), e_comp(bi)] lies in derived; its coefficient along the
      // s-th echelon basis vector is its dpiv[s] coordinate
      for (int s = 0; s < r; ++s) {
        Scalar v = a.c(q.comp[ai] + 1, q.comp[bi] + 1, static_cast<int>(dpiv[s]) + 1);
        if (!v.is_zero()) {
          q.exact[s](ai, bi) = v;
          q.exact[s](bi, ai) = -v;
        }
      }
    }
  // integer copies with cleared denominators (isotropy is scale-invariant)
  for (int s = 0; s < r; ++s) {
    mpz_class lcm = 1;
    for (int i = 0; i < q.m; ++i)
      for (int j = 0; j < q.m; ++j) {
        const Scalar& v = q.exact[s](i, j);
        if (!v.is_rational()) throw std::domain_error("non-rational structure constant");
        mpz_class den = v.rat().get_den();
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
      }
    std::vector<std::vector<std::int64_t>> f(q.m, std::vector<std::int64_t>(q.m, 0));
    for (int i = 0; i < q.m; ++i)
      for (int j = 0; j < q.m; ++j) {
        mpq_class scaled = q.exact[s](i, j).rat() * Rat(lcm);
        mpz_class num = scaled.get_num();  // denominator is 1 now
        if (!num.fits_slong_p() || abs(num) > mpz_class(1000000)) {
          q.int_ok = false;
        } else {
          f[i][j] = num.get_si();
        }
      }
    q.forms.push_back(std::move(f));
  }
  return q;
}

// enumerate canonical vectors over Gaussian integers of max-norm `height`.
// rational mode: im == 0 everywhere. First nonzero entry has re > 0, or
// re == 0 && im > 0.
void enumerate_vectors(int m, int height, bool gaussian,
                       std::vector<std::vector<GInt>>& out) {
  std::vector<GInt> vals;
  for (int re = -height; re <= height; ++re) {
    if (gaussian) {
      // axis values only: a or a*i (keeps the space tractable)
      vals.push_back({re, 0});
      if (re != 0) vals.push_back({0, re});
    } else {
      vals.push_back({re, 0});
    }
  }
  std::vector<GInt> cur(m);
  auto maxnorm = [](const std::vector<GInt>& v) {
    std::int64_t h = 0;
    for (const auto& x : v) h = std::max({h, std::abs(x.re), std::abs(x.im)});
    return h;
  };
  auto rec = [&](auto&& self, int i) -> void {
    if (i == m) {
      int fn = -1;
      for (int k = 0; k < m; ++k)
        if (!cur[k].zero()) {
          fn = k;
          break;
        }
      if (fn < 0) return;
      if (!(cur[fn].re > 0 || (cur[fn].re == 0 && cur[fn].im > 0))) return;
      if (maxnorm(cur) != height) return;  // exact-height shell
      out.push_back(cur);
      return;
    }
    for (const auto& v : vals) {
      cur[i] = v;
      self(self, i + 1);
    }
    cur[i] = GInt{};
  };
  rec(rec, 0);
}

struct SearchCtx {
  int m;
  const std::vector<std::vector<std::vector<std::int64_t>>>* forms;
  const std::vector<std::vector<GInt>>* vecs;
  int target = 0;
  std::vector<int> best;
  std::vector<int> cur;

  bool isotropic_pair(const std::vector<GInt>& v, const std::vector<GInt>& w) const {
    for (const auto& f : *forms) {
      std::int64_t sre = 0, sim = 0;
      for (int i = 0; i < m; ++i) {
        if (v[i].zero()) continue;
        for (int j = 0; j < m; ++j) {
          std::int64_t fij = f[i][j];
          if (fij == 0 || w[j].zero()) continue;
          // v_i * f_ij * w_j (complex bilinear)
          std::int64_t re = v[i].re * w[j].re - v[i].im * w[j].im;
          std::int64_t im = v[i].re * w[j].im + v[i].im * w[j].re;
          sre += fij * re;
          sim += fij * im;
        }
      }
      if (sre != 0 || sim != 0) return false;
    }
    return true;
  }
};

// incremental independence via exact echelon on the selected set
bool independent(const std::vector<std::vector<GInt>>& vecs, const std::vector<int>& sel,
                 int cand, int m) {
  Mat rows(sel.size() + 1, m);
  for (std::size_t r = 0; r < sel.size() + 1; ++r) {
    const auto& v = (r < sel.size()) ? vecs[sel[r]] : vecs[cand];
    for (int c = 0; c < m; ++c)
      rows(r, c) = Scalar(Rat(static_cast<long>(v[c].re)),
                          Rat(static_cast<long>(v[c].im)));
  }
  return rows.rref().size() == sel.size() + 1;
}

bool dfs(SearchCtx& ctx, std::size_t start) {
  if (ctx.cur.size() > ctx.best.size()) ctx.best = ctx.cur;
  if (static_cast<int>(ctx.cur.size()) == ctx.target) return true;
  const auto& vecs = *ctx.vecs;
  for (std::size_t i = start; i < vecs.size(); ++i) {
    bool ok = true;
    for (int s : ctx.cur)
      if (!ctx.isotropic_pair(vecs[i], vecs[s])) {
        ok = false;
        break;
      }
    if (!ok) continue;
    if (!independent(vecs, ctx.cur, static_cast<int>(i), ctx.m)) continue;
    ctx.cur.push_back(static_cast<int>(i));
    if (dfs(ctx, i + 1)) return true;
    ctx.cur.pop_back();
  }
  return false;
}

}  // namespace

CertifiedValue max_abelian(const LieAlgebra& a, const MaxAbelianOptions& opt) {
  if (!is_two_step(a))
    throw std::domain_error("max_abelian requires a 2-step nilpotent algebra");
  const int n = a.dim();
  QuotientForms q = quotient_forms(a);
  if (q.forms.empty()) {
    CertifiedValue cv{n, n, Subspace(n)};
    return cv;
  }
  const int r = static_cast<int>(q.forms.size());

  // upper bound: m - rank(w_lambda)/2 over each component form and sampled
  // rational combinations
  int ub = q.m;
  Rng rng(opt.seed);
  std::vector<std::vector<Scalar>> lambdas;
  for (int s = 0; s < r; ++s) {
    std::vector<Scalar> lam(r);
    lam[s] = Scalar(1);
    lambdas.push_back(std::move(lam));
  }
  for (int it = 0; it < opt.samples; ++it) {
    std::vector<Scalar> lam(r);
    bool nz = false;
    for (int s = 0; s < r; ++s) {
      lam[s] = Scalar(Rat(rng.intrange(-5, 5)));
      nz = nz || !lam[s].is_zero();
    }
    if (nz) lambdas.push_back(std::move(lam));
  }
  for (const auto& lam : lambdas) {
    Mat w(q.m, q.m);
    for (int s = 0; s < r; ++s) {
      if (lam[s].is_zero()) continue;
      for (int i = 0; i < q.m; ++i)
        for (int j = 0; j < q.m; ++j)
          if (!q.exact[s](i, j).is_zero()) w(i, j) += lam[s] * q.exact[s](i, j);
    }
    int bound = q.m - static_cast<int>(w.rank()) / 2;
    ub = std::min(ub, bound);
  }

  // lower bound: backtracking search over small-height vectors, capped at
  // quotient dimension 6 and 3 component forms (the catalog maximum)
  int lo = (q.m > 0) ? 1 : 0;  // a line is always isotropic for alternating forms
  std::vector<std::vector<GInt>> found_witness;
  bool searched = q.m <= 6 && r <= 3 && q.int_ok;
  if (searched && q.m > 0) {
    std::vector<std::vector<GInt>> vecs;
    for (int h = 1; h <= opt.height; ++h)
      enumerate_vectors(q.m, h, opt.gaussian, vecs);
    SearchCtx ctx;
    ctx.m = q.m;
    ctx.forms = &q.forms;
    ctx.vecs = &vecs;
    ctx.target = ub;
    dfs(ctx, 0);
    lo = std::max(lo, static_cast<int>(ctx.best.size()));
    for (int s : ctx.best) found_witness.push_back(vecs[s]);
  }

  CertifiedValue cv;
  cv.lower = q.zdim + lo;
  cv.upper = q.zdim + ub;
  if (!found_witness.empty()) {
    // lift quotient vectors into ambient coordinates
    std::vector<std::vector<Scalar>> lifted;
    for (const auto& v : found_witness) {
      std::vector<Scalar> x(n);
      for (int i = 0; i < q.m; ++i)
        x[q.comp[i]] = Scalar(Rat(static_cast<long>(v[i].re)),
                              Rat(static_cast<long>(v[i].im)));
      lifted.push_back(std::move(x));
    }
    cv.witness = Subspace::span(n, lifted);
  }
  return cv;
}

}  // namespace liedeg
