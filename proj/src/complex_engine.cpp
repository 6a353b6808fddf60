#include "cyclohom/complex_engine.hpp"

#include <algorithm>
#include <stdexcept>

namespace cyclohom {

ChainComplex::ChainComplex(i64 p_, int lo_, int hi_) : p(p_), lo(lo_), hi(hi_) {
  int w = hi >= lo ? hi - lo + 1 : 0;
  dims_.assign(w, 0);
  d_.assign(w, SpMat(p, 0, 0));
}

int ChainComplex::dim(int n) const {
  if (n < lo || n > hi) return 0;
  return dims_[n - lo];
}

SpMat ChainComplex::diff(int n) const {
  if (n < lo || n > hi) return SpMat(p, dim(n - 1), 0);
  return d_[n - lo];
}

void ChainComplex::set_dim(int n, int d) {
  if (n < lo || n > hi) throw std::out_of_range("degree outside window");
  dims_[n - lo] = d;
}

void ChainComplex::set_diff(int n, SpMat m) {
  if (n < lo || n > hi) throw std::out_of_range("degree outside window");
  d_[n - lo] = std::move(m);
}

void ChainComplex::validate() const {
  for (int n = lo; n <= hi; ++n) {
    SpMat d = diff(n);
    if (d.cols != dim(n) || d.rows != dim(n - 1))
      throw std::logic_error("differential shape mismatch at degree " + std::to_string(n));
    if (n > lo) {
      if (!sp_mul(diff(n - 1), d).is_zero())
        throw std::logic_error("d*d != 0 at degree " + std::to_string(n));
    }
  }
}

int ChainComplex::homology_dim(int n) const {
  if (dim(n) == 0) return 0;
  int ker = dim(n) - sp_rank(diff(n));
  int im = sp_rank(diff(n + 1));
  return ker - im;
}

SpMat ChainMap::at(int n) const {
  if (n < src->lo || n > src->hi || n < dst->lo || n > dst->hi)
    return SpMat(src->p, dst->dim(n), src->dim(n));
  return f[n - src->lo];
}

void ChainMap::validate() const {
  for (int n = src->lo; n <= src->hi; ++n) {
    SpMat lhs = sp_mul(dst->diff(n), at(n));
    SpMat rhs = sp_mul(at(n - 1), src->diff(n));
    if (!sp_equal(lhs, rhs)) throw std::logic_error("chain map does not commute with d");
  }
}

ChainMap make_chain_map(const ChainComplex& src, const ChainComplex& dst,
                        const std::vector<std::pair<int, SpMat>>& comps) {
  ChainMap m;
  m.src = &src;
  m.dst = &dst;
  m.f.assign(src.hi >= src.lo ? src.hi - src.lo + 1 : 0, SpMat());
  for (int n = src.lo; n <= src.hi; ++n) m.f[n - src.lo] = SpMat(src.p, dst.dim(n), src.dim(n));
  for (auto& [n, mat] : comps) m.f[n - src.lo] = mat;
  return m;
}

ChainComplex cone(const ChainMap& f) {
  const ChainComplex& c = *f.src;
  const ChainComplex& d = *f.dst;
  if (c.p != d.p) throw std::invalid_argument("cone field mismatch");
  int lo = std::min(c.lo + 1, d.lo), hi = std::max(c.hi + 1, d.hi);
  ChainComplex out(c.p, lo, hi);
  for (int n = lo; n <= hi; ++n) out.set_dim(n, d.dim(n) + c.dim(n - 1));
  for (int n = lo; n <= hi; ++n) {
    // cone_n = D_n (+) C_{n-1}; d(x, y) = (d_D x + f y, -d_C y)
    int rows = out.dim(n - 1), cols = out.dim(n);
    SpMat m(c.p, rows, cols);
    SpMat dd = d.diff(n), fc = f.at(n - 1), dc = c.diff(n - 1);
    for (int r = 0; r < dd.rows; ++r)
      for (auto& [cc, v] : dd.row[r]) m.row[r].emplace_back(cc, v);
    for (int r = 0; r < fc.rows; ++r)
      for (auto& [cc, v] : fc.row[r]) m.row[r].emplace_back(d.dim(n) + cc, v);
    for (int r = 0; r < dc.rows; ++r)
      for (auto& [cc, v] : dc.row[r])
        m.row[d.dim(n - 1) + r].emplace_back(d.dim(n) + cc, fp_norm(-v, c.p));
    for (auto& rw : m.row) std::sort(rw.begin(), rw.end());
    out.set_diff(n, std::move(m));
  }
  return out;
}

ChainComplex shift(const ChainComplex& c, int k) {
  ChainComplex out(c.p, c.lo + k, c.hi + k);
  for (int n = c.lo; n <= c.hi; ++n) out.set_dim(n + k, c.dim(n));
  for (int n = c.lo; n <= c.hi; ++n) {
    SpMat m = c.diff(n);
    if (k % 2 != 0) m = sp_scale(m, c.p - 1);
    out.set_diff(n + k, std::move(m));
  }
  return out;
}

ChainComplex direct_sum(const ChainComplex& a, const ChainComplex& b) {
  if (a.p != b.p) throw std::invalid_argument("direct_sum field mismatch");
  int lo = std::min(a.lo, b.lo), hi = std::max(a.hi, b.hi);
  ChainComplex out(a.p, lo, hi);
  for (int n = lo; n <= hi; ++n) out.set_dim(n, a.dim(n) + b.dim(n));
  for (int n = lo; n <= hi; ++n) {
    SpMat da = a.diff(n), db = b.diff(n);
    SpMat m(a.p, a.dim(n - 1) + b.dim(n - 1), a.dim(n) + b.dim(n));
    for (int r = 0; r < da.rows; ++r) m.row[r] = da.row[r];
    for (int r = 0; r < db.rows; ++r)
      for (auto& [c, v] : db.row[r]) m.row[a.dim(n - 1) + r].emplace_back(a.dim(n) + c, v);
    out.set_diff(n, std::move(m));
  }
  return out;
}

std::vector<i64> HomologySpace::coords(const std::vector<i64>& cycle) const {
  // Reduce against [boundaries | reps] with tracking on the reps slots.
  int bdim = boundaries.cols;
  Eliminator el(p, ambient, bdim + dim);
  SpMat bt = sp_transpose(boundaries);
  for (int j = 0; j < bdim; ++j) el.add(bt.row[j], SparseVec{{j, 1}});
  SpMat rt = sp_transpose(reps);
  for (int j = 0; j < dim; ++j) el.add(rt.row[j], SparseVec{{bdim + j, 1}});
  SparseVec comb;
  SparseVec residue = el.reduce(sv_from_dense(cycle, p), &comb);
  if (!residue.empty()) throw std::invalid_argument("not a cycle class in this homology");
  std::vector<i64> out(dim, 0);
  for (auto& [slot, c] : comb)
    if (slot >= bdim) out[slot - bdim] = fp_norm(-c, p);
  return out;
}

HomologySpace homology(const ChainComplex& c, int n) {
  HomologySpace h;
  h.p = c.p;
  h.ambient = c.dim(n);
  Subspace cycles = sp_kernel(c.diff(n));
  Subspace bnd = sp_image(c.diff(n + 1));
  h.boundaries = bnd.basis;
  // representatives: cycle basis vectors independent modulo boundaries
  Eliminator el(c.p, h.ambient);
  SpMat bt = sp_transpose(bnd.basis);
  for (int j = 0; j < bnd.dim(); ++j) el.add(bt.row[j]);
  SpMat zt = sp_transpose(cycles.basis);
  std::vector<SparseVec> reps;
  for (int j = 0; j < cycles.dim(); ++j)
    if (el.add(zt.row[j])) reps.push_back(zt.row[j]);
  h.dim = static_cast<int>(reps.size());
  SpMat tmp(c.p, h.dim, h.ambient);
  for (int j = 0; j < h.dim; ++j) tmp.row[j] = reps[j];
  h.reps = sp_transpose(tmp);
  return h;
}

SpMat induced_on_homology(const ChainMap& f, int n) {
  HomologySpace hs = homology(*f.src, n);
  HomologySpace hd = homology(*f.dst, n);
  SpMat out(f.src->p, hd.dim, hs.dim);
  SpMat mapped = sp_mul(f.at(n), hs.reps);
  for (int j = 0; j < hs.dim; ++j) {
    std::vector<i64> col(mapped.rows, 0);
    for (int r = 0; r < mapped.rows; ++r) col[r] = mapped.get(r, j);
    std::vector<i64> co = hd.coords(col);
    for (int r = 0; r < hd.dim; ++r)
      if (co[r]) out.set(r, j, co[r]);
  }
  return out;
}

SpMat MixedComplex::B(int n) const {
  if (n < base.lo || n > base.hi) return SpMat(base.p, base.dim(n + 1), 0);
  return B_[n - base.lo];
}

void MixedComplex::set_B(int n, SpMat m) {
  if (B_.size() != base.dims_.size()) B_.assign(base.dims_.size(), SpMat());
  B_[n - base.lo] = std::move(m);
}

void MixedComplex::validate() const {
  base.validate();
  for (int n = base.lo; n <= base.hi; ++n) {
    SpMat b = B(n);
    if (b.cols != base.dim(n) || b.rows != base.dim(n + 1))
      throw std::logic_error("B shape mismatch");
    if (n + 1 <= base.hi && !sp_mul(B(n + 1), b).is_zero()) throw std::logic_error("B*B != 0");
    // strict dB + Bd = 0
    SpMat s = sp_add(sp_mul(base.diff(n + 1), b), sp_mul(B(n - 1), base.diff(n)));
    if (!s.is_zero()) throw std::logic_error("dB + Bd != 0");
  }
}

BicomplexWindow::BicomplexWindow(i64 p_, int i0_, int i1_, int j0_, int j1_)
    : p(p_), i0(i0_), i1(i1_), j0(j0_), j1(j1_) {
  int w = (i1 - i0 + 1) * (j1 - j0 + 1);
  dims_.assign(w, 0);
  dh_.assign(w, SpMat());
  dv_.assign(w, SpMat());
}

int BicomplexWindow::idx(int i, int j) const { return (i - i0) * (j1 - j0 + 1) + (j - j0); }
int BicomplexWindow::dim(int i, int j) const {
  if (i < i0 || i > i1 || j < j0 || j > j1) return 0;
  return dims_[idx(i, j)];
}
SpMat BicomplexWindow::dh(int i, int j) const {
  if (i < i0 || i > i1 || j < j0 || j > j1 || dh_[idx(i, j)].p == 0)
    return SpMat(p, dim(i - 1, j), dim(i, j));
  return dh_[idx(i, j)];
}
SpMat BicomplexWindow::dv(int i, int j) const {
  if (i < i0 || i > i1 || j < j0 || j > j1 || dv_[idx(i, j)].p == 0)
    return SpMat(p, dim(i, j - 1), dim(i, j));
  return dv_[idx(i, j)];
}
void BicomplexWindow::set_dim(int i, int j, int d) { dims_[idx(i, j)] = d; }
void BicomplexWindow::set_dh(int i, int j, SpMat m) { dh_[idx(i, j)] = std::move(m); }
void BicomplexWindow::set_dv(int i, int j, SpMat m) { dv_[idx(i, j)] = std::move(m); }

void BicomplexWindow::validate() const {
  for (int i = i0; i <= i1; ++i)
    for (int j = j0; j <= j1; ++j) {
      if (dh(i, j).cols != dim(i, j) || dh(i, j).rows != dim(i - 1, j))
        throw std::logic_error("dh shape");
      if (dv(i, j).cols != dim(i, j) || dv(i, j).rows != dim(i, j - 1))
        throw std::logic_error("dv shape");
      if (i > i0 && !sp_mul(dh(i - 1, j), dh(i, j)).is_zero()) throw std::logic_error("dh^2 != 0");
      if (j > j0 && !sp_mul(dv(i, j - 1), dv(i, j)).is_zero()) throw std::logic_error("dv^2 != 0");
      if (i > i0 && j > j0) {
        SpMat s = sp_add(sp_mul(dv(i - 1, j), dh(i, j)), sp_mul(dh(i, j - 1), dv(i, j)));
        if (!s.is_zero()) throw std::logic_error("dh and dv do not anticommute");
      }
    }
}

ChainComplex total(const BicomplexWindow& b, TotalMode) {
  // sum and product totals coincide on a finite rectangle
  int lo = b.i0 + b.j0, hi = b.i1 + b.j1;
  ChainComplex out(b.p, lo, hi);
  // cells of degree n, ordered by i ascending
  auto cells = [&](int n) {
    std::vector<std::pair<int, int>> cs;  // (i, offset)
    int off = 0;
    for (int i = b.i0; i <= b.i1; ++i) {
      int j = n - i;
      if (j < b.j0 || j > b.j1) continue;
      if (b.dim(i, j) > 0) {
        cs.emplace_back(i, off);
        off += b.dim(i, j);
      }
    }
    return cs;
  };
  for (int n = lo; n <= hi; ++n) {
    int total_dim = 0;
    for (auto& [i, off] : cells(n)) total_dim = off + b.dim(i, n - i);
    out.set_dim(n, total_dim);
  }
  for (int n = lo; n <= hi; ++n) {
    auto cs = cells(n), ct = cells(n - 1);
    auto off_of = [&](const std::vector<std::pair<int, int>>& v, int i) {
      for (auto& [ii, off] : v)
        if (ii == i) return off;
      return -1;
    };
    SpMat m(b.p, out.dim(n - 1), out.dim(n));
    for (auto& [i, off] : cs) {
      int j = n - i;
      // horizontal to (i-1, j), vertical to (i, j-1)
      int oh = off_of(ct, i - 1);
      if (oh >= 0) {
        SpMat h = b.dh(i, j);
        for (int r = 0; r < h.rows; ++r)
          for (auto& [c, v] : h.row[r]) m.row[oh + r].emplace_back(off + c, v);
      }
      int ov = off_of(ct, i);
      if (ov >= 0) {
        SpMat vmat = b.dv(i, j);
        for (int r = 0; r < vmat.rows; ++r)
          for (auto& [c, v] : vmat.row[r]) m.row[ov + r].emplace_back(off + c, v);
      }
    }
    for (auto& rw : m.row) std::sort(rw.begin(), rw.end());
    out.set_diff(n, std::move(m));
  }
  return out;
}

Subspace FilteredComplex::filt(int i, int n) const {
  if (n < base.lo || n > base.hi) return subspace_zero(base.p, 0);
  if (i <= fmin) return subspace_full(base.p, base.dim(n));
  if (i > fmax) return subspace_zero(base.p, base.dim(n));
  return sub_[(i - fmin) * (base.hi - base.lo + 1) + (n - base.lo)];
}

void FilteredComplex::set_filt(int i, int n, Subspace s) {
  int w = base.hi - base.lo + 1;
  size_t need = static_cast<size_t>(fmax - fmin + 1) * w;
  if (sub_.size() != need) {
    sub_.clear();
    for (int ii = fmin; ii <= fmax; ++ii)
      for (int nn = base.lo; nn <= base.hi; ++nn)
        sub_.push_back(ii <= fmin ? subspace_full(base.p, base.dim(nn))
                                  : subspace_zero(base.p, base.dim(nn)));
  }
  sub_[(i - fmin) * w + (n - base.lo)] = std::move(s);
}

void FilteredComplex::validate() const {
  base.validate();
  for (int i = fmin; i <= fmax + 1; ++i)
    for (int n = base.lo; n <= base.hi; ++n) {
      Subspace fi = filt(i, n);
      if (!sub_leq(filt(i + 1, n), fi, base.p))
        throw std::logic_error("filtration not decreasing");
      // d-stability
      Subspace img = sp_image(sp_mul(base.diff(n), fi.basis));
      img.ambient_dim = base.dim(n - 1);
      if (!sub_leq(img, filt(i, n - 1), base.p))
        throw std::logic_error("filtration not d-stable");
    }
}

int FilteredComplex::gr_dim(int i, int n) const {
  return filt(i, n).dim() - filt(i + 1, n).dim();
}

FilteredComplex trivial_filtration(const ChainComplex& c) {
  FilteredComplex fc;
  fc.base = c;
  fc.fmin = 0;
  fc.fmax = 0;
  for (int n = c.lo; n <= c.hi; ++n) fc.set_filt(0, n, subspace_full(c.p, c.dim(n)));
  return fc;
}

namespace {

Subspace tau_term(const FilteredComplex& fc, int n, int i) {
  // tau^n_i = d^{-1}(F^{n+1-i} C_{i-1}) cap F^{n-i} C_i
  const ChainComplex& c = fc.base;
  Subspace pre = sub_preimage(c.diff(i), fc.filt(n + 1 - i, i - 1));
  return sub_intersect(pre, fc.filt(n - i, i), c.p);
}

Subspace beta_term(const FilteredComplex& fc, int n, int i) {
  // beta^n_i = F^{n+1-i} C_i + d(F^{n-i} C_{i+1})
  const ChainComplex& c = fc.base;
  Subspace img = sp_image(sp_mul(c.diff(i + 1), fc.filt(n - i, i + 1).basis));
  img.ambient_dim = c.dim(i);
  return sub_sum(fc.filt(n + 1 - i, i), img, c.p);
}

// Re-coordinatize a degreewise family of subspaces (closed under d) as a
// complex with induced filtration.
FilteredComplex subquotient_complex(const FilteredComplex& fc,
                                    const std::vector<Subspace>& subs,
                                    const std::vector<Subspace>* quot_by) {
  const ChainComplex& c = fc.base;
  FilteredComplex out;
  if (!quot_by) {
    // subcomplex
    ChainComplex cc(c.p, c.lo, c.hi);
    for (int n = c.lo; n <= c.hi; ++n) cc.set_dim(n, subs[n - c.lo].dim());
    for (int n = c.lo; n <= c.hi; ++n)
      cc.set_diff(n, restrict_map(c.diff(n), subs[n - c.lo],
                                  n - 1 >= c.lo ? subs[n - 1 - c.lo]
                                                : subspace_zero(c.p, c.dim(n - 1))));
    out.base = cc;
    out.fmin = fc.fmin;
    out.fmax = fc.fmax;
    for (int i = fc.fmin + 1; i <= fc.fmax; ++i)
      for (int n = c.lo; n <= c.hi; ++n) {
        Subspace inter = sub_intersect(fc.filt(i, n), subs[n - c.lo], c.p);
        // coordinates in sub basis
        SpMat coords(c.p, subs[n - c.lo].dim(), inter.dim());
        for (int j = 0; j < inter.dim(); ++j) {
          std::vector<i64> col(c.dim(n), 0), x;
          for (int r = 0; r < c.dim(n); ++r) col[r] = inter.basis.get(r, j);
          if (!solve(subs[n - c.lo].basis, col, &x)) throw std::logic_error("induced filt escape");
          for (int r = 0; r < subs[n - c.lo].dim(); ++r)
            if (x[r]) coords.set(r, j, x[r]);
        }
        Subspace s{subs[n - c.lo].dim(), coords};
        out.set_filt(i, n, s);
      }
    return out;
  }
  // quotient subs[n] / quot_by[n] (quot_by[n] <= subs[n])
  const std::vector<Subspace>& qb = *quot_by;
  ChainComplex cc(c.p, c.lo, c.hi);
  std::vector<SpMat> inner_q;  // quotient map in sub coordinates
  std::vector<SpMat> sub_basis;
  for (int n = c.lo; n <= c.hi; ++n) {
    const Subspace& s = subs[n - c.lo];
    // write quot_by in s-coordinates
    SpMat qcoords(c.p, s.dim(), qb[n - c.lo].dim());
    for (int j = 0; j < qb[n - c.lo].dim(); ++j) {
      std::vector<i64> col(c.dim(n), 0), x;
      for (int r = 0; r < c.dim(n); ++r) col[r] = qb[n - c.lo].basis.get(r, j);
      if (!solve(s.basis, col, &x)) throw std::logic_error("quotient not inside sub");
      for (int r = 0; r < s.dim(); ++r)
        if (x[r]) qcoords.set(r, j, x[r]);
    }
    Subspace w{s.dim(), qcoords};
    SpMat q = quotient_map(w, c.p, s.dim());
    cc.set_dim(n, q.rows);
    inner_q.push_back(q);
    sub_basis.push_back(s.basis);
  }
  for (int n = c.lo; n <= c.hi; ++n) {
    // induced differential: lift quotient coords? Use: q_{n-1} * restrict(d)
    if (n == c.lo) {
      cc.set_diff(n, SpMat(c.p, 0, cc.dim(n)));
      continue;
    }
    Subspace sn = subs[n - c.lo], sm = subs[n - 1 - c.lo];
    SpMat dres = restrict_map(c.diff(n), sn, sm);
    // induced differential: lift each quotient basis vector through q_n, apply
    // d, push forward with q_{n-1} (well defined since quot_by is d-stable)
    const SpMat& qn = inner_q[n - c.lo];
    SpMat section(c.p, qn.cols, qn.rows);
    for (int i = 0; i < qn.rows; ++i) {
      std::vector<i64> e(qn.rows, 0), x;
      e[i] = 1;
      if (!solve(qn, e, &x)) throw std::logic_error("quotient map not surjective");
      for (int r = 0; r < qn.cols; ++r)
        if (x[r]) section.set(r, i, x[r]);
    }
    cc.set_diff(n, sp_mul(sp_mul(inner_q[n - 1 - c.lo], dres), section));
  }
  // fix degree lo differential target (dim of lo-1 is 0 anyway)
  out.base = cc;
  out.fmin = fc.fmin;
  out.fmax = fc.fmax;
  for (int i = fc.fmin + 1; i <= fc.fmax; ++i)
    for (int n = c.lo; n <= c.hi; ++n) {
      Subspace inter = sub_intersect(fc.filt(i, n), subs[n - c.lo], c.p);
      // push to quotient coords: coords in sub basis, then inner_q
      SpMat coords(c.p, subs[n - c.lo].dim(), inter.dim());
      for (int j = 0; j < inter.dim(); ++j) {
        std::vector<i64> col(c.dim(n), 0), x;
        for (int r = 0; r < c.dim(n); ++r) col[r] = inter.basis.get(r, j);
        if (!solve(subs[n - c.lo].basis, col, &x)) throw std::logic_error("filt escape");
        for (int r = 0; r < subs[n - c.lo].dim(); ++r)
          if (x[r]) coords.set(r, j, x[r]);
      }
      SpMat pushed = sp_mul(inner_q[n - c.lo], coords);
      Subspace img = sp_image(pushed);
      img.ambient_dim = cc.dim(n);
      out.set_filt(i, n, img);
    }
  return out;
}

}  // namespace

FilteredComplex truncate(const FilteredComplex& fc, TruncKind kind, int n) {
  const ChainComplex& c = fc.base;
  std::vector<Subspace> subs;
  for (int i = c.lo; i <= c.hi; ++i)
    subs.push_back(kind == TruncKind::tau ? tau_term(fc, n, i) : beta_term(fc, n, i));
  return subquotient_complex(fc, subs, nullptr);
}

FilteredComplex h_trunc(const FilteredComplex& fc, int n) {
  const ChainComplex& c = fc.base;
  std::vector<Subspace> tau, beta;
  for (int i = c.lo; i <= c.hi; ++i) {
    tau.push_back(tau_term(fc, n, i));
    Subspace b = beta_term(fc, n, i);
    beta.push_back(sub_intersect(b, tau.back(), c.p));  // beta^n cap tau^n (= beta within tau)
  }
  return subquotient_complex(fc, tau, &beta);
}

int ss_page(const FilteredComplex& fc, int r, int i, int n) {
  if (r < 1) throw std::invalid_argument("page r >= 1 required");
  const ChainComplex& c = fc.base;
  auto Z = [&](int rr, int ii, int nn) -> Subspace {
    if (rr < 0) rr = 0;
    Subspace pre = sub_preimage(c.diff(nn), fc.filt(ii + rr, nn - 1));
    return sub_intersect(pre, fc.filt(ii, nn), c.p);
  };
  Subspace zr = Z(r, i, n);
  Subspace z1 = Z(r - 1, i + 1, n);
  Subspace z2 = Z(r - 1, i - r + 1, n + 1);
  Subspace dz2 = sp_image(sp_mul(c.diff(n + 1), z2.basis));
  dz2.ambient_dim = c.dim(n);
  Subspace den = sub_sum(z1, dz2, c.p);
  Subspace denin = sub_intersect(den, zr, c.p);
  return zr.dim() - denin.dim();
}

int ss_einf(const FilteredComplex& fc, int i, int n) {
  int span = fc.fmax - fc.fmin + 2;
  int big = span + (fc.base.hi - fc.base.lo) + 2;
  return ss_page(fc, big, i, n);
}

StabResult stabilized_homology(const Tower& t, int n, const StabPolicy& policy) {
  StabResult res;
  int nstages = std::min<int>(static_cast<int>(t.stages.size()), policy.max_stages);
  res.stages_used = nstages;
  if (nstages == 0) return res;
  std::vector<int> hdims(nstages);
  for (int s = 0; s < nstages; ++s) hdims[s] = t.stages[s].homology_dim(n);
  // induced map ranks between consecutive stages
  std::vector<int> ranks(std::max(0, nstages - 1));
  std::vector<bool> iso(std::max(0, nstages - 1), false);
  for (int s = 0; s + 1 < nstages; ++s) {
    const ChainMap& m = t.maps[s];
    SpMat ind = induced_on_homology(m, n);
    ranks[s] = sp_rank(ind);
    int a = t.quotient ? hdims[s + 1] : hdims[s];
    int b = t.quotient ? hdims[s] : hdims[s + 1];
    iso[s] = (a == b) && (ranks[s] == a);
  }
  // find policy.steps consecutive stages with isomorphic comparison maps
  int need = policy.steps - 1;  // number of iso maps linking `steps` stages
  if (need <= 0) need = 0;
  if (need <= 0) {
    res.stabilized = true;
    res.dim = hdims[0];
    res.certificate = StabCertificate{0, hdims[0], {}};
    return res;
  }
  for (int s = 0; s + need <= nstages - 1; ++s) {
    bool ok = true;
    for (int k = 0; k < need; ++k)
      if (!iso[s + k]) { ok = false; break; }
    if (ok) {
      res.stabilized = true;
      res.dim = hdims[s];
      StabCertificate cert;
      cert.stage = s;
      cert.dim = hdims[s];
      for (int k = 0; k < need; ++k) cert.map_ranks.push_back(ranks[s + k]);
      res.certificate = cert;
      return res;
    }
  }
  return res;
}

}  // namespace cyclohom
