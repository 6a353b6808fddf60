#include "cyclohom/cyclic_group_tate.hpp"

#include <algorithm>
#include <climits>
#include <stdexcept>

namespace cyclohom {

namespace {

SpMat mat_pow(const SpMat& m, int k) {
  SpMat out = SpMat::identity(m.p, m.cols);
  for (int i = 0; i < k; ++i) out = sp_mul(m, out);
  return out;
}

// 1 - s and the norm 1 + s + ... + s^{order-1}
SpMat one_minus(const SpMat& s) { return sp_sub(SpMat::identity(s.p, s.cols), s); }
SpMat norm_of(const SpMat& s, int order) {
  SpMat acc = SpMat::zero(s.p, s.rows, s.cols);
  SpMat pw = SpMat::identity(s.p, s.cols);
  for (int j = 0; j < order; ++j) {
    acc = sp_add(acc, pw);
    pw = sp_mul(s, pw);
  }
  return acc;
}

SpMat twist(const SpMat& s, int order, bool twisted) {
  if (!twisted || order % 2 == 1) return s;
  return sp_scale(s, s.p - 1);  // (-1)^{order+1} = -1 for even order
}

}  // namespace

void CyclicGroupModule::validate() const {
  if (sigma.rows != sigma.cols) throw std::invalid_argument("sigma not square");
  if (!sp_equal(mat_pow(sigma, order), SpMat::identity(p, sigma.cols)))
    throw std::invalid_argument("sigma^order != id");
}

SpMat CyclicGroupComplex::sigma(int n) const {
  if (n < base.lo || n > base.hi) return SpMat(base.p, 0, 0);
  return sigma_[n - base.lo];
}

void CyclicGroupComplex::set_sigma(int n, SpMat s) {
  if (sigma_.size() != base.dims_.size()) sigma_.assign(base.dims_.size(), SpMat());
  sigma_[n - base.lo] = std::move(s);
}

void CyclicGroupComplex::validate() const {
  base.validate();
  for (int n = base.lo; n <= base.hi; ++n) {
    SpMat s = sigma(n);
    if (s.rows != base.dim(n) || s.cols != base.dim(n))
      throw std::logic_error("sigma shape mismatch");
    if (!sp_equal(mat_pow(s, order), SpMat::identity(base.p, s.cols)))
      throw std::logic_error("sigma^order != id");
    if (n > base.lo && !sp_equal(sp_mul(sigma(n - 1), base.diff(n)), sp_mul(base.diff(n), s)))
      throw std::logic_error("sigma does not commute with d");
  }
}

CyclicGroupComplex from_module(const CyclicGroupModule& m, int degree) {
  CyclicGroupComplex c;
  c.order = m.order;
  c.base = ChainComplex(m.p, degree, degree);
  c.base.set_dim(degree, m.dim());
  c.base.set_diff(degree, SpMat(m.p, 0, m.dim()));
  c.set_sigma(degree, m.sigma);
  return c;
}

MixedComplex build_K(const CyclicGroupComplex& E, bool twisted) {
  i64 p = E.base.p;
  int lo = E.base.lo, hi = E.base.hi + 1;
  // degree n: E_n (K0 slot) (+) E_{n-1} (K1 slot)
  ChainComplex base(p, lo, hi);
  auto edim = [&](int n) { return E.base.dim(n); };
  for (int n = lo; n <= hi; ++n) base.set_dim(n, edim(n) + edim(n - 1));
  for (int n = lo; n <= hi; ++n) {
    SpMat m(p, base.dim(n - 1), base.dim(n));
    SpMat de = E.base.diff(n);
    for (int r = 0; r < de.rows; ++r) m.row[r] = de.row[r];  // K0 -> K0: d
    if (edim(n - 1) > 0) {
      SpMat s = twist(E.sigma(n - 1), E.order, twisted);
      SpMat h = one_minus(s);  // K1 -> K0: 1 - sigma
      for (int r = 0; r < h.rows; ++r)
        for (auto& [c, v] : h.row[r]) m.row[r].emplace_back(edim(n) + c, v);
      SpMat dn = sp_scale(E.base.diff(n - 1), p - 1);  // K1 -> K1: -d
      for (int r = 0; r < dn.rows; ++r)
        for (auto& [c, v] : dn.row[r]) m.row[edim(n - 1) + r].emplace_back(edim(n) + c, v);
    }
    for (auto& rw : m.row) std::sort(rw.begin(), rw.end());
    base.set_diff(n, m);
  }
  MixedComplex out;
  out.base = base;
  for (int n = lo; n <= hi; ++n) {
    SpMat b(p, base.dim(n + 1), base.dim(n));
    if (edim(n) > 0 && n + 1 <= hi) {
      SpMat s = twist(E.sigma(n), E.order, twisted);
      SpMat nm = norm_of(s, E.order);  // K0 at degree n -> K1 slot of degree n+1
      for (int r = 0; r < nm.rows; ++r)
        for (auto& [c, v] : nm.row[r]) b.row[edim(n + 1) + r].emplace_back(c, v);
    }
    out.set_B(n, b);
  }
  out.validate();
  return out;
}

ChainComplex periodic_expand(const MixedComplex& m, ExpandKind kind, int lo, int hi) {
  i64 p = m.base.p;
  ChainComplex out(p, lo, hi);
  // cells of degree n: pairs (k, m-degree n + 2k), k ascending
  auto cells = [&](int n) {
    std::vector<std::pair<int, int>> cs;  // (k, offset)
    int off = 0;
    // admissible k: M_{n+2k} inside M's window, so kmin = ceil((lo - n) / 2)
    int gap = m.base.lo - n;
    int kmin = gap >= 0 ? (gap + 1) / 2 : -((-gap) / 2);
    // exp only keeps m-degrees at or below n (the half-plane of cyclic homology)
    int kmax = kind == ExpandKind::exp ? 0 : INT_MAX;
    for (int k = kmin; k <= kmax && n + 2 * k <= m.base.hi; ++k) {
      if (n + 2 * k < m.base.lo) continue;
      if (m.base.dim(n + 2 * k) > 0) {
        cs.emplace_back(k, off);
        off += m.base.dim(n + 2 * k);
      }
    }
    return cs;
  };
  for (int n = lo; n <= hi; ++n) {
    int total = 0;
    for (auto& [k, off] : cells(n)) total = off + m.base.dim(n + 2 * k);
    out.set_dim(n, total);
  }
  for (int n = lo; n <= hi; ++n) {
    if (n == lo) {  // degree lo - 1 is outside the window: nothing to map to
      out.set_diff(n, SpMat(p, 0, out.dim(n)));
      continue;
    }
    auto cs = cells(n), ct = cells(n - 1);
    auto off_of = [&](const std::vector<std::pair<int, int>>& v, int k) {
      for (auto& [kk, off] : v)
        if (kk == k) return off;
      return -1;
    };
    SpMat mat(p, out.dim(n - 1), out.dim(n));
    for (auto& [k, off] : cs) {
      int deg = n + 2 * k;
      int od = off_of(ct, k);  // d: same k, m-degree drops by 1
      if (od >= 0) {
        SpMat d = m.base.diff(deg);
        for (int r = 0; r < d.rows; ++r)
          for (auto& [c, v] : d.row[r]) mat.row[od + r].emplace_back(off + c, v);
      }
      int ob = off_of(ct, k + 1);  // B u: k+1, m-degree rises by 1
      if (ob >= 0) {
        SpMat b = m.B(deg);
        for (int r = 0; r < b.rows; ++r)
          for (auto& [c, v] : b.row[r]) mat.row[ob + r].emplace_back(off + c, v);
      }
    }
    for (auto& rw : mat.row) std::sort(rw.begin(), rw.end());
    out.set_diff(n, mat);
  }
  return out;
}

std::vector<int> tate_dims(const CyclicGroupComplex& E, TateKind kind, bool twisted,
                           int deg_lo, int deg_hi) {
  MixedComplex k = build_K(E, twisted);
  ExpandKind ek = kind == TateKind::homology ? ExpandKind::exp
                : kind == TateKind::tate     ? ExpandKind::Per
                : kind == TateKind::cotate   ? ExpandKind::PerBar
                                             : ExpandKind::per;
  ChainComplex c = periodic_expand(k, ek, deg_lo - 1, deg_hi + 1);
  std::vector<int> dims;
  for (int n = deg_lo; n <= deg_hi; ++n) dims.push_back(c.homology_dim(n));
  return dims;
}

EpsilonMaps epsilon_maps(const CyclicGroupModule& m) {
  if (m.order < 1) throw std::invalid_argument("bad order");
  i64 p = m.p;
  int d = m.dim();
  // Jordan-block extension: sigma-tilde = [[sigma, sigma], [0, sigma]] on
  // E (+) E; sub copy first, quotient copy second.
  SpMat st(p, 2 * d, 2 * d);
  for (int r = 0; r < d; ++r)
    for (auto& [c, v] : m.sigma.row[r]) {
      st.row[r].emplace_back(c, v);
      st.row[r].emplace_back(d + c, v);
      st.row[d + r].emplace_back(d + c, v);
    }
  for (auto& rw : st.row) std::sort(rw.begin(), rw.end());

  // 2-periodic Tate complexes of E and E-tilde on a window
  auto tate_complex = [&](const SpMat& s, int dim, int lo, int hi) {
    ChainComplex c(p, lo, hi);
    for (int n = lo; n <= hi; ++n) c.set_dim(n, dim);
    for (int n = lo; n <= hi; ++n)
      c.set_diff(n, n == lo ? SpMat(p, 0, dim)
                            : (n % 2 != 0 ? one_minus(s) : norm_of(s, m.order)));
    return c;
  };
  ChainComplex ce = tate_complex(m.sigma, d, -2, 3);
  ChainComplex cm = tate_complex(st, 2 * d, -2, 3);

  // connecting map H_i(quotient copy) -> H_{i-1}(sub copy)
  auto connect = [&](int i) {
    HomologySpace hs = homology(ce, i);
    HomologySpace hd = homology(ce, i - 1);
    SpMat out(p, hd.dim, hs.dim);
    for (int j = 0; j < hs.dim; ++j) {
      std::vector<i64> lift(2 * d, 0);
      for (int r = 0; r < d; ++r) lift[d + r] = hs.reps.get(r, j);
      std::vector<i64> img = sp_apply(cm.diff(i), lift);
      std::vector<i64> sub(d, 0);
      for (int r = 0; r < d; ++r) {
        sub[r] = img[r];
        if (img[d + r] != 0) throw std::logic_error("connecting map left the sub copy");
      }
      std::vector<i64> co = hd.coords(sub);
      for (int r = 0; r < hd.dim; ++r)
        if (co[r]) out.set(r, j, co[r]);
    }
    return out;
  };
  EpsilonMaps eps;
  eps.h_odd_dim = homology(ce, 1).dim;
  eps.h_even_dim = homology(ce, 0).dim;
  eps.eps_odd = connect(1);   // H_1 -> H_0
  eps.eps_even = connect(2);  // H_2 = H_0 -> H_1
  return eps;
}

bool module_tight(const CyclicGroupModule& m) {
  EpsilonMaps e = epsilon_maps(m);
  return e.h_odd_dim == e.h_even_dim && sp_rank(e.eps_odd) == e.h_odd_dim;
}

int module_I_dim(const CyclicGroupModule& m) { return epsilon_maps(m).h_odd_dim; }

TightReport is_tight(const CyclicGroupComplex& E, i64 p) {
  if (E.order != p) throw std::invalid_argument("group order must equal p");
  TightReport rep;
  rep.tight = true;
  for (int n = E.base.lo; n <= E.base.hi; ++n) {
    if (E.base.dim(n) == 0) continue;
    CyclicGroupModule m{E.base.p, E.order, E.sigma(n)};
    bool t = module_tight(m);
    int idim = module_I_dim(m);
    rep.degrees.push_back(n);
    rep.degree_tight.push_back(t);
    rep.I_dims.push_back(idim);
    if (!t) rep.tight = false;
    if (idim != 0 && n % static_cast<int>(p) != 0) rep.support_ok = false;
  }
  if (!rep.support_ok) rep.tight = false;
  return rep;
}

std::vector<int> extended_tate_dims(int sub_order, int ambient_order,
                                    const CyclicGroupComplex& E, TateKind kind,
                                    int deg_lo, int deg_hi) {
  if (ambient_order % sub_order != 0) throw std::invalid_argument("sub order must divide ambient");
  if (E.order != sub_order) throw std::invalid_argument("complex order mismatch");
  i64 p = E.base.p;
  int m = ambient_order, step = ambient_order / sub_order;
  // regular representation of the ambient group: cyclic shift P
  SpMat P(p, m, m);
  for (int i = 0; i < m; ++i) P.set((i + 1) % m, i, 1);
  SpMat Pk = mat_pow(P, step);  // generator of the subgroup inside the ambient one
  SpMat Im = SpMat::identity(p, m);

  // per degree: coinvariants of R[C'] (x) E_n under the diagonal subgroup action
  struct Q {
    SpMat proj;     // quotient map
    SpMat section;  // right inverse
    int dim = 0;
  };
  auto coinv = [&](int n) {
    Q q;
    int dn = E.base.dim(n);
    if (dn == 0) { q.proj = SpMat(p, 0, 0); q.section = SpMat(p, 0, 0); return q; }
    SpMat act = sp_kron(Pk, E.sigma(n));
    SpMat rel = sp_sub(act, SpMat::identity(p, m * dn));
    Subspace w = sp_image(rel);
    w.ambient_dim = m * dn;
    q.proj = quotient_map(w, p, m * dn);
    q.dim = q.proj.rows;
    q.section = SpMat(p, m * dn, q.dim);
    for (int i = 0; i < q.dim; ++i) {
      std::vector<i64> e(q.dim, 0), x;
      e[i] = 1;
      if (!solve(q.proj, e, &x)) throw std::logic_error("coinvariant projection not surjective");
      for (int r = 0; r < m * dn; ++r)
        if (x[r]) q.section.set(r, i, x[r]);
    }
    return q;
  };
  int lo = E.base.lo, hi = E.base.hi + 1;
  std::vector<Q> qs;
  for (int n = lo - 1; n <= hi; ++n) qs.push_back(coinv(n));
  auto qat = [&](int n) -> const Q& { return qs[n - (lo - 1)]; };

  auto induced = [&](const SpMat& f, int nsrc, int ndst) {
    const Q& s = qat(nsrc);
    const Q& t = qat(ndst);
    if (s.dim == 0 || t.dim == 0) return SpMat(p, t.dim, s.dim);
    return sp_mul(t.proj, sp_mul(f, s.section));
  };

  // mixed complex: degree n carries Q_n (K0' slot) (+) Q_{n-1} (K1' slot)
  ChainComplex base(p, lo, hi);
  auto qdim = [&](int n) { return (n < lo - 1 || n > hi) ? 0 : qat(n).dim; };
  for (int n = lo; n <= hi; ++n) base.set_dim(n, qdim(n) + qdim(n - 1));
  SpMat horiz_factor = sp_sub(Im, P);       // 1 - sigma' on R[C']
  SpMat norm_factor = norm_of(P, m);        // ambient norm
  for (int n = lo; n <= hi; ++n) {
    SpMat mat(p, base.dim(n - 1), base.dim(n));
    auto put = [&](const SpMat& blk, int roff, int coff) {
      for (int r = 0; r < blk.rows; ++r)
        for (auto& [c, v] : blk.row[r]) mat.row[roff + r].emplace_back(coff + c, v);
    };
    if (E.base.dim(n) > 0 && E.base.dim(n - 1) > 0)
      put(induced(sp_kron(Im, E.base.diff(n)), n, n - 1), 0, 0);
    if (qdim(n - 1) > 0) {
      put(induced(sp_kron(horiz_factor, SpMat::identity(p, E.base.dim(n - 1))), n - 1, n - 1),
          0, qdim(n));
      if (E.base.dim(n - 2) > 0)
        put(induced(sp_scale(sp_kron(Im, E.base.diff(n - 1)), p - 1), n - 1, n - 2),
            qdim(n - 2), qdim(n));
    }
    for (auto& rw : mat.row) std::sort(rw.begin(), rw.end());
    base.set_diff(n, mat);
  }
  MixedComplex mix;
  mix.base = base;
  for (int n = lo; n <= hi; ++n) {
    SpMat b(p, base.dim(n + 1), base.dim(n));
    if (qdim(n) > 0 && n + 1 <= hi) {
      SpMat nm = induced(sp_kron(norm_factor, SpMat::identity(p, E.base.dim(n))), n, n);
      for (int r = 0; r < nm.rows; ++r)
        for (auto& [c, v] : nm.row[r]) b.row[qdim(n + 1) + r].emplace_back(c, v);
    }
    mix.set_B(n, b);
  }
  mix.validate();
  ExpandKind ek = kind == TateKind::homology ? ExpandKind::exp
                : kind == TateKind::tate     ? ExpandKind::Per
                : kind == TateKind::cotate   ? ExpandKind::PerBar
                                             : ExpandKind::per;
  ChainComplex c = periodic_expand(mix, ek, deg_lo - 1, deg_hi + 1);
  std::vector<int> dims;
  for (int n = deg_lo; n <= deg_hi; ++n) dims.push_back(c.homology_dim(n));
  return dims;
}

}  // namespace cyclohom
