#include "cyclohom/conjugate_frobenius.hpp"

#include <climits>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

namespace cyclohom {
namespace {

SpMat one_minus(const SpMat& s) {
  return sp_sub(SpMat::identity(s.p, s.cols), s);
}

SpMat norm_of(const SpMat& s, int order) {
  SpMat acc = SpMat::identity(s.p, s.cols), sum = acc;
  for (int k = 1; k < order; ++k) {
    acc = sp_mul(s, acc);
    sum = sp_add(sum, acc);
  }
  return sum;
}

SpMat mat_pow(const SpMat& s, int e) {
  SpMat acc = SpMat::identity(s.p, s.cols);
  for (int k = 0; k < e; ++k) acc = sp_mul(s, acc);
  return acc;
}

// Tensor power with explicit tuple bookkeeping: flattened basis of m, tuples
// coded in base D, per-degree buckets in lexicographic order.
struct Pow {
  int p_fac = 0;            // number of factors
  int D = 0;                // total flattened dim of m
  std::vector<int> bdeg;    // flattened index -> degree in m
  std::vector<int> bidx;    // flattened index -> coordinate within its degree
  std::vector<std::vector<int>> off;  // per m-degree: coordinate -> flat index
  int lo = 0, hi = -1;      // degree range of the power
  std::vector<std::vector<long long>> bucket;  // degree -> tuple codes
  std::map<long long, std::pair<int, int>> at;  // code -> (degree, position)

  int deg_of(long long code) const {
    int d = 0;
    for (int j = 0; j < p_fac; ++j) {
      d += bdeg[static_cast<size_t>(code % D)];
      code /= D;
    }
    return d;
  }
  std::vector<int> decode(long long code) const {
    std::vector<int> t(static_cast<size_t>(p_fac));
    for (int j = p_fac - 1; j >= 0; --j) {
      t[static_cast<size_t>(j)] = static_cast<int>(code % D);
      code /= D;
    }
    return t;
  }
  long long encode(const std::vector<int>& t) const {
    long long c = 0;
    for (int v : t) c = c * D + v;
    return c;
  }
};

Pow make_pow(const ChainComplex& m, int p_fac) {
  Pow pw;
  pw.p_fac = p_fac;
  pw.off.assign(static_cast<size_t>(m.hi - m.lo + 1), {});
  for (int d = m.lo; d <= m.hi; ++d)
    for (int i = 0; i < m.dim(d); ++i) {
      pw.off[static_cast<size_t>(d - m.lo)].push_back(pw.D);
      pw.bdeg.push_back(d);
      pw.bidx.push_back(i);
      ++pw.D;
    }
  if (pw.D == 0) {
    pw.lo = 0;
    pw.hi = -1;
    return pw;
  }
  double total = 1;
  for (int j = 0; j < p_fac; ++j) total *= pw.D;
  if (total > 2e6) throw std::runtime_error("tensor power budget exceeded");
  pw.lo = p_fac * m.lo;
  pw.hi = p_fac * m.hi;
  pw.bucket.assign(static_cast<size_t>(pw.hi - pw.lo + 1), {});
  long long count = static_cast<long long>(total);
  for (long long code = 0; code < count; ++code) {
    int d = pw.deg_of(code);
    auto& b = pw.bucket[static_cast<size_t>(d - pw.lo)];
    pw.at[code] = {d, static_cast<int>(b.size())};
    b.push_back(code);
  }
  return pw;
}

CyclicGroupComplex power_complex(const ChainComplex& m, const Pow& pw) {
  CyclicGroupComplex E;
  E.order = pw.p_fac;
  E.base = ChainComplex(m.p, pw.lo, pw.hi);
  if (pw.D == 0) return E;
  // columns of the differentials of m, per degree
  std::vector<std::vector<std::vector<std::pair<int, i64>>>> cols(
      static_cast<size_t>(m.hi - m.lo + 1));
  for (int d = m.lo; d <= m.hi; ++d) {
    auto& cd = cols[static_cast<size_t>(d - m.lo)];
    cd.assign(static_cast<size_t>(m.dim(d)), {});
    SpMat dm = m.diff(d);
    for (int r = 0; r < dm.rows; ++r)
      for (auto& [c, v] : dm.row[r]) cd[static_cast<size_t>(c)].emplace_back(r, v);
  }
  for (int n = pw.lo; n <= pw.hi; ++n)
    E.base.set_dim(n, static_cast<int>(pw.bucket[static_cast<size_t>(n - pw.lo)].size()));
  for (int n = pw.lo; n <= pw.hi; ++n) {
    const auto& src = pw.bucket[static_cast<size_t>(n - pw.lo)];
    int dn = n > pw.lo ? E.base.dim(n - 1) : 0;
    SpMat diff(m.p, dn, static_cast<int>(src.size()));
    SpMat sg(m.p, static_cast<int>(src.size()), static_cast<int>(src.size()));
    for (size_t c = 0; c < src.size(); ++c) {
      std::vector<int> t = pw.decode(src[c]);
      // rotation: last factor to the front, Koszul sign
      int dl = pw.bdeg[static_cast<size_t>(t.back())];
      std::vector<int> rt(t.size());
      rt[0] = t.back();
      for (size_t j = 1; j < t.size(); ++j) rt[j] = t[j - 1];
      i64 sign = (dl % 2 != 0 && (n - dl) % 2 != 0) ? m.p - 1 : 1;
      auto it = pw.at.find(pw.encode(rt));
      sg.set(it->second.second, static_cast<int>(c), sign);
      // Leibniz differential with the degree-prefix signs
      if (n > pw.lo) {
        int pre = 0;
        for (size_t j = 0; j < t.size(); ++j) {
          int fd = pw.bdeg[static_cast<size_t>(t[j])];
          for (auto& [r, v] : cols[static_cast<size_t>(fd - m.lo)]
                                  [static_cast<size_t>(pw.bidx[static_cast<size_t>(t[j])])]) {
            std::vector<int> dt = t;
            dt[j] = pw.off[static_cast<size_t>(fd - 1 - m.lo)][static_cast<size_t>(r)];
            auto jt = pw.at.find(pw.encode(dt));
            i64 val = (pre % 2 != 0) ? (m.p - v) % m.p : v;
            if (val != 0) {
              int rr = jt->second.second;
              SparseVec& row = diff.row[static_cast<size_t>(rr)];
              row.emplace_back(static_cast<int>(c), val);
            }
          }
          pre += fd;
        }
      }
    }
    for (auto& rw : diff.row) {
      std::sort(rw.begin(), rw.end());
      SparseVec merged;
      for (auto& [c2, v2] : rw) {
        if (!merged.empty() && merged.back().first == c2)
          merged.back().second = (merged.back().second + v2) % m.p;
        else
          merged.emplace_back(c2, v2 % m.p);
      }
      merged.erase(std::remove_if(merged.begin(), merged.end(),
                                  [](auto& e) { return e.second == 0; }),
                   merged.end());
      rw = std::move(merged);
    }
    E.base.set_diff(n, std::move(diff));
    E.set_sigma(n, std::move(sg));
  }
  return E;
}

// Fixed vectors modulo norms at one degree: representatives completing the
// norm image to ker(1 - sigma).
struct FixedQuot {
  SpMat reps;  // ambient x dim
  SpMat nimg;  // norm image basis
  int dim = 0;
};

FixedQuot fixed_quot(const SpMat& sigma, int order) {
  FixedQuot q;
  i64 p = sigma.p;
  int d = sigma.cols;
  SpMat nm = norm_of(sigma, order);
  q.nimg = sp_image(nm).basis;
  Subspace ker = sp_kernel(one_minus(sigma));
  Eliminator elim(p, d);
  for (int c = 0; c < q.nimg.cols; ++c) elim.add(q.nimg.col_vec(c));
  SpMat reps(p, d, 0);
  std::vector<SparseVec> kept;
  for (int c = 0; c < ker.basis.cols; ++c) {
    SparseVec v = ker.basis.col_vec(c);
    if (elim.add(v)) kept.push_back(v);
  }
  q.dim = static_cast<int>(kept.size());
  q.reps = SpMat(p, d, q.dim);
  for (int c = 0; c < q.dim; ++c)
    for (auto& [r, v] : kept[static_cast<size_t>(c)]) q.reps.set(r, c, v);
  return q;
}

// coordinates of b in the quotient basis: solve [reps | norm image] x = b
std::vector<i64> quot_coords(const FixedQuot& q, const std::vector<i64>& b) {
  SpMat M = sp_hstack(q.reps, q.nimg);
  std::vector<i64> x;
  if (!solve(M, b, &x))
    throw std::runtime_error("class left the fixed-part quotient");
  x.resize(static_cast<size_t>(q.dim));
  return x;
}

}  // namespace

CyclicGroupComplex tensor_power(const ChainComplex& m, int p) {
  if (p < 2) throw std::invalid_argument("need at least two factors");
  Pow pw = make_pow(m, p);
  CyclicGroupComplex E = power_complex(m, pw);
  E.validate();
  return E;
}

IReport I_dims(const CyclicGroupComplex& E) {
  int p = E.order;
  i64 fp = E.base.p;
  IReport out;
  // I-degrees n with p*n inside the window of E
  int nlo = E.base.lo >= 0 ? (E.base.lo + p - 1) / p : E.base.lo / p;
  int nhi = E.base.hi >= 0 ? E.base.hi / p : (E.base.hi - p + 1) / p;
  out.lo = nlo;
  out.hi = nhi;
  if (nhi < nlo) return out;
  std::vector<FixedQuot> q;
  for (int n = nlo; n <= nhi; ++n)
    q.push_back(fixed_quot(E.sigma(p * n), p));
  for (auto& f : q) {
    out.dims.push_back(f.dim);
    out.reps.push_back(f.reps);
  }
  out.diff.assign(static_cast<size_t>(nhi - nlo + 1), SpMat());
  out.diff[0] = SpMat(fp, 0, q[0].dim);
  for (int n = nlo + 1; n <= nhi; ++n) {
    const FixedQuot& src = q[static_cast<size_t>(n - nlo)];
    const FixedQuot& dst = q[static_cast<size_t>(n - 1 - nlo)];
    SpMat d(fp, dst.dim, src.dim);
    for (int c = 0; c < src.dim; ++c) {
      // zigzag descent: alternately divide d(y) by the norm and by 1 - sigma
      std::vector<i64> y = sv_to_dense(src.reps.col_vec(c), src.reps.rows);
      for (int s = 1; s < p; ++s) {
        int deg = p * n - s + 1;
        std::vector<i64> b = sp_apply(E.base.diff(deg), y);
        SpMat sg = E.sigma(deg - 1);
        SpMat div = (s % 2 != 0) ? norm_of(sg, p) : one_minus(sg);
        if (!solve(div, b, &y)) throw std::runtime_error("not tight");
      }
      std::vector<i64> b = sp_apply(E.base.diff(p * (n - 1) + 1), y);
      std::vector<i64> co = quot_coords(dst, b);
      for (int r = 0; r < dst.dim; ++r)
        if (co[static_cast<size_t>(r)] != 0) d.set(r, c, co[static_cast<size_t>(r)]);
    }
    out.diff[static_cast<size_t>(n - nlo)] = std::move(d);
  }
  for (int n = nlo + 2; n <= nhi; ++n) {
    SpMat sq = sp_mul(out.diff[static_cast<size_t>(n - 1 - nlo)],
                      out.diff[static_cast<size_t>(n - nlo)]);
    for (auto& rw : sq.row)
      if (!rw.empty()) throw std::logic_error("induced differential fails d^2 = 0");
  }
  return out;
}

i64 psi_constant(i64 p) {
  static std::map<i64, i64> cache;
  auto it = cache.find(p);
  if (it != cache.end()) return it->second;
  ChainComplex probe(p, 0, 1);
  probe.set_dim(0, 1);
  probe.set_dim(1, 1);
  probe.set_diff(0, SpMat(p, 0, 1));
  SpMat d(p, 1, 1);
  d.set(0, 0, 1);
  probe.set_diff(1, d);
  CyclicGroupComplex E = tensor_power(probe, static_cast<int>(p));
  IReport I = I_dims(E);
  if (I.lo != 0 || I.hi != 1 || I.dims[0] != 1 || I.dims[1] != 1)
    throw std::logic_error("contractible probe has the wrong I dims");
  // psi of each generator is rep-solved; a is the unique scalar with
  // d_I psi = a psi d on the probe
  Pow pw = make_pow(probe, static_cast<int>(p));
  auto psi_coord = [&](int mdeg) {
    std::vector<int> t(static_cast<size_t>(p),
                       pw.off[static_cast<size_t>(mdeg)][0]);
    auto bp = pw.at.at(pw.encode(t));
    std::vector<i64> v(static_cast<size_t>(E.base.dim(bp.first)), 0);
    v[static_cast<size_t>(bp.second)] = 1;
    FixedQuot q = fixed_quot(E.sigma(bp.first), static_cast<int>(p));
    // reps of I_dims use the same construction, so coordinates agree
    return quot_coords(q, v);
  };
  i64 lhs = 0;
  {
    std::vector<i64> s1 = psi_coord(1);
    std::vector<i64> img = sp_apply(I.diff[1], s1);
    lhs = img[0];
  }
  std::vector<i64> s0 = psi_coord(0);
  i64 a = (lhs * fp_inv(s0[0], p)) % p;
  if (a == 0) throw std::logic_error("normalization constant vanished");
  cache[p] = a;
  return a;
}

PsiReport psi_check(const ChainComplex& m, int p) {
  PsiReport rep;
  Pow pw = make_pow(m, p);
  CyclicGroupComplex E = power_complex(m, pw);
  E.validate();
  TightReport tr = is_tight(E, static_cast<i64>(p));
  rep.tight = tr.tight;
  if (!rep.tight) {
    std::ostringstream os;
    os << "power not tight; degrees:";
    for (size_t i = 0; i < tr.degrees.size(); ++i)
      if (!tr.degree_tight[i]) os << " " << tr.degrees[i];
    if (!tr.support_ok) os << " (support off the multiples of " << p << ")";
    rep.violations.push_back(os.str());
    return rep;
  }
  IReport I = I_dims(E);
  std::vector<FixedQuot> q;
  for (int n = I.lo; n <= I.hi; ++n)
    q.push_back(fixed_quot(E.sigma(p * n), p));
  // psi on basis vectors; bijectivity onto I degreewise with the degree-times-p law
  rep.iso = true;
  std::vector<SpMat> Psi(static_cast<size_t>(I.hi - I.lo + 1));
  for (int n = I.lo; n <= I.hi; ++n) {
    int k = (n >= m.lo && n <= m.hi) ? m.dim(n) : 0;
    const FixedQuot& f = q[static_cast<size_t>(n - I.lo)];
    SpMat Pn(m.p, f.dim, k);
    for (int i = 0; i < k; ++i) {
      std::vector<int> t(static_cast<size_t>(p),
                         pw.off[static_cast<size_t>(n - m.lo)][static_cast<size_t>(i)]);
      auto bp = pw.at.at(pw.encode(t));
      std::vector<i64> v(static_cast<size_t>(E.base.dim(p * n)), 0);
      v[static_cast<size_t>(bp.second)] = 1;
      std::vector<i64> co;
      try {
        co = quot_coords(f, v);
      } catch (const std::exception&) {
        rep.iso = false;
        rep.violations.push_back("psi image is not a fixed vector");
        continue;
      }
      for (int r = 0; r < f.dim; ++r)
        if (co[static_cast<size_t>(r)] != 0) Pn.set(r, i, co[static_cast<size_t>(r)]);
    }
    if (I.dims[static_cast<size_t>(n - I.lo)] != k || sp_rank(Pn) != k) {
      rep.iso = false;
      std::ostringstream os;
      os << "psi not bijective onto I in degree " << n << ": dim I = "
         << I.dims[static_cast<size_t>(n - I.lo)] << ", dim source = " << k;
      rep.violations.push_back(os.str());
    }
    Psi[static_cast<size_t>(n - I.lo)] = std::move(Pn);
  }
  // additivity modulo the norm image, on basis pairs and seeded combinations
  rep.additive = true;
  std::mt19937 rng(913);
  for (int d = m.lo; d <= m.hi && rep.additive; ++d) {
    int k = m.dim(d);
    if (k < 2) continue;
    SpMat nm = norm_of(E.sigma(p * d), p);
    auto expand = [&](const std::vector<i64>& x) {
      const auto& b = pw.bucket[static_cast<size_t>(p * d - pw.lo)];
      std::vector<i64> out(b.size(), 0);
      for (size_t c = 0; c < b.size(); ++c) {
        std::vector<int> t = pw.decode(b[c]);
        i64 prod = 1;
        for (int f : t) {
          if (pw.bdeg[static_cast<size_t>(f)] != d) {
            prod = 0;
            break;
          }
          prod = (prod * x[static_cast<size_t>(pw.bidx[static_cast<size_t>(f)])]) % m.p;
        }
        out[c] = prod;
      }
      return out;
    };
    auto check_pair = [&](const std::vector<i64>& x, const std::vector<i64>& y) {
      std::vector<i64> s(x.size());
      for (size_t i = 0; i < x.size(); ++i) s[i] = (x[i] + y[i]) % m.p;
      std::vector<i64> t = expand(s), tx = expand(x), ty = expand(y);
      for (size_t i = 0; i < t.size(); ++i)
        t[i] = ((t[i] - tx[i] - ty[i]) % m.p + m.p) % m.p;
      std::vector<i64> z;
      if (!solve(nm, t, &z)) {
        std::ostringstream os;
        os << "additivity defect not in the norm image in degree " << d;
        rep.violations.push_back(os.str());
        rep.additive = false;
      }
    };
    for (int i = 0; i < k && rep.additive; ++i)
      for (int j = i + 1; j < k && rep.additive; ++j) {
        std::vector<i64> x(static_cast<size_t>(k), 0), y(static_cast<size_t>(k), 0);
        x[static_cast<size_t>(i)] = 1;
        y[static_cast<size_t>(j)] = 1;
        check_pair(x, y);
      }
    for (int trial = 0; trial < 3 && rep.additive; ++trial) {
      std::vector<i64> x(static_cast<size_t>(k)), y(static_cast<size_t>(k));
      for (int i = 0; i < k; ++i) {
        x[static_cast<size_t>(i)] = static_cast<i64>(rng() % m.p);
        y[static_cast<size_t>(i)] = static_cast<i64>(rng() % m.p);
      }
      check_pair(x, y);
    }
  }
  // the induced differential matches a * (twisted differential of m); over the
  // prime field the entrywise twist is the identity
  rep.a = psi_constant(static_cast<i64>(p));
  for (int n = I.lo + 1; n <= I.hi; ++n) {
    if (n - 1 < m.lo || n > m.hi) continue;
    SpMat lhs = sp_mul(I.diff[static_cast<size_t>(n - I.lo)],
                       Psi[static_cast<size_t>(n - I.lo)]);
    SpMat rhs = sp_scale(sp_mul(Psi[static_cast<size_t>(n - 1 - I.lo)], m.diff(n)),
                         rep.a);
    if (!sp_equal(lhs, rhs)) {
      std::ostringstream os;
      os << "induced differential is not a * psi-conjugate in degree " << n;
      rep.violations.push_back(os.str());
    }
  }
  return rep;
}

AdaptReport adaptedness_check(const AlgebraPresentation& a, int N) {
  int p = static_cast<int>(a.p);
  AdaptReport rep;
  CyclicModuleData e = build_anat(a, p * (N + 1) - 1);
  rep.adapted = true;
  for (int n = 0; n <= N; ++n) {
    int idx = p * (n + 1) - 1;
    SpMat g = mat_pow(e.rot[static_cast<size_t>(idx)], n + 1);
    CyclicGroupModule m{a.p, p, g};
    m.validate();
    bool t = module_tight(m);
    int idim = module_I_dim(m);
    i64 want = 1;
    for (int j = 0; j <= n; ++j) want *= a.dim;
    rep.levels.push_back(n);
    rep.level_tight.push_back(t);
    rep.I_dims.push_back(idim);
    rep.expected.push_back(static_cast<int>(want));
    if (!t || idim != static_cast<int>(want)) {
      rep.adapted = false;
      std::ostringstream os;
      os << "level " << n << ": tight = " << t << ", dim I = " << idim
         << ", expected " << want;
      rep.failures.push_back(os.str());
    }
  }
  return rep;
}

ConjE1 conjugate_e1(const AlgebraPresentation& a, int lo, int hi, int klo,
                    int khi) {
  if (lo > hi || klo > khi) throw std::invalid_argument("empty window");
  ConjE1 t;
  t.p = a.p;
  t.lo = lo;
  t.hi = hi;
  t.klo = klo;
  t.khi = khi;
  bool odd = a.p != 2;
  int shift = odd ? 2 : 1;
  int maxd = std::max(0, hi + shift * khi);
  CyclicModuleData e = build_anat(a, maxd + 1);
  std::vector<int> table = odd ? hh_dims(e, 0, maxd) : hc_dims(e, 0, maxd);
  for (int n = lo; n <= hi; ++n) {
    std::vector<int> row;
    int total = 0;
    for (int k = klo; k <= khi; ++k) {
      int d = n + shift * k;
      int v = (d >= 0 && d <= maxd) ? table[static_cast<size_t>(d)] : 0;
      row.push_back(v);
      total += v;
    }
    t.cell.push_back(std::move(row));
    t.totals.push_back(total);
  }
  return t;
}

ConjugatePage conjugate_pages(const AlgebraPresentation& a, int r, int lo,
                              int hi, const PeriodicPolicy& pol) {
  if (r < 1) throw std::invalid_argument("page index must be at least 1");
  int p = static_cast<int>(a.p);
  ConjugatePage page;
  page.p = a.p;
  page.r = r;
  page.lo = lo;
  page.hi = hi;
  // pick the number of p-row blocks the budget allows (desk cap: ~10 rows)
  int width = hi - lo + 3;
  int blocks = 1;
  auto cost_of = [&](int nb) {
    i64 c = 0;
    for (int m = 0; m < p * nb; ++m) {
      i64 rowdim = 1;
      for (int f = 0; f < p * (m + 1); ++f) {
        rowdim *= a.dim;
        if (rowdim > pol.budget) return pol.budget + 1;
      }
      c += rowdim * width;
      if (c > pol.budget) return pol.budget + 1;
    }
    return c;
  };
  while ((blocks + 1) * p <= 10 && cost_of(blocks + 1) <= pol.budget) ++blocks;
  page.blocks = blocks;
  CyclicModuleData e = build_anat(a, p * p * blocks - 1);
  CyclicModuleData ep = edgewise(e, p, p * blocks - 1);
  TsyganWindow w = build_tsygan(ep, p * blocks);
  ChainComplex base = window_total_complex(w, lo, hi, INT_MIN, INT_MAX, INT_MAX);
  // coordinate span of the cells of the p-rescaled row filtration step s
  std::vector<std::vector<int>> rows_at(static_cast<size_t>(hi - lo + 3));
  for (int n = lo - 1; n <= hi + 1; ++n)
    rows_at[static_cast<size_t>(n - (lo - 1))] =
        window_cell_rows(w, n, INT_MIN, INT_MAX, INT_MAX);
  auto row_span = [&](int s, int n) {
    if (n < lo - 1 || n > hi + 1) return subspace_zero(a.p, 0);
    const std::vector<int>& rows = rows_at[static_cast<size_t>(n - (lo - 1))];
    std::vector<int> keep;
    for (size_t c = 0; c < rows.size(); ++c)
      if (rows[c] >= p * (s - 1)) keep.push_back(static_cast<int>(c));
    Subspace sub;
    sub.ambient_dim = static_cast<int>(rows.size());
    sub.basis = SpMat(a.p, sub.ambient_dim, static_cast<int>(keep.size()));
    for (size_t c = 0; c < keep.size(); ++c)
      sub.basis.set(keep[c], static_cast<int>(c), 1);
    return sub;
  };
  // interleaved truncation: V^j at degree n keeps filtration step 2j-1-n whose
  // boundary already lies one step deeper
  auto vsub = [&](int j, int n) {
    Subspace head = row_span(2 * j - 1 - n, n);
    Subspace pre = sub_preimage(base.diff(n), row_span(2 * j - n, n - 1));
    return sub_intersect(head, pre, a.p);
  };
  auto fdiv = [](int x, int y) {
    return x >= 0 ? x / y : -((-x + y - 1) / y);
  };
  int jmin = fdiv(lo, 2);  // V^jmin is everything at every window degree
  int jmax = jmin;
  {
    // grow until the window carries nothing deeper
    while (true) {
      bool any = false;
      for (int n = lo - 1; n <= hi + 1 && !any; ++n)
        if (vsub(jmax + 1, n).dim() > 0) any = true;
      if (!any) break;
      ++jmax;
    }
  }
  page.jmin = jmin;
  page.jmax = jmax;
  FilteredComplex fc;
  fc.base = base;
  fc.fmin = jmin;
  fc.fmax = jmax;
  for (int n = lo - 1; n <= hi + 1; ++n)
    for (int j = jmin; j <= jmax; ++j) fc.set_filt(j, n, vsub(j, n));
  fc.validate();
  for (int j = jmin; j <= jmax; ++j) {
    std::vector<int> dr, de;
    for (int n = lo; n <= hi; ++n) {
      dr.push_back(ss_page(fc, r, j, n));
      de.push_back(ss_einf(fc, j, n));
    }
    page.dims.push_back(std::move(dr));
    page.einf.push_back(std::move(de));
  }
  // the periodicity endomorphism matches consecutive filtration steps two
  // degrees apart; trust only cells clear of the window edges
  page.u_periodic = true;
  int margin = 2 * (r - 1);
  for (int j = jmin; j + 1 <= jmax; ++j)
    for (int n = lo + 2; n <= hi - margin; ++n) {
      int top = page.dims[static_cast<size_t>(j + 1 - jmin)][static_cast<size_t>(n - lo)];
      int bot = page.dims[static_cast<size_t>(j - jmin)][static_cast<size_t>(n - 2 - lo)];
      // cells whose row support leaves the window are edge artifacts
      if (2 * (j + 1) - 1 - n > blocks || 2 * j - 1 - (n - 2) > blocks) continue;
      if (2 * j - 1 - (n - 2) < 1) continue;
      if (top != bot) page.u_periodic = false;
    }
  return page;
}

}  // namespace cyclohom
