#include "cyclohom/oracle.hpp"

#include <map>
#include <stdexcept>

namespace cyclohom::oracle {

namespace {

// tuple of length L over [0, dim), factor 0 major
std::vector<int> unrank(long long idx, int L, int dim) {
  std::vector<int> t(L);
  for (int i = L - 1; i >= 0; --i) {
    t[i] = static_cast<int>(idx % dim);
    idx /= dim;
  }
  return t;
}

long long rank_of(const std::vector<int>& t, int dim) {
  long long idx = 0;
  for (int x : t) idx = idx * dim + x;
  return idx;
}

long long ipow(int b, int e) {
  long long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

}  // namespace

std::vector<int> bar_hh_dims(const RawAlgebra& a, int n_max) {
  for (int d : a.deg)
    if (d < 0) throw std::invalid_argument("negative degrees unsupported in oracle");
  bool has_diff = !a.diff.empty();
  // basis of total degree N: pairs (level n, tuple of length n+1 with degree sum N-n)
  struct Basis {
    std::vector<std::pair<int, long long>> elems;  // (n, tuple rank)
    std::map<std::pair<int, long long>, int> index;
  };
  auto build_basis = [&](int N) {
    Basis b;
    if (N < 0) return b;
    for (int n = 0; n <= N; ++n) {
      int want = N - n;
      long long count = ipow(a.dim, n + 1);
      for (long long idx = 0; idx < count; ++idx) {
        std::vector<int> t = unrank(idx, n + 1, a.dim);
        int s = 0;
        for (int x : t) s += a.deg.empty() ? 0 : a.deg[x];
        if (s == want) {
          b.index[{n, idx}] = static_cast<int>(b.elems.size());
          b.elems.emplace_back(n, idx);
        }
      }
    }
    return b;
  };
  auto degree_of = [&](int x) { return a.deg.empty() ? 0 : a.deg[x]; };
  auto differential = [&](const Basis& src, const Basis& dst) {
    SpMat m(a.p, static_cast<int>(dst.elems.size()), static_cast<int>(src.elems.size()));
    for (int col = 0; col < static_cast<int>(src.elems.size()); ++col) {
      auto [n, idx] = src.elems[col];
      std::vector<int> t = unrank(idx, n + 1, a.dim);
      auto add = [&](int nn, const std::vector<int>& tt, i64 c) {
        auto it = dst.index.find({nn, rank_of(tt, a.dim)});
        if (it == dst.index.end()) return;
        i64 cur = m.get(it->second, col);
        m.set(it->second, col, fp_norm(cur + c, a.p));
      };
      // Hochschild faces
      if (n >= 1) {
        for (int i = 0; i < n; ++i) {
          const std::vector<i64>& prod = a.mul[t[i]][t[i + 1]];
          std::vector<int> tt;
          for (int q = 0; q < i; ++q) tt.push_back(t[q]);
          tt.push_back(0);  // slot
          for (int q = i + 2; q <= n; ++q) tt.push_back(t[q]);
          i64 sgn = (i % 2 == 0) ? 1 : a.p - 1;
          for (int k = 0; k < a.dim; ++k)
            if (prod[k] % a.p != 0) {
              tt[i] = k;
              add(n - 1, tt, fp_mul(sgn, fp_norm(prod[k], a.p), a.p));
            }
        }
        {
          // wrap face: multiply last into first with Koszul sign
          const std::vector<i64>& prod = a.mul[t[n]][t[0]];
          int rest = 0;
          for (int q = 0; q < n; ++q) rest += degree_of(t[q]);
          i64 sgn = (n % 2 == 0) ? 1 : a.p - 1;
          if ((degree_of(t[n]) * rest) % 2 != 0) sgn = fp_mul(sgn, a.p - 1, a.p);
          std::vector<int> tt(n, 0);
          for (int q = 1; q <= n - 1; ++q) tt[q] = t[q];
          for (int k = 0; k < a.dim; ++k)
            if (prod[k] % a.p != 0) {
              tt[0] = k;
              add(n - 1, tt, fp_mul(sgn, fp_norm(prod[k], a.p), a.p));
            }
        }
      }
      // internal differential with Koszul signs, total-complex sign (-1)^n
      if (has_diff) {
        int below = 0;
        for (int j = 0; j <= n; ++j) {
          i64 sgn = ((n + below) % 2 == 0) ? 1 : a.p - 1;
          for (int k = 0; k < a.dim; ++k) {
            i64 c = fp_norm(a.diff[k][t[j]], a.p);
            if (c == 0) continue;
            std::vector<int> tt = t;
            tt[j] = k;
            add(n, tt, fp_mul(sgn, c, a.p));
          }
          below += degree_of(t[j]);
        }
      }
    }
    return m;
  };
  std::vector<Basis> bases;
  for (int N = -1; N <= n_max + 1; ++N) bases.push_back(build_basis(N));
  std::vector<int> dims;
  for (int N = 0; N <= n_max; ++N) {
    const Basis& here = bases[N + 1];
    SpMat dn = differential(here, bases[N]);
    SpMat dn1 = differential(bases[N + 2], here);
    int ker = static_cast<int>(here.elems.size()) - sp_rank(dn);
    dims.push_back(ker - sp_rank(dn1));
  }
  return dims;
}

GroupHomologyReport brute_group_homology(int order, const SpMat& sigma, int i_max) {
  i64 p = sigma.p;
  int d = sigma.cols;
  SpMat one = SpMat::identity(p, d);
  SpMat om = sp_sub(one, sigma);
  SpMat nm = SpMat::zero(p, d, d);
  SpMat pw = one;
  for (int j = 0; j < order; ++j) {
    nm = sp_add(nm, pw);
    pw = sp_mul(sigma, pw);
  }
  GroupHomologyReport rep;
  for (int i = 0; i <= i_max; ++i) {
    if (i == 0) {
      rep.homology.push_back(d - sp_rank(om));  // coker(1 - sigma)
    } else {
      const SpMat& din = i % 2 != 0 ? om : nm;
      const SpMat& dout = i % 2 == 0 ? om : nm;
      rep.homology.push_back((d - sp_rank(din)) - sp_rank(dout));
    }
  }
  rep.tate_even = (d - sp_rank(nm)) - sp_rank(om);
  rep.tate_odd = (d - sp_rank(om)) - sp_rank(nm);
  return rep;
}

std::pair<int, int> direct_hpbar_window(const RawAlgebra& a, int n, int max_level) {
  for (int d : a.deg)
    if (d != 0) throw std::invalid_argument("direct_hpbar_window: degree-0 algebras only");
  if (max_level < 1) return {0, 0};
  i64 p = a.p;
  int dim = a.dim;

  // cells at total degree g: (k = g + 1 - m, m) for m in [1, M]
  struct Layout {
    std::vector<int> ms, offs;
    int total = 0;
  };
  auto layout = [&](int g, int M) {
    Layout l;
    for (int m = 1; m <= M; ++m) {
      l.ms.push_back(m);
      l.offs.push_back(l.total);
      l.total += static_cast<int>(ipow(dim, m));
    }
    return l;
  };
  // face i at level m (tuple length m -> m-1), plain multiplication
  auto face = [&](int m, int i) {
    long long cnt = ipow(dim, m);
    SpMat f(p, static_cast<int>(ipow(dim, m - 1)), static_cast<int>(cnt));
    for (long long idx = 0; idx < cnt; ++idx) {
      std::vector<int> t = unrank(idx, m, dim);
      std::vector<int> tt;
      const std::vector<i64>* prod;
      int slot;
      if (i < m - 1) {
        prod = &a.mul[t[i]][t[i + 1]];
        for (int q = 0; q < i; ++q) tt.push_back(t[q]);
        tt.push_back(0);
        slot = i;
        for (int q = i + 2; q < m; ++q) tt.push_back(t[q]);
      } else {
        prod = &a.mul[t[m - 1]][t[0]];
        tt.assign(m - 1, 0);
        slot = 0;
        for (int q = 1; q < m - 1; ++q) tt[q] = t[q];
      }
      for (int k = 0; k < dim; ++k) {
        i64 c = fp_norm((*prod)[k], p);
        if (c == 0) continue;
        tt[slot] = k;
        int r = static_cast<int>(rank_of(tt, dim));
        f.set(r, static_cast<int>(idx), fp_norm(f.get(r, static_cast<int>(idx)) + c, p));
      }
    }
    return f;
  };
  auto rotation = [&](int m) {  // t(a_0..a_{m-1}) = (a_{m-1}, a_0, .., a_{m-2})
    long long cnt = ipow(dim, m);
    SpMat r(p, static_cast<int>(cnt), static_cast<int>(cnt));
    for (long long idx = 0; idx < cnt; ++idx) {
      std::vector<int> t = unrank(idx, m, dim);
      std::vector<int> tt(m);
      tt[0] = t[m - 1];
      for (int q = 1; q < m; ++q) tt[q] = t[q - 1];
      r.set(static_cast<int>(rank_of(tt, dim)), static_cast<int>(idx), 1);
    }
    return r;
  };
  auto b_full = [&](int m, bool prime) {  // prime: omit the wrap face
    int faces = prime ? m - 1 : m;
    SpMat acc = SpMat::zero(p, static_cast<int>(ipow(dim, m - 1)), static_cast<int>(ipow(dim, m)));
    for (int i = 0; i < faces; ++i)
      acc = sp_add(acc, sp_scale(face(m, i), i % 2 == 0 ? 1 : p - 1));
    return acc;
  };
  auto sigma_dag = [&](int m) {
    SpMat t = rotation(m);
    return m % 2 == 0 ? sp_scale(t, p - 1) : t;  // (-1)^{m-1} t
  };
  auto big_diff = [&](int g, int M) {  // chains degree g -> g-1
    Layout src = layout(g, M), dst = layout(g - 1, M);
    SpMat D(p, dst.total, src.total);
    auto off_dst = [&](int m) { return (m >= 1 && m <= M) ? dst.offs[m - 1] : -1; };
    for (size_t ci = 0; ci < src.ms.size(); ++ci) {
      int m = src.ms[ci], k = g + 1 - m, off = src.offs[ci];
      auto put = [&](const SpMat& blk, int roff) {
        for (int r = 0; r < blk.rows; ++r)
          for (auto& [c, v] : blk.row[r]) D.set(roff + r, off + c, v);
      };
      if (m >= 2) {  // vertical to (k, m-1)
        int ro = off_dst(m - 1);
        if (ro >= 0) {
          SpMat v = (k % 2 == 0) ? b_full(m, false) : sp_scale(b_full(m, true), p - 1);
          put(v, ro);
        }
      }
      {  // horizontal to (k-1, m)
        int ro = off_dst(m);
        if (ro >= 0) {
          SpMat s = sigma_dag(m);
          SpMat h;
          if ((k % 2 + 2) % 2 == 1) {
            h = sp_sub(SpMat::identity(p, s.cols), s);
          } else {
            h = SpMat::zero(p, s.rows, s.cols);
            SpMat pw = SpMat::identity(p, s.cols);
            for (int j = 0; j < m; ++j) {
              h = sp_add(h, pw);
              pw = sp_mul(s, pw);
            }
          }
          put(h, ro);
        }
      }
    }
    return D;
  };
  // Band {m <= M} is a subcomplex and the full complex is the union of bands, so the
  // homology is the colimit of band homologies.  Band dims never settle (each band has
  // spurious classes near its top edge), but the rank of the induced map
  // H_n(band M0) -> H_n(band M1) does once M1 - M0 spans a couple of periods.
  auto surviving_rank = [&](int M0, int M1) {
    Subspace z0 = sp_kernel(big_diff(n, M0));
    SpMat dn1t = sp_transpose(big_diff(n + 1, M1));
    Eliminator el(p, layout(n, M1).total);
    for (auto& column : dn1t.row) el.add(column);
    int base = el.rank();
    // band-M0 chains are a prefix of band-M1 chains, so cycles embed directly
    SpMat z0t = sp_transpose(z0.basis);
    for (auto& column : z0t.row) el.add(column);
    return el.rank() - base;
  };
  int gap = std::min(static_cast<int>(2 * p), max_level - 1);
  int r1 = surviving_rank(max_level - gap, max_level);
  int r0 = max_level - gap >= 2 ? surviving_rank(max_level - gap - 1, max_level - 1) : r1;
  return {std::min(r0, r1), std::max(r0, r1)};
}

}  // namespace cyclohom::oracle
