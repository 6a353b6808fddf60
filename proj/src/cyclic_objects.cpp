#include "cyclohom/cyclic_objects.hpp"

#include <algorithm>
#include <stdexcept>

namespace cyclohom {

namespace {

i64 ipow(i64 b, int e) {
  i64 r = 1;
  while (e-- > 0) r *= b;
  return r;
}

constexpr i64 kLevelBudget = 5'000'000;  // max dim of a single level

// digits of a tensor-basis index, factor 0 major
std::vector<int> unrank(i64 idx, int base, int len) {
  std::vector<int> t(len);
  for (int i = len - 1; i >= 0; --i) {
    t[i] = static_cast<int>(idx % base);
    idx /= base;
  }
  return t;
}
i64 rank_of(const std::vector<int>& t, int base) {
  i64 idx = 0;
  for (int d : t) idx = idx * base + d;
  return idx;
}

int parity(int x) { return x & 1; }

}  // namespace

bool AlgebraPresentation::graded() const {
  for (int d : deg)
    if (d != 0) return true;
  return diff.rows > 0 && !diff.is_zero();
}

SparseVec AlgebraPresentation::product(const SparseVec& a, const SparseVec& b) const {
  std::vector<i64> acc(dim, 0);
  for (auto& [i, x] : a)
    for (auto& [j, y] : b)
      for (auto& [k, c] : mul[i][j]) acc[k] = fp_norm(acc[k] + fp_mul(fp_mul(x, y, p), c, p), p);
  return sv_from_dense(acc, p);
}

std::vector<std::string> AlgebraPresentation::violations() const {
  std::vector<std::string> out;
  auto eq = [&](const SparseVec& a, const SparseVec& b) {
    return sv_to_dense(a, dim) == sv_to_dense(b, dim);
  };
  if (dim <= 0 || static_cast<int>(mul.size()) != dim ||
      static_cast<int>(unit.size()) != dim || static_cast<int>(deg.size()) != dim) {
    out.push_back("shape mismatch in presentation");
    return out;
  }
  SparseVec one = sv_from_dense(unit, p);
  for (int i = 0; i < dim; ++i) {
    SparseVec e{{i, 1}};
    if (!eq(product(one, e), e)) out.push_back("left unit law fails at " + std::to_string(i));
    if (!eq(product(e, one), e)) out.push_back("right unit law fails at " + std::to_string(i));
  }
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      for (auto& [k, c] : mul[i][j])
        if (c && deg[k] != deg[i] + deg[j])
          out.push_back("grading fails in product (" + std::to_string(i) + "," +
                        std::to_string(j) + ")");
      for (int k = 0; k < dim; ++k) {
        SparseVec ei{{i, 1}}, ej{{j, 1}}, ek{{k, 1}};
        if (!eq(product(product(ei, ej), ek), product(ei, product(ej, ek))))
          out.push_back("associativity fails at (" + std::to_string(i) + "," +
                        std::to_string(j) + "," + std::to_string(k) + ")");
      }
    }
  if (diff.rows > 0) {
    if (diff.rows != dim || diff.cols != dim) {
      out.push_back("differential shape mismatch");
      return out;
    }
    auto dvec = [&](const SparseVec& v) { return sv_from_dense(sp_apply(diff, sv_to_dense(v, dim)), p); };
    for (int i = 0; i < dim; ++i)
      for (auto& [k, c] : diff.col_vec(i))
        if (c && deg[k] != deg[i] - 1)
          out.push_back("differential degree fails at " + std::to_string(i));
    for (int i = 0; i < dim; ++i) {
      SparseVec e{{i, 1}};
      if (!dvec(dvec(e)).empty()) out.push_back("d^2 fails at " + std::to_string(i));
    }
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) {
        SparseVec ei{{i, 1}}, ej{{j, 1}};
        SparseVec lhs = dvec(product(ei, ej));
        SparseVec rhs = sv_axpy(product(dvec(ei), ej), parity(deg[i]) ? p - 1 : 1,
                                product(ei, dvec(ej)), p);
        if (!eq(lhs, rhs))
          out.push_back("Leibniz fails at (" + std::to_string(i) + "," + std::to_string(j) + ")");
      }
  }
  return out;
}

void AlgebraPresentation::validate() const {
  std::vector<std::string> v = violations();
  if (v.empty()) return;
  std::string msg = "invalid algebra:";
  for (auto& s : v) msg += "\n  " + s;
  throw std::invalid_argument(msg);
}

AlgebraPresentation build_algebra(AlgebraPresentation spec) {
  spec.validate();
  return spec;
}

AlgebraPresentation ground_field(i64 p) { return truncated_poly(1, p); }

AlgebraPresentation truncated_poly(int n, i64 p) {
  AlgebraPresentation a;
  a.p = p;
  a.dim = n;
  for (int i = 0; i < n; ++i) a.labels.push_back(i == 0 ? "1" : "x^" + std::to_string(i));
  a.deg.assign(n, 0);
  a.unit.assign(n, 0);
  a.unit[0] = 1;
  a.mul.assign(n, std::vector<SparseVec>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i + j < n) a.mul[i][j] = {{i + j, 1}};
  return build_algebra(a);
}

AlgebraPresentation matrix_algebra(int k, i64 p) {
  AlgebraPresentation a;
  a.p = p;
  a.dim = k * k;
  a.deg.assign(a.dim, 0);
  a.unit.assign(a.dim, 0);
  for (int i = 0; i < k; ++i) {
    a.unit[i * k + i] = 1;
    for (int j = 0; j < k; ++j) a.labels.push_back("e" + std::to_string(i) + std::to_string(j));
  }
  a.mul.assign(a.dim, std::vector<SparseVec>(a.dim));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      for (int l = 0; l < k; ++l) a.mul[i * k + j][j * k + l] = {{i * k + l, 1}};
  return build_algebra(a);
}

AlgebraPresentation product_algebra(const AlgebraPresentation& a, const AlgebraPresentation& b) {
  if (a.p != b.p) throw std::invalid_argument("field mismatch");
  AlgebraPresentation c;
  c.p = a.p;
  c.dim = a.dim + b.dim;
  for (auto& s : a.labels) c.labels.push_back("l." + s);
  for (auto& s : b.labels) c.labels.push_back("r." + s);
  c.deg = a.deg;
  c.deg.insert(c.deg.end(), b.deg.begin(), b.deg.end());
  c.unit = a.unit;
  c.unit.insert(c.unit.end(), b.unit.begin(), b.unit.end());
  c.mul.assign(c.dim, std::vector<SparseVec>(c.dim));
  for (int i = 0; i < a.dim; ++i)
    for (int j = 0; j < a.dim; ++j) c.mul[i][j] = a.mul[i][j];
  for (int i = 0; i < b.dim; ++i)
    for (int j = 0; j < b.dim; ++j)
      for (auto& [k, v] : b.mul[i][j]) c.mul[a.dim + i][a.dim + j].emplace_back(a.dim + k, v);
  bool dga = a.diff.rows > 0 && !a.diff.is_zero();
  bool dgb = b.diff.rows > 0 && !b.diff.is_zero();
  if (dga || dgb) {
    c.diff = SpMat(c.p, c.dim, c.dim);
    if (a.diff.rows > 0)
      for (int r = 0; r < a.dim; ++r) c.diff.row[r] = a.diff.row[r];
    if (b.diff.rows > 0)
      for (int r = 0; r < b.dim; ++r)
        for (auto& [cc, v] : b.diff.row[r]) c.diff.row[a.dim + r].emplace_back(a.dim + cc, v);
  }
  return build_algebra(c);
}

AlgebraPresentation group_algebra(int m, i64 p) {
  AlgebraPresentation a;
  a.p = p;
  a.dim = m;
  for (int i = 0; i < m; ++i) a.labels.push_back("g^" + std::to_string(i));
  a.deg.assign(m, 0);
  a.unit.assign(m, 0);
  a.unit[0] = 1;
  a.mul.assign(m, std::vector<SparseVec>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) a.mul[i][j] = {{(i + j) % m, 1}};
  return build_algebra(a);
}

AlgebraPresentation exterior_dg(i64 p) {
  AlgebraPresentation a;
  a.p = p;
  a.dim = 2;
  a.labels = {"1", "x"};
  a.deg = {0, 1};
  a.unit = {1, 0};
  a.mul.assign(2, std::vector<SparseVec>(2));
  a.mul[0][0] = {{0, 1}};
  a.mul[0][1] = {{1, 1}};
  a.mul[1][0] = {{1, 1}};
  // x * x = 0
  a.diff = SpMat(p, 2, 2);  // explicit zero differential: DG with d = 0
  return build_algebra(a);
}

SpMat CyclicModuleData::sigma_dag(int n) const {
  return parity(order(n) + 1) ? sp_scale(rot[n], p - 1) : rot[n];
}

std::vector<std::string> check_cyclic_relations(const CyclicModuleData& e) {
  std::vector<std::string> out;
  auto tag = [](int n, const std::string& what) {
    return "level " + std::to_string(n) + ": " + what;
  };
  for (int n = 0; n <= e.max_index; ++n) {
    if (static_cast<int>(e.face[n].size()) != n + 1) {
      out.push_back(tag(n, "face count"));
      continue;
    }
    for (int i = 0; i <= n; ++i)
      if (e.face[n][i].cols != e.dims[n] || e.face[n][i].rows != e.dim(n - 1))
        out.push_back(tag(n, "face shape d_" + std::to_string(i)));
    if (e.rot[n].rows != e.dims[n] || e.rot[n].cols != e.dims[n])
      out.push_back(tag(n, "rotation shape"));
    // t^(l(n+1)) = id
    SpMat tp = SpMat::identity(e.p, e.dims[n]);
    for (int j = 0; j < e.order(n); ++j) tp = sp_mul(e.rot[n], tp);
    if (!sp_equal(tp, SpMat::identity(e.p, e.dims[n])))
      out.push_back(tag(n, "rotation order"));
    if (n >= 1) {
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j <= n; ++j)
          if (!sp_equal(sp_mul(e.face[n - 1][i], e.face[n][j]),
                        sp_mul(e.face[n - 1][j - 1], e.face[n][i])))
            out.push_back(tag(n, "simplicial identity (" + std::to_string(i) + "," +
                                  std::to_string(j) + ")"));
      for (int i = 1; i <= n; ++i)
        if (!sp_equal(sp_mul(e.face[n][i], e.rot[n]),
                      sp_mul(e.rot[n - 1], e.face[n][i - 1])))
          out.push_back(tag(n, "cyclic identity d_" + std::to_string(i) + " t"));
      if (!sp_equal(sp_mul(e.face[n][0], e.rot[n]), e.face[n][n]))
        out.push_back(tag(n, "cyclic identity d_0 t = d_n"));
      // b (1 - sigma-dagger) = (1 - sigma-dagger) b'
      SpMat b(e.p, e.dim(n - 1), e.dims[n]), bp = b;
      for (int i = 0; i <= n; ++i) {
        SpMat f = parity(i) ? sp_scale(e.face[n][i], e.p - 1) : e.face[n][i];
        b = sp_add(b, f);
        if (i < n) bp = sp_add(bp, f);
      }
      SpMat lhs = sp_mul(b, sp_sub(SpMat::identity(e.p, e.dims[n]), e.sigma_dag(n)));
      SpMat rhs = sp_mul(sp_sub(SpMat::identity(e.p, e.dim(n - 1)), e.sigma_dag(n - 1)), bp);
      if (!sp_equal(lhs, rhs)) out.push_back(tag(n, "b(1-sigma) = (1-sigma)b'"));
    }
    // internal grading and differential
    if (!e.wdeg[n].empty()) {
      auto graded_ok = [&](const SpMat& f, const std::vector<int>& src,
                           const std::vector<int>& dst, int shift) {
        for (int r = 0; r < f.rows; ++r)
          for (auto& [c, v] : f.row[r])
            if (v && dst[r] != src[c] + shift) return false;
        return true;
      };
      for (int i = 0; i <= n && n >= 1; ++i)
        if (!graded_ok(e.face[n][i], e.wdeg[n], e.wdeg[n - 1], 0))
          out.push_back(tag(n, "face degree d_" + std::to_string(i)));
      if (!graded_ok(e.rot[n], e.wdeg[n], e.wdeg[n], 0))
        out.push_back(tag(n, "rotation degree"));
      if (e.idiff[n].rows > 0) {
        if (!graded_ok(e.idiff[n], e.wdeg[n], e.wdeg[n], -1))
          out.push_back(tag(n, "internal differential degree"));
        if (!sp_mul(e.idiff[n], e.idiff[n]).is_zero())
          out.push_back(tag(n, "internal d^2"));
        if (!sp_equal(sp_mul(e.idiff[n], e.rot[n]), sp_mul(e.rot[n], e.idiff[n])))
          out.push_back(tag(n, "rotation vs internal differential"));
        if (n >= 1)
          for (int i = 0; i <= n; ++i)
            if (!sp_equal(sp_mul(e.idiff[n - 1], e.face[n][i]),
                          sp_mul(e.face[n][i], e.idiff[n])))
              out.push_back(tag(n, "face vs internal differential d_" + std::to_string(i)));
      }
    }
  }
  return out;
}

CyclicModuleData build_anat(const AlgebraPresentation& a, int max_index) {
  CyclicModuleData e;
  e.p = a.p;
  e.level = 1;
  e.max_index = max_index;
  if (ipow(a.dim, max_index + 1) > kLevelBudget)
    throw std::invalid_argument("level budget exceeded");
  bool dg = a.graded();
  for (int n = 0; n <= max_index; ++n) {
    int m = n + 1;
    i64 dn = ipow(a.dim, m);
    e.dims.push_back(static_cast<int>(dn));
    std::vector<int> wd;
    if (dg) {
      wd.resize(dn);
      for (i64 idx = 0; idx < dn; ++idx) {
        int s = 0;
        for (int d : unrank(idx, a.dim, m)) s += a.deg[d];
        wd[idx] = s;
      }
    }
    e.wdeg.push_back(std::move(wd));

    std::vector<SpMat> faces;
    i64 dprev = ipow(a.dim, n);
    for (int i = 0; i <= n; ++i)
      faces.push_back(SpMat(a.p, static_cast<int>(n == 0 ? 0 : dprev), static_cast<int>(dn)));
    if (n > 0) {
      for (i64 idx = 0; idx < dn; ++idx) {
        std::vector<int> t = unrank(idx, a.dim, m);
        for (int i = 0; i < n; ++i) {
          std::vector<int> rest = t;
          rest.erase(rest.begin() + i, rest.begin() + i + 2);
          for (auto& [k, c] : a.mul[t[i]][t[i + 1]]) {
            std::vector<int> img = rest;
            img.insert(img.begin() + i, k);
            faces[i].set(static_cast<int>(rank_of(img, a.dim)), static_cast<int>(idx), c);
          }
        }
        // wrap face: multiply the last factor into the first, Koszul sign
        int s = 0;
        for (int j = 0; j < n; ++j) s += a.deg[t[j]];
        i64 sign = parity(a.deg[t[n]] * s) ? a.p - 1 : 1;
        std::vector<int> mid(t.begin() + 1, t.end() - 1);
        for (auto& [k, c] : a.mul[t[n]][t[0]]) {
          std::vector<int> img = mid;
          img.insert(img.begin(), k);
          faces[n].set(static_cast<int>(rank_of(img, a.dim)), static_cast<int>(idx),
                       fp_mul(c, sign, a.p));
        }
      }
    }
    e.face.push_back(std::move(faces));

    SpMat t_n(a.p, static_cast<int>(dn), static_cast<int>(dn));
    for (i64 idx = 0; idx < dn; ++idx) {
      std::vector<int> t = unrank(idx, a.dim, m);
      int s = 0;
      for (int j = 0; j < n; ++j) s += a.deg[t[j]];
      i64 sign = parity(a.deg[t[n]] * s) ? a.p - 1 : 1;
      std::vector<int> img(1, t[n]);
      img.insert(img.end(), t.begin(), t.end() - 1);
      t_n.set(static_cast<int>(rank_of(img, a.dim)), static_cast<int>(idx), sign);
    }
    e.rot.push_back(std::move(t_n));

    SpMat delta;
    if (dg && a.diff.rows > 0 && !a.diff.is_zero()) {
      delta = SpMat(a.p, static_cast<int>(dn), static_cast<int>(dn));
      for (i64 idx = 0; idx < dn; ++idx) {
        std::vector<int> t = unrank(idx, a.dim, m);
        int s = 0;
        for (int i = 0; i < m; ++i) {
          i64 sign = parity(s) ? a.p - 1 : 1;
          for (auto& [k, c] : a.diff.col_vec(t[i])) {
            std::vector<int> img = t;
            img[i] = k;
            delta.set(static_cast<int>(rank_of(img, a.dim)), static_cast<int>(idx),
                      fp_mul(c, sign, a.p));
          }
          s += a.deg[t[i]];
        }
      }
    }
    e.idiff.push_back(std::move(delta));
  }
  return e;
}

CyclicModuleData edgewise(const CyclicModuleData& e, int l, int out_max_index) {
  if (e.level != 1) throw std::invalid_argument("edgewise needs a level-1 input");
  if (l * (out_max_index + 1) - 1 > e.max_index)
    throw std::invalid_argument("insufficient source depth");
  CyclicModuleData o;
  o.p = e.p;
  o.level = l;
  o.max_index = out_max_index;
  for (int n = 0; n <= out_max_index; ++n) {
    int L = l * (n + 1) - 1;
    o.dims.push_back(e.dims[L]);
    o.wdeg.push_back(e.wdeg[L]);
    o.idiff.push_back(e.idiff[L]);
    std::vector<SpMat> faces;
    for (int i = 0; i <= n; ++i) {
      SpMat acc = SpMat::identity(e.p, e.dims[L]);
      bool empty_target = false;
      for (int j = l - 1; j >= 0; --j) {
        int lev = L - (l - 1 - j);
        if (lev == 0) { empty_target = true; break; }
        acc = sp_mul(e.face[lev][i + j * (n + 1)], acc);
      }
      if (empty_target) acc = SpMat(e.p, 0, e.dims[L]);
      faces.push_back(std::move(acc));
    }
    o.face.push_back(std::move(faces));
    // rotation with order l(n+1) = L+1: the source rotation itself
    o.rot.push_back(e.rot[L]);
  }
  return o;
}

std::vector<std::string> SimplicialSigma::check() const {
  std::vector<std::string> out;
  auto tag = [](int n, const std::string& what) {
    return "level " + std::to_string(n) + ": " + what;
  };
  for (int n = 0; n <= max_index; ++n) {
    SpMat sp = SpMat::identity(p, dims[n]);
    for (int j = 0; j < l; ++j) sp = sp_mul(sigma[n], sp);
    if (!sp_equal(sp, SpMat::identity(p, dims[n]))) out.push_back(tag(n, "sigma order"));
    if (n >= 1) {
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j <= n; ++j)
          if (!sp_equal(sp_mul(face[n - 1][i], face[n][j]),
                        sp_mul(face[n - 1][j - 1], face[n][i])))
            out.push_back(tag(n, "simplicial identity (" + std::to_string(i) + "," +
                                  std::to_string(j) + ")"));
      for (int i = 0; i <= n; ++i)
        if (!sp_equal(sp_mul(sigma[n - 1], face[n][i]), sp_mul(face[n][i], sigma[n])))
          out.push_back(tag(n, "sigma vs d_" + std::to_string(i)));
    }
  }
  return out;
}

SimplicialSigma restrict_j(const CyclicModuleData& e) {
  SimplicialSigma s;
  s.p = e.p;
  s.l = e.level;
  s.max_index = e.max_index;
  s.dims = e.dims;
  s.wdeg = e.wdeg;
  s.face = e.face;
  s.idiff = e.idiff;
  for (int n = 0; n <= e.max_index; ++n) {
    SpMat sg = SpMat::identity(e.p, e.dims[n]);
    for (int j = 0; j < n + 1; ++j) sg = sp_mul(e.rot[n], sg);
    s.sigma.push_back(std::move(sg));
  }
  return s;
}

std::vector<std::string> BimodulePresentation::violations(const AlgebraPresentation& a) const {
  std::vector<std::string> out;
  if (static_cast<int>(lact.size()) != a.dim || static_cast<int>(ract.size()) != a.dim) {
    out.push_back("action count mismatch");
    return out;
  }
  SpMat id = SpMat::identity(p, dim);
  auto lin = [&](const std::vector<SpMat>& act, const SparseVec& v) {
    SpMat acc(p, dim, dim);
    for (auto& [i, c] : v) acc = sp_add(acc, sp_scale(act[i], c));
    return acc;
  };
  SparseVec one = sv_from_dense(a.unit, a.p);
  if (!sp_equal(lin(lact, one), id)) out.push_back("left unit action");
  if (!sp_equal(lin(ract, one), id)) out.push_back("right unit action");
  for (int i = 0; i < a.dim; ++i)
    for (int j = 0; j < a.dim; ++j) {
      SparseVec ei{{i, 1}}, ej{{j, 1}};
      if (!sp_equal(sp_mul(lact[i], lact[j]), lin(lact, a.product(ei, ej))))
        out.push_back("left action fails at (" + std::to_string(i) + "," + std::to_string(j) + ")");
      if (!sp_equal(sp_mul(ract[j], ract[i]), lin(ract, a.product(ei, ej))))
        out.push_back("right action fails at (" + std::to_string(i) + "," + std::to_string(j) + ")");
      if (!sp_equal(sp_mul(lact[i], ract[j]), sp_mul(ract[j], lact[i])))
        out.push_back("actions do not commute at (" + std::to_string(i) + "," +
                      std::to_string(j) + ")");
    }
  return out;
}

BimodulePresentation diagonal_bimodule(const AlgebraPresentation& a) {
  BimodulePresentation m;
  m.p = a.p;
  m.dim = a.dim;
  m.deg = a.deg;
  for (int i = 0; i < a.dim; ++i) {
    SpMat lm(a.p, a.dim, a.dim), rm(a.p, a.dim, a.dim);
    for (int j = 0; j < a.dim; ++j) {
      for (auto& [k, c] : a.mul[i][j]) lm.set(k, j, c);
      for (auto& [k, c] : a.mul[j][i]) rm.set(k, j, c);
    }
    m.lact.push_back(std::move(lm));
    m.ract.push_back(std::move(rm));
  }
  m.diff = a.diff;
  return m;
}

BimodulePresentation free_bimodule(const AlgebraPresentation& a) {
  // A (x) A with u.(x (x) y).v = ux (x) yv (Koszul sign for v passing x, y)
  BimodulePresentation m;
  m.p = a.p;
  m.dim = a.dim * a.dim;
  for (int x = 0; x < a.dim; ++x)
    for (int y = 0; y < a.dim; ++y) m.deg.push_back(a.deg[x] + a.deg[y]);
  for (int i = 0; i < a.dim; ++i) {
    SpMat lm(a.p, m.dim, m.dim), rm(a.p, m.dim, m.dim);
    for (int x = 0; x < a.dim; ++x)
      for (int y = 0; y < a.dim; ++y) {
        int col = x * a.dim + y;
        for (auto& [k, c] : a.mul[i][x]) lm.set(k * a.dim + y, col, c);
        i64 sign = parity(a.deg[i] * a.deg[x]) ? a.p - 1 : 1;
        for (auto& [k, c] : a.mul[y][i]) rm.set(x * a.dim + k, col, fp_mul(c, sign, a.p));
      }
    m.lact.push_back(std::move(lm));
    m.ract.push_back(std::move(rm));
  }
  if (a.diff.rows > 0 && !a.diff.is_zero()) {
    m.diff = SpMat(a.p, m.dim, m.dim);
    for (int x = 0; x < a.dim; ++x)
      for (int y = 0; y < a.dim; ++y) {
        int col = x * a.dim + y;
        for (auto& [k, c] : a.diff.col_vec(x)) m.diff.set(k * a.dim + y, col, c);
        i64 sign = parity(a.deg[x]) ? a.p - 1 : 1;
        for (auto& [k, c] : a.diff.col_vec(y)) m.diff.set(x * a.dim + k, col, fp_mul(c, sign, a.p));
      }
  }
  return m;
}

namespace {

// word machinery for hoch_coeff: a level-n basis word has l module digits
// followed by l*n algebra digits, factor 0 major throughout.
struct HochShape {
  const AlgebraPresentation* a;
  const BimodulePresentation* m;
  int l;
  int deg_of(const std::vector<int>& w, int pos) const {
    return pos < l ? m->deg[w[pos]] : a->deg[w[pos]];
  }
  i64 index_of(const std::vector<int>& w) const {
    i64 idx = 0;
    for (int pos = 0; pos < static_cast<int>(w.size()); ++pos)
      idx = idx * (pos < l ? m->dim : a->dim) + w[pos];
    return idx;
  }
  std::vector<int> word_of(i64 idx, int n) const {
    int len = l * (n + 1);
    std::vector<int> w(len);
    for (int pos = len - 1; pos >= 0; --pos) {
      int base = pos < l ? m->dim : a->dim;
      w[pos] = static_cast<int>(idx % base);
      idx /= base;
    }
    return w;
  }
};

// accumulate c * (word) into column col of f
using Accum = std::vector<std::pair<i64, i64>>;  // (row index, coeff)

}  // namespace

SimplicialSigma hoch_coeff(const AlgebraPresentation& a, const BimodulePresentation& m, int l,
                           int max_index) {
  if (l < 1) throw std::invalid_argument("bad level");
  {
    std::vector<std::string> v = m.violations(a);
    if (!v.empty()) throw std::invalid_argument("invalid bimodule: " + v.front());
  }
  HochShape sh{&a, &m, l};
  SimplicialSigma out;
  out.p = a.p;
  out.l = l;
  out.max_index = max_index;
  i64 mdim = ipow(m.dim, l);
  for (int n = 0; n <= max_index; ++n) {
    i64 dn = mdim * ipow(a.dim, l * n);
    if (dn > kLevelBudget) throw std::invalid_argument("level budget exceeded");
    out.dims.push_back(static_cast<int>(dn));
    std::vector<int> wd(dn);
    bool dg = a.graded();
    for (int d : m.deg) dg = dg || d != 0;
    if (dg) {
      for (i64 idx = 0; idx < dn; ++idx) {
        std::vector<int> w = sh.word_of(idx, n);
        int s = 0;
        for (int pos = 0; pos < static_cast<int>(w.size()); ++pos) s += sh.deg_of(w, pos);
        wd[idx] = s;
      }
    }
    out.wdeg.push_back(std::move(wd));
    out.idiff.push_back(SpMat());

    // partial sums of word degrees for sign bookkeeping
    auto block_deg = [&](const std::vector<int>& w, int blk) {  // blk 0 = module block
      int s = 0;
      for (int k = 0; k < l; ++k) s += sh.deg_of(w, blk * l + k);
      return s;
    };

    std::vector<SpMat> faces;
    for (int i = 0; i <= n; ++i)
      faces.push_back(SpMat(a.p, n == 0 ? 0 : static_cast<int>(dn / ipow(a.dim, l)),
                            static_cast<int>(dn)));
    SpMat sg(a.p, static_cast<int>(dn), static_cast<int>(dn));

    for (i64 idx = 0; idx < dn; ++idx) {
      std::vector<int> w = sh.word_of(idx, n);
      // sigma: rotate every block by one, Koszul sign per block
      {
        std::vector<int> img = w;
        int sgn = 0;
        for (int blk = 0; blk <= n; ++blk) {
          int base = blk * l;
          int last = img[base + l - 1];
          int rest = block_deg(img, blk) - sh.deg_of(img, base + l - 1);
          sgn += sh.deg_of(img, base + l - 1) * rest;
          for (int k = l - 1; k > 0; --k) img[base + k] = img[base + k - 1];
          img[base] = last;
        }
        sg.set(static_cast<int>(sh.index_of(img)), static_cast<int>(idx),
               parity(sgn) ? a.p - 1 : 1);
      }
      if (n == 0) continue;

      // helper: expand a list of per-slot sparse results into matrix columns
      auto emit = [&](SpMat& f, const std::vector<int>& prefix,
                      const std::vector<SparseVec>& slots, const std::vector<int>& suffix,
                      i64 coeff) {
        // iterate the product of the slot supports
        std::vector<size_t> pick(slots.size(), 0);
        for (auto& s : slots)
          if (s.empty()) return;
        while (true) {
          std::vector<int> img = prefix;
          i64 c = coeff;
          for (size_t q = 0; q < slots.size(); ++q) {
            img.push_back(slots[q][pick[q]].first);
            c = fp_mul(c, slots[q][pick[q]].second, a.p);
          }
          img.insert(img.end(), suffix.begin(), suffix.end());
          f.set(static_cast<int>(sh.index_of(img)), static_cast<int>(idx),
                fp_norm(f.get(static_cast<int>(sh.index_of(img)), static_cast<int>(idx)) + c,
                        a.p));
          size_t q = 0;
          while (q < slots.size() && ++pick[q] == slots[q].size()) pick[q++] = 0;
          if (q == slots.size()) break;
        }
      };

      // inner faces d_i, 1 <= i < n: multiply algebra blocks i and i+1
      for (int i = 1; i < n; ++i) {
        int sgn = 0;  // interleaving: y_k passes x_j for j > k
        for (int k = 0; k < l; ++k) {
          int above = 0;
          for (int j = k + 1; j < l; ++j) above += sh.deg_of(w, i * l + j);
          sgn += sh.deg_of(w, (i + 1) * l + k) * above;
        }
        std::vector<SparseVec> slots;
        for (int k = 0; k < l; ++k)
          slots.push_back(a.mul[w[i * l + k]][w[(i + 1) * l + k]]);
        std::vector<int> prefix(w.begin(), w.begin() + i * l);
        std::vector<int> suffix(w.begin() + (i + 2) * l, w.end());
        emit(faces[i], prefix, slots, suffix, parity(sgn) ? a.p - 1 : 1);
      }
      // d_0: right action of sigma(block 1) on the module block
      {
        // rotate block 1 forward by one with Koszul sign
        std::vector<int> b(w.begin() + l, w.begin() + 2 * l);
        std::vector<int> bdeg(l);
        for (int k = 0; k < l; ++k) bdeg[k] = a.deg[b[k]];
        int sgn = bdeg[l - 1] * (block_deg(w, 1) - bdeg[l - 1]);
        std::rotate(b.rbegin(), b.rbegin() + 1, b.rend());
        std::rotate(bdeg.rbegin(), bdeg.rbegin() + 1, bdeg.rend());
        // interleaving: b_k passes module factors above k
        for (int k = 0; k < l; ++k) {
          int above = 0;
          for (int j = k + 1; j < l; ++j) above += sh.deg_of(w, j);
          sgn += bdeg[k] * above;
        }
        std::vector<SparseVec> slots;
        for (int k = 0; k < l; ++k) slots.push_back(m.ract[b[k]].col_vec(w[k]));
        std::vector<int> prefix;
        std::vector<int> suffix(w.begin() + 2 * l, w.end());
        emit(faces[0], prefix, slots, suffix, parity(sgn) ? a.p - 1 : 1);
      }
      // d_n: wrap the last algebra block onto the module block from the left
      {
        int bsum = block_deg(w, n);
        int before = 0;
        for (int pos = 0; pos < l * n; ++pos) before += sh.deg_of(w, pos);
        int sgn = bsum * before;  // move the block past everything before it
        // interleaving: b_k passes module factors below k
        for (int k = 0; k < l; ++k) {
          int below = 0;
          for (int j = 0; j < k; ++j) below += sh.deg_of(w, j);
          sgn += a.deg[w[n * l + k]] * below;
        }
        std::vector<SparseVec> slots;
        for (int k = 0; k < l; ++k) slots.push_back(m.lact[w[n * l + k]].col_vec(w[k]));
        std::vector<int> prefix;
        std::vector<int> suffix(w.begin() + l, w.begin() + l * n);
        emit(faces[n], prefix, slots, suffix, parity(sgn) ? a.p - 1 : 1);
      }
    }
    out.face.push_back(std::move(faces));
    out.sigma.push_back(std::move(sg));
  }
  return out;
}

}  // namespace cyclohom
