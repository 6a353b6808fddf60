#include "cyclohom/gf_linalg.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace cyclohom {

FieldPrime::FieldPrime(i64 prime) : p(prime) {
  if (p < 2 || p >= (i64(1) << 31)) throw std::invalid_argument("prime out of range");
  for (i64 d = 2; d * d <= p; ++d)
    if (p % d == 0) throw std::invalid_argument("not prime: " + std::to_string(p));
}

i64 fp_inv(i64 x, i64 p) {
  x = fp_norm(x, p);
  if (x == 0) throw std::invalid_argument("inverse of zero");
  // extended Euclid
  i64 a = x, b = p, u = 1, v = 0;
  while (b) {
    i64 q = a / b;
    a -= q * b; std::swap(a, b);
    u -= q * v; std::swap(u, v);
  }
  assert(a == 1);
  return fp_norm(u, p);
}

SparseVec sv_scale(const SparseVec& v, i64 c, i64 p) {
  c = fp_norm(c, p);
  SparseVec out;
  if (c == 0) return out;
  out.reserve(v.size());
  for (auto& [i, x] : v) {
    i64 y = fp_mul(x, c, p);
    if (y) out.emplace_back(i, y);
  }
  return out;
}

SparseVec sv_axpy(const SparseVec& x, i64 c, const SparseVec& y, i64 p) {
  c = fp_norm(c, p);
  if (c == 0) return x;
  SparseVec out;
  out.reserve(x.size() + y.size());
  size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    if (j >= y.size() || (i < x.size() && x[i].first < y[j].first)) {
      out.push_back(x[i++]);
    } else if (i >= x.size() || y[j].first < x[i].first) {
      i64 v = fp_mul(y[j].second, c, p);
      if (v) out.emplace_back(y[j].first, v);
      ++j;
    } else {
      i64 v = fp_norm(x[i].second + c * y[j].second, p);
      if (v) out.emplace_back(x[i].first, v);
      ++i; ++j;
    }
  }
  return out;
}

SparseVec sv_from_dense(const std::vector<i64>& v, i64 p) {
  SparseVec out;
  for (int i = 0; i < static_cast<int>(v.size()); ++i) {
    i64 x = fp_norm(v[i], p);
    if (x) out.emplace_back(i, x);
  }
  return out;
}

std::vector<i64> sv_to_dense(const SparseVec& v, int dim) {
  std::vector<i64> out(dim, 0);
  for (auto& [i, x] : v) out[i] = x;
  return out;
}

void SpMat::set(int r, int c, i64 v) {
  v = fp_norm(v, p);
  auto& rw = row[r];
  auto it = std::lower_bound(rw.begin(), rw.end(), c,
                             [](const std::pair<int, i64>& e, int col) { return e.first < col; });
  if (it != rw.end() && it->first == c) {
    if (v) it->second = v; else rw.erase(it);
  } else if (v) {
    rw.insert(it, {c, v});
  }
}

i64 SpMat::get(int r, int c) const {
  const auto& rw = row[r];
  auto it = std::lower_bound(rw.begin(), rw.end(), c,
                             [](const std::pair<int, i64>& e, int col) { return e.first < col; });
  return (it != rw.end() && it->first == c) ? it->second : 0;
}

SparseVec SpMat::col_vec(int c) const {
  SparseVec out;
  for (int r = 0; r < rows; ++r) {
    i64 v = get(r, c);
    if (v) out.emplace_back(r, v);
  }
  return out;
}

bool SpMat::is_zero() const {
  for (auto& r : row)
    if (!r.empty()) return false;
  return true;
}

int SpMat::nnz() const {
  int n = 0;
  for (auto& r : row) n += static_cast<int>(r.size());
  return n;
}

SpMat SpMat::identity(i64 p, int n) {
  SpMat m(p, n, n);
  for (int i = 0; i < n; ++i) m.row[i].emplace_back(i, 1);
  return m;
}

SpMat SpMat::zero(i64 p, int r, int c) { return SpMat(p, r, c); }

SpMat SpMat::from_dense(i64 p, const std::vector<std::vector<i64>>& a) {
  int r = static_cast<int>(a.size());
  int c = r ? static_cast<int>(a[0].size()) : 0;
  SpMat m(p, r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j)
      if (fp_norm(a[i][j], p)) m.row[i].emplace_back(j, fp_norm(a[i][j], p));
  return m;
}

static void check_same_shape(const SpMat& a, const SpMat& b) {
  if (a.p != b.p || a.rows != b.rows || a.cols != b.cols)
    throw std::invalid_argument("matrix shape/field mismatch");
}

SpMat sp_add(const SpMat& a, const SpMat& b) {
  check_same_shape(a, b);
  SpMat out(a.p, a.rows, a.cols);
  for (int r = 0; r < a.rows; ++r) out.row[r] = sv_axpy(a.row[r], 1, b.row[r], a.p);
  return out;
}

SpMat sp_sub(const SpMat& a, const SpMat& b) {
  check_same_shape(a, b);
  SpMat out(a.p, a.rows, a.cols);
  for (int r = 0; r < a.rows; ++r) out.row[r] = sv_axpy(a.row[r], a.p - 1, b.row[r], a.p);
  return out;
}

SpMat sp_scale(const SpMat& a, i64 c) {
  SpMat out(a.p, a.rows, a.cols);
  for (int r = 0; r < a.rows; ++r) out.row[r] = sv_scale(a.row[r], c, a.p);
  return out;
}

SpMat sp_mul(const SpMat& a, const SpMat& b) {
  if (a.p != b.p || a.cols != b.rows) throw std::invalid_argument("matrix product mismatch");
  SpMat out(a.p, a.rows, b.cols);
  for (int r = 0; r < a.rows; ++r) {
    SparseVec acc;
    for (auto& [k, v] : a.row[r]) acc = sv_axpy(acc, v, b.row[k], a.p);
    out.row[r] = std::move(acc);
  }
  return out;
}

SpMat sp_transpose(const SpMat& a) {
  SpMat out(a.p, a.cols, a.rows);
  for (int r = 0; r < a.rows; ++r)
    for (auto& [c, v] : a.row[r]) out.row[c].emplace_back(r, v);
  return out;  // rows already sorted because r increases
}

SpMat sp_kron(const SpMat& a, const SpMat& b) {
  if (a.p != b.p) throw std::invalid_argument("field mismatch");
  SpMat out(a.p, a.rows * b.rows, a.cols * b.cols);
  for (int i = 0; i < a.rows; ++i)
    for (int k = 0; k < b.rows; ++k) {
      auto& dst = out.row[i * b.rows + k];
      for (auto& [j, u] : a.row[i])
        for (auto& [l, v] : b.row[k]) dst.emplace_back(j * b.cols + l, fp_mul(u, v, a.p));
      std::sort(dst.begin(), dst.end());
    }
  return out;
}

std::vector<i64> sp_apply(const SpMat& a, const std::vector<i64>& x) {
  if (static_cast<int>(x.size()) != a.cols) throw std::invalid_argument("apply mismatch");
  std::vector<i64> y(a.rows, 0);
  for (int r = 0; r < a.rows; ++r) {
    i64 s = 0;
    for (auto& [c, v] : a.row[r]) s = fp_norm(s + v * fp_norm(x[c], a.p), a.p);
    y[r] = s;
  }
  return y;
}

SparseVec sp_apply_sv(const SpMat& a, const SparseVec& x) {
  // y = a * x via column combinations of a^T rows is costly; accumulate rows.
  SparseVec y;
  SpMat at = sp_transpose(a);
  for (auto& [c, v] : x) y = sv_axpy(y, v, at.row[c], a.p);
  // y currently indexed by a's row indices (entries of column combination)
  return y;
}

SpMat sp_hstack(const SpMat& a, const SpMat& b) {
  if (a.p != b.p || a.rows != b.rows) throw std::invalid_argument("hstack mismatch");
  SpMat out(a.p, a.rows, a.cols + b.cols);
  for (int r = 0; r < a.rows; ++r) {
    out.row[r] = a.row[r];
    for (auto& [c, v] : b.row[r]) out.row[r].emplace_back(c + a.cols, v);
  }
  return out;
}

SpMat sp_vstack(const SpMat& a, const SpMat& b) {
  if (a.p != b.p || a.cols != b.cols) throw std::invalid_argument("vstack mismatch");
  SpMat out(a.p, a.rows + b.rows, a.cols);
  for (int r = 0; r < a.rows; ++r) out.row[r] = a.row[r];
  for (int r = 0; r < b.rows; ++r) out.row[a.rows + r] = b.row[r];
  return out;
}

bool sp_equal(const SpMat& a, const SpMat& b) {
  if (a.p != b.p || a.rows != b.rows || a.cols != b.cols) return false;
  for (int r = 0; r < a.rows; ++r)
    if (a.row[r] != b.row[r]) return false;
  return true;
}

SpMat sp_block_diag(const std::vector<SpMat>& blocks, i64 p) {
  int r = 0, c = 0;
  for (auto& b : blocks) { r += b.rows; c += b.cols; }
  SpMat out(p, r, c);
  int ro = 0, co = 0;
  for (auto& b : blocks) {
    for (int i = 0; i < b.rows; ++i)
      for (auto& [j, v] : b.row[i]) out.row[ro + i].emplace_back(co + j, v);
    ro += b.rows;
    co += b.cols;
  }
  return out;
}

Eliminator::Eliminator(i64 p, int ambient_dim, int track_dim)
    : p_(p), dim_(ambient_dim), track_dim_(track_dim), pivot_at_(ambient_dim, -1) {}

bool Eliminator::add(SparseVec v, SparseVec track) {
  while (!v.empty()) {
    int lead = v.front().first;
    int q = pivot_at_[lead];
    if (q < 0) {
      // normalize leading coefficient to 1 for determinism
      i64 inv = fp_inv(v.front().second, p_);
      v = sv_scale(v, inv, p_);
      track = sv_scale(track, inv, p_);
      pivot_at_[lead] = static_cast<int>(pivots_.size());
      pivots_.push_back(std::move(v));
      tracks_.push_back(std::move(track));
      return true;
    }
    i64 c = p_ - v.front().second;  // subtract c' * pivot with pivot lead = 1
    track = sv_axpy(track, c, tracks_[q], p_);
    v = sv_axpy(v, c, pivots_[q], p_);
  }
  return false;
}

SparseVec Eliminator::reduce(SparseVec v, SparseVec* comb) const {
  SparseVec combination;
  while (!v.empty()) {
    int lead = v.front().first;
    int q = pivot_at_[lead];
    if (q < 0) break;
    i64 c = p_ - v.front().second;
    if (comb) combination = sv_axpy(combination, c, tracks_[q], p_);
    v = sv_axpy(v, c, pivots_[q], p_);
  }
  if (comb) *comb = std::move(combination);
  return v;
}

bool Eliminator::contains(const SparseVec& v) const { return reduce(v, nullptr).empty(); }

RrefResult rref(const SpMat& m) {
  RrefResult out;
  Eliminator el(m.p, m.rows, m.cols);
  SpMat mt = sp_transpose(m);  // rows of mt = columns of m
  std::vector<SparseVec> kernel_cols;
  for (int j = 0; j < m.cols; ++j) {
    SparseVec track{{j, 1}};
    SparseVec col = mt.row[j];
    SparseVec comb;
    SparseVec residue = el.reduce(col, &comb);
    if (residue.empty()) {
      // track + comb expresses 0 = col_j - sum(pivot combos): kernel vector
      kernel_cols.push_back(sv_axpy(track, 1, comb, m.p));
    } else {
      el.add(col, track);
    }
  }
  out.rank = el.rank();
  out.kernel.ambient_dim = m.cols;
  out.kernel.basis = SpMat(m.p, m.cols, static_cast<int>(kernel_cols.size()));
  {
    SpMat tmp(m.p, static_cast<int>(kernel_cols.size()), m.cols);
    for (size_t i = 0; i < kernel_cols.size(); ++i) tmp.row[i] = kernel_cols[i];
    out.kernel.basis = sp_transpose(tmp);
  }
  out.image.ambient_dim = m.rows;
  {
    SpMat tmp(m.p, el.rank(), m.rows);
    for (int i = 0; i < el.rank(); ++i) tmp.row[i] = el.pivot_rows()[i];
    out.image.basis = sp_transpose(tmp);
  }
  return out;
}

bool solve(const SpMat& m, const std::vector<i64>& v, std::vector<i64>* x) {
  if (static_cast<int>(v.size()) != m.rows) throw std::invalid_argument("solve shape mismatch");
  Eliminator el(m.p, m.rows, m.cols);
  SpMat mt = sp_transpose(m);
  for (int j = 0; j < m.cols; ++j) el.add(mt.row[j], SparseVec{{j, 1}});
  SparseVec comb;
  SparseVec residue = el.reduce(sv_from_dense(v, m.p), &comb);
  if (!residue.empty()) return false;
  // v = sum over pivots; comb holds -(coefficients); negate.
  if (x) {
    *x = sv_to_dense(sv_scale(comb, m.p - 1, m.p), m.cols);
  }
  return true;
}

int sp_rank(const SpMat& m) {
  // rank(M) = rank(M^T); feeding rows avoids a transpose
  Eliminator el(m.p, m.cols, 0);
  for (int r = 0; r < m.rows; ++r) el.add(m.row[r]);
  return el.rank();
}

Subspace sp_kernel(const SpMat& m) { return rref(m).kernel; }
Subspace sp_image(const SpMat& m) { return rref(m).image; }

Subspace subspace_full(i64 p, int n) { return Subspace{n, SpMat::identity(p, n)}; }
Subspace subspace_zero(i64 p, int n) { return Subspace{n, SpMat(p, n, 0)}; }

Subspace sub_intersect(const Subspace& a, const Subspace& b, i64 p) {
  if (a.ambient_dim != b.ambient_dim) throw std::invalid_argument("ambient mismatch");
  if (a.dim() == 0 || b.dim() == 0) return subspace_zero(p, a.ambient_dim);
  SpMat stacked = sp_hstack(a.basis, sp_scale(b.basis, p - 1));
  Subspace ker = sp_kernel(stacked);
  // x-part (first a.dim() coords) gives coefficients in a's basis
  SpMat coeffs(p, a.dim(), ker.dim());
  for (int r = 0; r < a.dim(); ++r) coeffs.row[r] = ker.basis.row[r];
  SpMat vecs = sp_mul(a.basis, coeffs);
  // columns may be dependent? they are independent because of triangular kernel
  Subspace img = sp_image(vecs);
  img.ambient_dim = a.ambient_dim;
  return img;
}

Subspace sub_sum(const Subspace& a, const Subspace& b, i64 p) {
  if (a.ambient_dim != b.ambient_dim) throw std::invalid_argument("ambient mismatch");
  Subspace img = sp_image(sp_hstack(a.basis, b.basis));
  img.ambient_dim = a.ambient_dim;
  return img;
}

Subspace sub_preimage(const SpMat& d, const Subspace& w) {
  if (d.rows != w.ambient_dim) throw std::invalid_argument("preimage ambient mismatch");
  // kernel of [d | -basis]; x-part spans the preimage
  SpMat stacked = sp_hstack(d, sp_scale(w.basis, d.p - 1));
  Subspace ker = sp_kernel(stacked);
  SpMat xpart(d.p, d.cols, ker.dim());
  for (int r = 0; r < d.cols; ++r) xpart.row[r] = ker.basis.row[r];
  Subspace img = sp_image(xpart);
  img.ambient_dim = d.cols;
  return img;
}

bool sub_contains(const Subspace& a, const SparseVec& v, i64 p) {
  Eliminator el(p, a.ambient_dim);
  SpMat bt = sp_transpose(a.basis);
  for (int j = 0; j < a.dim(); ++j) el.add(bt.row[j]);
  return el.contains(v);
}

bool sub_leq(const Subspace& a, const Subspace& b, i64 p) {
  Eliminator el(p, b.ambient_dim);
  SpMat bt = sp_transpose(b.basis);
  for (int j = 0; j < b.dim(); ++j) el.add(bt.row[j]);
  SpMat at = sp_transpose(a.basis);
  for (int j = 0; j < a.dim(); ++j)
    if (!el.contains(at.row[j])) return false;
  return true;
}

SpMat restrict_map(const SpMat& f, const Subspace& src, const Subspace& dst) {
  if (f.cols != src.ambient_dim || f.rows != dst.ambient_dim)
    throw std::invalid_argument("restrict_map shape mismatch");
  SpMat mapped = sp_mul(f, src.basis);  // dst_ambient x src_dim
  SpMat out(f.p, dst.dim(), src.dim());
  for (int j = 0; j < src.dim(); ++j) {
    std::vector<i64> x;
    std::vector<i64> col(dst.ambient_dim, 0);
    for (int r = 0; r < mapped.rows; ++r) col[r] = mapped.get(r, j);
    if (!solve(dst.basis, col, &x)) throw std::invalid_argument("image escapes target subspace");
    for (int r = 0; r < dst.dim(); ++r)
      if (x[r]) out.set(r, j, x[r]);
  }
  return out;
}

SpMat quotient_map(const Subspace& w, i64 p, int ambient) {
  if (w.ambient_dim != ambient) throw std::invalid_argument("quotient ambient mismatch");
  // Extend basis of w by unit vectors; complement units index quotient coords.
  Eliminator el(p, ambient);
  SpMat wt = sp_transpose(w.basis);
  for (int j = 0; j < w.dim(); ++j) el.add(wt.row[j]);
  std::vector<int> complement;
  for (int i = 0; i < ambient; ++i)
    if (el.add(SparseVec{{i, 1}})) complement.push_back(i);
  // Build projection: for each ambient unit e_i, coordinates of its class.
  // Use a tracked eliminator: reduce e_i against w's basis + complement units,
  // coefficients on complement units are the quotient coordinates.
  int q = static_cast<int>(complement.size());
  Eliminator tracked(p, ambient, w.dim() + q);
  for (int j = 0; j < w.dim(); ++j) tracked.add(wt.row[j], SparseVec{{j, 1}});
  for (int k = 0; k < q; ++k)
    tracked.add(SparseVec{{complement[k], 1}}, SparseVec{{w.dim() + k, 1}});
  SpMat proj(p, q, ambient);
  for (int i = 0; i < ambient; ++i) {
    SparseVec comb;
    SparseVec residue = tracked.reduce(SparseVec{{i, 1}}, &comb);
    if (!residue.empty()) throw std::logic_error("quotient basis incomplete");
    // e_i = -comb combination; quotient coords = -(comb on complement slots)
    for (auto& [slot, c] : comb) {
      if (slot >= w.dim()) proj.set(slot - w.dim(), i, p - c);
    }
  }
  return proj;
}

}  // namespace cyclohom
