#pragma once
// Exact sparse linear algebra over a prime field F_p. Everything downstream
// (homology, towers, spectral sequences) reduces to the eliminator here.
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace cyclohom {

using i64 = std::int64_t;

struct FieldPrime {
  i64 p = 0;
  FieldPrime() = default;
  explicit FieldPrime(i64 prime);  // throws std::invalid_argument unless prime, 2 <= p < 2^31
};

inline i64 fp_norm(i64 x, i64 p) {
  x %= p;
  return x < 0 ? x + p : x;
}
i64 fp_inv(i64 x, i64 p);  // x nonzero mod p
inline i64 fp_mul(i64 a, i64 b, i64 p) { return (a * b) % p; }

// Sparse vector: sorted by index, values in [1, p).
using SparseVec = std::vector<std::pair<int, i64>>;

SparseVec sv_scale(const SparseVec& v, i64 c, i64 p);
SparseVec sv_axpy(const SparseVec& x, i64 c, const SparseVec& y, i64 p);  // x + c*y
SparseVec sv_from_dense(const std::vector<i64>& v, i64 p);
std::vector<i64> sv_to_dense(const SparseVec& v, int dim);

// Sparse matrix over F_p, stored by rows; no explicit zeros.
struct SpMat {
  i64 p = 0;
  int rows = 0, cols = 0;
  std::vector<SparseVec> row;

  SpMat() = default;
  SpMat(i64 p_, int r, int c) : p(p_), rows(r), cols(c), row(r) {}

  void set(int r, int c, i64 v);
  i64 get(int r, int c) const;
  SparseVec col_vec(int c) const;  // column as a SparseVec over row indices
  bool is_zero() const;
  int nnz() const;

  static SpMat identity(i64 p, int n);
  static SpMat zero(i64 p, int r, int c);
  static SpMat from_dense(i64 p, const std::vector<std::vector<i64>>& a);
};

SpMat sp_add(const SpMat& a, const SpMat& b);
SpMat sp_sub(const SpMat& a, const SpMat& b);
SpMat sp_scale(const SpMat& a, i64 c);
SpMat sp_mul(const SpMat& a, const SpMat& b);
SpMat sp_transpose(const SpMat& a);
// Lexicographic basis ordering, left factor major: (M kron N)[i*rN+k][j*cN+l] = M[i][j]*N[k][l].
SpMat sp_kron(const SpMat& a, const SpMat& b);
std::vector<i64> sp_apply(const SpMat& a, const std::vector<i64>& x);
SparseVec sp_apply_sv(const SpMat& a, const SparseVec& x);
SpMat sp_hstack(const SpMat& a, const SpMat& b);
SpMat sp_vstack(const SpMat& a, const SpMat& b);
bool sp_equal(const SpMat& a, const SpMat& b);
// Direct sum placement: block-diagonal of the given matrices.
SpMat sp_block_diag(const std::vector<SpMat>& blocks, i64 p);

// Incremental Gaussian eliminator over an ambient space of fixed dimension.
// Vectors are reduced against previously accepted pivots (first-nonzero = lowest
// index pivoting; fixed insertion order makes every basis deterministic).
class Eliminator {
 public:
  Eliminator(i64 p, int ambient_dim, int track_dim = 0);
  // Returns true if v was independent (kept as pivot). When track vectors are in
  // play, each inserted vector carries a tracking companion of dim track_dim.
  bool add(SparseVec v, SparseVec track = {});
  // Reduce v without inserting; returns residue, and if comb != nullptr fills the
  // pivot-track combination such that v = residue + sum(track combinations).
  SparseVec reduce(SparseVec v, SparseVec* comb) const;
  int rank() const { return static_cast<int>(pivots_.size()); }
  const std::vector<SparseVec>& pivot_rows() const { return pivots_; }
  const std::vector<SparseVec>& pivot_tracks() const { return tracks_; }
  bool contains(const SparseVec& v) const;

 private:
  i64 p_;
  int dim_, track_dim_;
  std::vector<SparseVec> pivots_;
  std::vector<SparseVec> tracks_;
  std::vector<int> pivot_at_;  // leading index -> pivot position, or -1
};

struct Subspace {
  int ambient_dim = 0;
  SpMat basis;  // ambient_dim x dim(subspace); columns independent
  int dim() const { return basis.cols; }
};

struct RrefResult {
  int rank = 0;
  Subspace kernel;  // of the column action x -> Mx
  Subspace image;   // column space
};
RrefResult rref(const SpMat& m);

// Solve M x = v; returns false when v is outside the column space.
bool solve(const SpMat& m, const std::vector<i64>& v, std::vector<i64>* x);

int sp_rank(const SpMat& m);
Subspace sp_kernel(const SpMat& m);
Subspace sp_image(const SpMat& m);

// Subspace algebra. All inputs share p and ambient dimension (checked).
Subspace subspace_full(i64 p, int n);
Subspace subspace_zero(i64 p, int n);
Subspace sub_intersect(const Subspace& a, const Subspace& b, i64 p);
Subspace sub_sum(const Subspace& a, const Subspace& b, i64 p);
// d^{-1}(W) for d: source -> target, W a subspace of the target.
Subspace sub_preimage(const SpMat& d, const Subspace& w);
bool sub_contains(const Subspace& a, const SparseVec& v, i64 p);
bool sub_leq(const Subspace& a, const Subspace& b, i64 p);  // a <= b
// Matrix of f restricted to src_basis in coordinates of dst_basis; requires
// f(src) <= span(dst) (throws otherwise).
SpMat restrict_map(const SpMat& f, const Subspace& src, const Subspace& dst);

// Coordinates on a quotient V/W: returns (proj, dim) where proj is a
// (dim x ambient) matrix whose kernel is exactly W.
SpMat quotient_map(const Subspace& w, i64 p, int ambient);

}  // namespace cyclohom
