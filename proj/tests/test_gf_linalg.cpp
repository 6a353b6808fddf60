#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cyclohom/gf_linalg.hpp"

using namespace cyclohom;

TEST_CASE("field arithmetic") {
  CHECK_THROWS(FieldPrime(4));
  CHECK_THROWS(FieldPrime(1));
  CHECK_NOTHROW(FieldPrime(2));
  CHECK_NOTHROW(FieldPrime(2147483647));
  CHECK(fp_norm(-1, 5) == 4);
  CHECK(fp_norm(7, 5) == 2);
  CHECK(fp_inv(2, 5) == 3);
  CHECK(fp_inv(4, 7) == 2);
  for (i64 x = 1; x < 13; ++x) CHECK(fp_mul(x, fp_inv(x, 13), 13) == 1);
}

TEST_CASE("sparse vectors") {
  SparseVec a{{0, 1}, {2, 2}};
  SparseVec b{{0, 2}, {1, 1}};
  SparseVec s = sv_axpy(a, 1, b, 3);  // (1+2, 1, 2) = (0, 1, 2) mod 3
  CHECK(sv_to_dense(s, 3) == std::vector<i64>({0, 1, 2}));
  CHECK(sv_scale(a, 2, 3) == SparseVec{{0, 2}, {2, 1}});
  CHECK(sv_from_dense({0, 3, 4}, 3) == SparseVec{{2, 1}});
}

TEST_CASE("rank and kernel frozen examples") {
  // 2x2 zero matrix over F_3: rank 0, kernel dimension 2
  SpMat z = SpMat::zero(3, 2, 2);
  CHECK(sp_rank(z) == 0);
  CHECK(sp_kernel(z).dim() == 2);

  // [[1,2],[2,4]] over F_5: rank 1
  SpMat m = SpMat::from_dense(5, {{1, 2}, {2, 4}});
  CHECK(sp_rank(m) == 1);
  CHECK(sp_kernel(m).dim() == 1);
  // kernel vector is a multiple of (2, -1) = (2, 4)
  Subspace k = sp_kernel(m);
  std::vector<i64> kv = {k.basis.get(0, 0), k.basis.get(1, 0)};
  CHECK(fp_norm(kv[0] * 1 + kv[1] * 2, 5) == 0);

  // [[1,1],[1,1]] over F_2: rank 1, kernel spanned by (1,1)
  SpMat n = SpMat::from_dense(2, {{1, 1}, {1, 1}});
  CHECK(sp_rank(n) == 1);
  Subspace kn = sp_kernel(n);
  CHECK(kn.dim() == 1);
  CHECK(kn.basis.get(0, 0) == 1);
  CHECK(kn.basis.get(1, 0) == 1);
}

TEST_CASE("solve") {
  SpMat m = SpMat::from_dense(7, {{1, 2}, {3, 4}});
  std::vector<i64> x;
  CHECK(solve(m, {5, 6}, &x));
  CHECK(fp_norm(1 * x[0] + 2 * x[1], 7) == 5);
  CHECK(fp_norm(3 * x[0] + 4 * x[1], 7) == 6);

  SpMat sing = SpMat::from_dense(5, {{1, 2}, {2, 4}});
  CHECK_FALSE(solve(sing, {0, 1}, &x));
  CHECK(solve(sing, {1, 2}, &x));
}

TEST_CASE("matrix ops") {
  SpMat a = SpMat::from_dense(5, {{1, 2}, {3, 4}});
  SpMat b = SpMat::from_dense(5, {{0, 1}, {1, 0}});
  CHECK(sp_equal(sp_mul(a, b), SpMat::from_dense(5, {{2, 1}, {4, 3}})));
  CHECK(sp_equal(sp_add(a, sp_scale(a, 4)), SpMat::zero(5, 2, 2)));
  CHECK(sp_equal(sp_sub(a, a), SpMat::zero(5, 2, 2)));
  CHECK(sp_equal(sp_transpose(a), SpMat::from_dense(5, {{1, 3}, {2, 4}})));
  SpMat h = sp_hstack(a, b);
  CHECK(h.cols == 4);
  CHECK(h.get(0, 3) == 1);
  SpMat v = sp_vstack(a, b);
  CHECK(v.rows == 4);
  CHECK(v.get(3, 0) == 1);
  CHECK(sp_apply(a, {1, 1}) == std::vector<i64>({3, 2}));
}

TEST_CASE("kronecker product") {
  // I2 kron I3 = I6
  CHECK(sp_equal(sp_kron(SpMat::identity(5, 2), SpMat::identity(5, 3)),
                 SpMat::identity(5, 6)));
  // left-major lexicographic ordering
  SpMat m = SpMat::from_dense(5, {{1, 2}, {3, 4}});
  SpMat n = SpMat::from_dense(5, {{0, 1}, {1, 0}});
  SpMat k = sp_kron(m, n);
  CHECK(k.rows == 4);
  CHECK(k.get(0, 1) == 1);  // M[0][0]*N[0][1]
  CHECK(k.get(0, 3) == 2);  // M[0][1]*N[0][1]
  CHECK(k.get(2, 1) == 3);  // M[1][0]*N[0][1]
  // rank multiplicativity
  CHECK(sp_rank(k) == sp_rank(m) * sp_rank(n));
  SpMat s = SpMat::from_dense(5, {{1, 2}, {2, 4}});
  CHECK(sp_rank(sp_kron(s, m)) == sp_rank(s) * sp_rank(m));
}

TEST_CASE("block diag") {
  SpMat a = SpMat::identity(3, 2);
  SpMat b = SpMat::from_dense(3, {{2}});
  SpMat d = sp_block_diag({a, b}, 3);
  CHECK(d.rows == 3);
  CHECK(d.cols == 3);
  CHECK(d.get(2, 2) == 2);
  CHECK(d.get(2, 0) == 0);
}

TEST_CASE("eliminator determinism and tracking") {
  Eliminator el(5, 3, 2);
  CHECK(el.add(sv_from_dense({1, 1, 0}, 5), sv_from_dense({1, 0}, 5)));
  CHECK(el.add(sv_from_dense({0, 1, 1}, 5), sv_from_dense({0, 1}, 5)));
  CHECK_FALSE(el.add(sv_from_dense({1, 2, 1}, 5), sv_from_dense({1, 1}, 5)));
  CHECK(el.rank() == 2);
  SparseVec comb;
  SparseVec res = el.reduce(sv_from_dense({1, 2, 1}, 5), &comb);
  CHECK(res.empty());
  // residue = v + sum c * pivot, so tracked combination recovers -v's expression
  CHECK(el.contains(sv_from_dense({2, 3, 1}, 5)));
  CHECK_FALSE(el.contains(sv_from_dense({1, 0, 0}, 5)));
}

TEST_CASE("subspace algebra") {
  i64 p = 3;
  Subspace full = subspace_full(p, 3);
  Subspace zero = subspace_zero(p, 3);
  CHECK(full.dim() == 3);
  CHECK(zero.dim() == 0);

  // planes x+y+z=0 and z=0 in F_3^3 intersect in a line
  SpMat a(p, 3, 2);  // span{(1,2,0),(0,1,2)}: x+y+z=0
  a.set(0, 0, 1); a.set(1, 0, 2);
  a.set(1, 1, 1); a.set(2, 1, 2);
  SpMat b(p, 3, 2);  // span{e0, e1}: z=0
  b.set(0, 0, 1); b.set(1, 1, 1);
  Subspace sa{3, a}, sb{3, b};
  Subspace inter = sub_intersect(sa, sb, p);
  CHECK(inter.dim() == 1);
  // the line is x+y=0, z=0
  i64 x0 = inter.basis.get(0, 0), y0 = inter.basis.get(1, 0), z0 = inter.basis.get(2, 0);
  CHECK(z0 == 0);
  CHECK(fp_norm(x0 + y0, p) == 0);
  CHECK(sub_sum(sa, sb, p).dim() == 3);
  CHECK(sub_leq(inter, sa, p));
  CHECK(sub_leq(inter, sb, p));
  CHECK_FALSE(sub_leq(sa, sb, p));
  CHECK(sub_contains(sa, sv_from_dense({1, 2, 0}, p), p));
  CHECK_FALSE(sub_contains(sb, sv_from_dense({0, 0, 1}, p), p));
}

TEST_CASE("preimage, restriction, quotient") {
  i64 p = 5;
  // d: F_5^3 -> F_5^2, projection to first two coordinates
  SpMat d(p, 2, 3);
  d.set(0, 0, 1); d.set(1, 1, 1);
  // preimage of span{e0} is span{e0, e2}
  SpMat w(p, 2, 1);
  w.set(0, 0, 1);
  Subspace pre = sub_preimage(d, Subspace{2, w});
  CHECK(pre.dim() == 2);
  CHECK(sub_contains(pre, sv_from_dense({1, 0, 0}, p), p));
  CHECK(sub_contains(pre, sv_from_dense({0, 0, 1}, p), p));
  // preimage of 0 is the kernel
  CHECK(sub_preimage(d, subspace_zero(p, 2)).dim() == 1);

  // restriction of d to span{e0, e1} in coordinates of the full target
  SpMat sb(p, 3, 2);
  sb.set(0, 0, 1); sb.set(1, 1, 1);
  SpMat r = restrict_map(d, Subspace{3, sb}, subspace_full(p, 2));
  CHECK(sp_equal(r, SpMat::identity(p, 2)));
  // escaping image throws
  SpMat tiny(p, 2, 1);
  tiny.set(1, 0, 1);
  CHECK_THROWS(restrict_map(d, Subspace{3, sb}, Subspace{2, tiny}));

  // quotient of F_5^3 by span{e0}: projection with kernel exactly span{e0}
  SpMat wb(p, 3, 1);
  wb.set(0, 0, 1);
  SpMat q = quotient_map(Subspace{3, wb}, p, 3);
  CHECK(q.rows == 2);
  CHECK(sp_apply(q, {1, 0, 0}) == std::vector<i64>({0, 0}));
  CHECK(sp_rank(q) == 2);
}

TEST_CASE("rref invariants on random-ish matrices") {
  i64 p = 7;
  SpMat m = SpMat::from_dense(p, {{1, 2, 3, 4}, {2, 4, 6, 1}, {0, 0, 0, 5}});
  RrefResult r = rref(m);
  CHECK(r.rank == 2);
  CHECK(r.kernel.dim() == 2);
  CHECK(r.image.dim() == 2);
  // M * kernel basis = 0
  CHECK(sp_mul(m, r.kernel.basis).is_zero());
  // image basis columns lie in column space
  for (int j = 0; j < r.image.dim(); ++j) {
    std::vector<i64> col(3, 0), x;
    for (int i = 0; i < 3; ++i) col[i] = r.image.basis.get(i, j);
    CHECK(solve(m, col, &x));
  }
  CHECK(r.rank + r.kernel.dim() == m.cols);
}
