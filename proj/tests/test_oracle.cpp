#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cyclohom/oracle.hpp"

using namespace cyclohom;
using oracle::RawAlgebra;

namespace {

RawAlgebra ground_field(i64 p) {
  RawAlgebra a;
  a.p = p;
  a.dim = 1;
  a.unit = {1};
  a.mul = {{{1}}};
  a.deg = {0};
  return a;
}

RawAlgebra dual_numbers(i64 p) {  // F_p[x]/x^2, basis 1, x
  RawAlgebra a;
  a.p = p;
  a.dim = 2;
  a.unit = {1, 0};
  a.mul = {{{1, 0}, {0, 1}}, {{0, 1}, {0, 0}}};
  a.deg = {0, 0};
  return a;
}

RawAlgebra product_field(i64 p) {  // F_p x F_p, idempotent basis
  RawAlgebra a;
  a.p = p;
  a.dim = 2;
  a.unit = {1, 1};
  a.mul = {{{1, 0}, {0, 0}}, {{0, 0}, {0, 1}}};
  a.deg = {0, 0};
  return a;
}

RawAlgebra matrix2(i64 p) {  // M_2(F_p), basis e11, e12, e21, e22
  RawAlgebra a;
  a.p = p;
  a.dim = 4;
  a.unit = {1, 0, 0, 1};
  auto unit = [&](int k) {
    std::vector<i64> v(4, 0);
    v[k] = 1;
    return v;
  };
  std::vector<i64> zero(4, 0);
  auto e = [&](int i, int j) { return i * 2 + j; };
  a.mul.assign(4, std::vector<std::vector<i64>>(4, zero));
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l)
          a.mul[e(i, j)][e(k, l)] = (j == k) ? unit(e(i, l)) : zero;
  a.deg = {0, 0, 0, 0};
  return a;
}

RawAlgebra exterior_dg(i64 p) {  // basis 1 (deg 0), x (deg 1), x^2 = 0, dx = 0
  RawAlgebra a;
  a.p = p;
  a.dim = 2;
  a.unit = {1, 0};
  a.mul = {{{1, 0}, {0, 1}}, {{0, 1}, {0, 0}}};
  a.deg = {0, 1};
  return a;
}

}  // namespace

TEST_CASE("bar homology of small algebras") {
  CHECK(oracle::bar_hh_dims(ground_field(3), 3) == std::vector<int>({1, 0, 0, 0}));
  CHECK(oracle::bar_hh_dims(dual_numbers(3), 3) == std::vector<int>({2, 1, 1, 1}));
  CHECK(oracle::bar_hh_dims(product_field(3), 2) == std::vector<int>({2, 0, 0}));
  CHECK(oracle::bar_hh_dims(matrix2(3), 2) == std::vector<int>({1, 0, 0}));
  CHECK(oracle::bar_hh_dims(ground_field(2), 2) == std::vector<int>({1, 0, 0}));
  CHECK(oracle::bar_hh_dims(ground_field(5), 2) == std::vector<int>({1, 0, 0}));
}

TEST_CASE("bar homology of the dual numbers via the small resolution") {
  // second independent path: F_p[x]/x^2 has the 2-periodic small resolution
  // with maps x*1 - 1*x and x*1 + 1*x alternating; after tensoring down they
  // act as 0 and 2x, so HH is 2,1,1,1,... for odd p and 2,2,2,2,... for p = 2
  // (2x = 0).  Frozen here and compared against the bar answer.
  CHECK(oracle::bar_hh_dims(dual_numbers(3), 4) == std::vector<int>({2, 1, 1, 1, 1}));
  CHECK(oracle::bar_hh_dims(dual_numbers(2), 4) == std::vector<int>({2, 2, 2, 2, 2}));
}

TEST_CASE("bar homology of a DG algebra") {
  // exterior algebra on one odd generator, p = 3: dims frozen after the first
  // computation and stable across p = 5
  std::vector<int> d3 = oracle::bar_hh_dims(exterior_dg(3), 3);
  CHECK(d3[0] == 1);
  CHECK(d3 == oracle::bar_hh_dims(exterior_dg(5), 3));
}

TEST_CASE("brute group homology") {
  SpMat id1 = SpMat::identity(3, 1);
  oracle::GroupHomologyReport t = oracle::brute_group_homology(3, id1, 4);
  CHECK(t.homology == std::vector<int>({1, 1, 1, 1, 1}));
  CHECK(t.tate_even == 1);
  CHECK(t.tate_odd == 1);

  SpMat reg(3, 3, 3);
  for (int i = 0; i < 3; ++i) reg.set((i + 1) % 3, i, 1);
  oracle::GroupHomologyReport r = oracle::brute_group_homology(3, reg, 3);
  CHECK(r.homology == std::vector<int>({1, 0, 0, 0}));
  CHECK(r.tate_even == 0);
  CHECK(r.tate_odd == 0);

  oracle::GroupHomologyReport z2 = oracle::brute_group_homology(2, SpMat::identity(3, 1), 2);
  CHECK(z2.homology == std::vector<int>({1, 0, 0}));
  CHECK(z2.tate_even == 0);
  CHECK(z2.tate_odd == 0);
}

TEST_CASE("direct periodic window of the ground field") {
  // the two-sided lattice of F_3: dim 1 in every even degree, 0 in odd ones
  CHECK(oracle::direct_hpbar_window(ground_field(3), 0, 14) == std::pair<int, int>(1, 1));
  CHECK(oracle::direct_hpbar_window(ground_field(3), -2, 14) == std::pair<int, int>(1, 1));
  CHECK(oracle::direct_hpbar_window(ground_field(3), -1, 14) == std::pair<int, int>(0, 0));
  CHECK(oracle::direct_hpbar_window(ground_field(3), 1, 14) == std::pair<int, int>(0, 0));
  CHECK(oracle::direct_hpbar_window(ground_field(3), 2, 14) == std::pair<int, int>(1, 1));
  CHECK(oracle::direct_hpbar_window(ground_field(3), 0, 0) == std::pair<int, int>(0, 0));
}

TEST_CASE("direct periodic window of the dual numbers") {
  auto [lo0, hi0] = oracle::direct_hpbar_window(dual_numbers(3), 0, 12);
  CHECK(lo0 == hi0);  // stable across the last two window sizes
  CHECK(lo0 >= 1);
  auto [lo2, hi2] = oracle::direct_hpbar_window(product_field(3), 0, 12);
  CHECK(lo2 == hi2);
  CHECK(lo2 == 2);  // componentwise: twice the ground field
}
