#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cyclohom/cyclic_group_tate.hpp"
#include "cyclohom/oracle.hpp"

using namespace cyclohom;

namespace {

CyclicGroupModule trivial_module(i64 p, int order) {
  return CyclicGroupModule{p, order, SpMat::identity(p, 1)};
}

CyclicGroupModule regular_module(i64 p, int order) {
  SpMat s(p, order, order);
  for (int i = 0; i < order; ++i) s.set((i + 1) % order, i, 1);
  return CyclicGroupModule{p, order, s};
}

}  // namespace

TEST_CASE("module validation") {
  CHECK_NOTHROW(trivial_module(3, 3).validate());
  CHECK_NOTHROW(regular_module(3, 3).validate());
  CyclicGroupModule bad{3, 3, SpMat::from_dense(3, {{2}})};  // 2^3 = 8 = 2 != 1
  CHECK_THROWS(bad.validate());
}

TEST_CASE("build_K basics") {
  // E = trivial F_3 over Z/3: d = 1 - sigma = 0 everywhere, B = norm = 3 = 0
  CyclicGroupComplex e = from_module(trivial_module(3, 3));
  e.validate();
  MixedComplex k = build_K(e);
  CHECK(k.base.dim(0) == 1);
  CHECK(k.base.dim(1) == 1);
  CHECK(k.base.diff(1).is_zero());
  CHECK(k.B(0).is_zero());

  // E = regular F_3[Z/3]: K(E) has homology only at the edges (exact sequence)
  CyclicGroupComplex r = from_module(regular_module(3, 3));
  MixedComplex kr = build_K(r);
  // d: 1 - sigma on the regular rep has rank 2
  CHECK(sp_rank(kr.base.diff(1)) == 2);
  CHECK(kr.base.homology_dim(0) == 1);
  CHECK(kr.base.homology_dim(1) == 1);

  // random sigma over Z/6 with F_3 coefficients: mixed invariants hold
  SpMat s6(3, 6, 6);
  for (int i = 0; i < 6; ++i) s6.set((i + 1) % 6, i, 1);
  CyclicGroupComplex e6 = from_module(CyclicGroupModule{3, 6, s6});
  CHECK_NOTHROW(build_K(e6).validate());
  CHECK_NOTHROW(build_K(e6, true).validate());
}

TEST_CASE("periodic expansion of the trivial mixed complex") {
  // d = B = 0, dim 1 in degree 0: exp gives dims 1,0,1,0,... upward
  MixedComplex m;
  m.base = ChainComplex(3, 0, 0);
  m.base.set_dim(0, 1);
  m.base.set_diff(0, SpMat(3, 0, 1));
  m.set_B(0, SpMat(3, 0, 1));
  ChainComplex e = periodic_expand(m, ExpandKind::exp, -2, 5);
  for (int n = -2; n <= 5; ++n) CHECK(e.dim(n) == (n >= 0 && n % 2 == 0 ? 1 : 0));
  // full kinds: every even degree (both signs) has a cell
  for (ExpandKind k : {ExpandKind::per, ExpandKind::Per, ExpandKind::PerBar}) {
    ChainComplex f = periodic_expand(m, k, -4, 4);
    for (int n = -4; n <= 4; ++n) CHECK(f.dim(n) == (((n % 2) + 2) % 2 == 0 ? 1 : 0));
  }
}

TEST_CASE("tate dims of standard modules") {
  // trivial F_3 over Z/3: dim 1 in every degree of [-4,4]
  CyclicGroupComplex e = from_module(trivial_module(3, 3));
  std::vector<int> d = tate_dims(e, TateKind::tate, false, -4, 4);
  CHECK(d == std::vector<int>(9, 1));
  // all four kinds agree on a bounded complex except the homology kind's support
  CHECK(tate_dims(e, TateKind::poly, false, -4, 4) == d);
  CHECK(tate_dims(e, TateKind::cotate, false, -4, 4) == d);
  std::vector<int> h = tate_dims(e, TateKind::homology, false, 0, 4);
  CHECK(h == std::vector<int>(5, 1));  // group homology of Z/3 over F_3

  // free module: 0 everywhere
  CyclicGroupComplex r = from_module(regular_module(3, 3));
  CHECK(tate_dims(r, TateKind::tate, false, -4, 4) == std::vector<int>(9, 0));

  // order prime to p: 0 everywhere
  CyclicGroupComplex e2 = from_module(trivial_module(3, 2));
  CHECK(tate_dims(e2, TateKind::tate, false, -4, 4) == std::vector<int>(9, 0));

  // 2-periodicity on a random-ish module over Z/4, F_2
  SpMat s(2, 2, 2);
  s.set(0, 1, 1);
  s.set(1, 0, 1);
  CyclicGroupComplex e4 = from_module(CyclicGroupModule{2, 4, s});
  std::vector<int> d4 = tate_dims(e4, TateKind::tate, false, -4, 4);
  for (int i = 0; i + 2 < 9; ++i) CHECK(d4[i] == d4[i + 2]);
}

TEST_CASE("tate agrees with the brute-force resolution") {
  auto check_mod = [](const CyclicGroupModule& m) {
    CyclicGroupComplex e = from_module(m);
    std::vector<int> t = tate_dims(e, TateKind::tate, false, 0, 1);
    oracle::GroupHomologyReport rep = oracle::brute_group_homology(m.order, m.sigma, 4);
    CHECK(t[0] == rep.tate_even);
    CHECK(t[1] == rep.tate_odd);
    std::vector<int> h = tate_dims(e, TateKind::homology, false, 0, 4);
    CHECK(h == rep.homology);
  };
  check_mod(trivial_module(3, 3));
  check_mod(regular_module(3, 3));
  check_mod(trivial_module(5, 5));
  check_mod(regular_module(2, 2));
  SpMat s(3, 2, 2);  // order-3 action mixing coordinates: x -> y -> -x-y
  s.set(1, 0, 1);
  s.set(0, 1, 2);
  s.set(1, 1, 2);
  check_mod(CyclicGroupModule{3, 3, s});
}

TEST_CASE("twisted complexes") {
  // odd order: twist is trivial
  CyclicGroupComplex e = from_module(trivial_module(3, 3));
  CHECK(tate_dims(e, TateKind::tate, true, -2, 2) ==
        tate_dims(e, TateKind::tate, false, -2, 2));
  // even order over F_3: sigma-dagger = -sigma changes the answer for the
  // trivial module (1 - sigma-dagger = 2 becomes invertible)
  CyclicGroupComplex t2 = from_module(trivial_module(3, 2));
  CHECK(tate_dims(t2, TateKind::tate, true, 0, 1) == std::vector<int>({0, 0}));
  SpMat neg = SpMat::from_dense(3, {{2}});  // sign module: untwisted dims 0
  CyclicGroupComplex n2 = from_module(CyclicGroupModule{3, 2, neg});
  CHECK(tate_dims(n2, TateKind::tate, false, 0, 1) == std::vector<int>({0, 0}));
}

TEST_CASE("complex input") {
  // two-term contractible complex F_3 --id--> F_3 with trivial action:
  // Tate of an acyclic bounded complex vanishes
  CyclicGroupComplex c;
  c.order = 3;
  c.base = ChainComplex(3, 0, 1);
  c.base.set_dim(0, 1);
  c.base.set_dim(1, 1);
  c.base.set_diff(0, SpMat(3, 0, 1));
  c.base.set_diff(1, SpMat::identity(3, 1));
  c.set_sigma(0, SpMat::identity(3, 1));
  c.set_sigma(1, SpMat::identity(3, 1));
  c.validate();
  CHECK(tate_dims(c, TateKind::tate, false, -3, 3) == std::vector<int>(7, 0));
  // two-term with zero differential: dims add degreewise with a shift
  c.base.set_diff(1, SpMat::zero(3, 1, 1));
  std::vector<int> d = tate_dims(c, TateKind::tate, false, -3, 3);
  CHECK(d == std::vector<int>(7, 2));
}

TEST_CASE("epsilon maps and tightness") {
  // trivial F_3: eps_odd iso, eps_even = 0
  EpsilonMaps e = epsilon_maps(trivial_module(3, 3));
  CHECK(e.h_odd_dim == 1);
  CHECK(e.h_even_dim == 1);
  CHECK(sp_rank(e.eps_odd) == 1);
  CHECK(e.eps_even.is_zero());
  CHECK(module_tight(trivial_module(3, 3)));
  CHECK(module_I_dim(trivial_module(3, 3)) == 1);

  // free module: Tate homology zero, maps are 0x0, vacuously tight
  EpsilonMaps f = epsilon_maps(regular_module(3, 3));
  CHECK(f.h_odd_dim == 0);
  CHECK(f.h_even_dim == 0);
  CHECK(module_tight(regular_module(3, 3)));
  CHECK(module_I_dim(regular_module(3, 3)) == 0);

  // eps_odd o eps_even = 0 on assorted modules
  for (auto& m : {trivial_module(3, 3), trivial_module(5, 5), regular_module(5, 5)}) {
    EpsilonMaps em = epsilon_maps(m);
    if (em.h_even_dim > 0) CHECK(sp_mul(em.eps_odd, em.eps_even).is_zero());
  }

  // trivial F_3 placed in degree 0: tight complex report
  TightReport rep = is_tight(from_module(trivial_module(3, 3)), 3);
  CHECK(rep.tight);
  CHECK(rep.support_ok);
  REQUIRE(rep.I_dims.size() == 1);
  CHECK(rep.I_dims[0] == 1);
  // trivial module placed in degree 1: support condition 3 | 1 fails
  TightReport rep1 = is_tight(from_module(trivial_module(3, 3), 1), 3);
  CHECK_FALSE(rep1.support_ok);
  CHECK_FALSE(rep1.tight);
  // free module anywhere: vacuous, tight
  TightReport repf = is_tight(from_module(regular_module(3, 3), 1), 3);
  CHECK(repf.tight);
}

TEST_CASE("extended complexes match plain ones") {
  CyclicGroupComplex e = from_module(trivial_module(3, 3));
  CHECK(extended_tate_dims(3, 6, e, TateKind::tate, -2, 2) ==
        tate_dims(e, TateKind::tate, false, -2, 2));
  CHECK(extended_tate_dims(3, 3, e, TateKind::tate, -2, 2) ==
        tate_dims(e, TateKind::tate, false, -2, 2));
  CyclicGroupComplex r = from_module(regular_module(3, 3));
  CHECK(extended_tate_dims(3, 9, r, TateKind::tate, -2, 2) == std::vector<int>(5, 0));
  CHECK_THROWS(extended_tate_dims(3, 7, e, TateKind::tate, 0, 0));
}
