#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cyclohom/complex_engine.hpp"

using namespace cyclohom;

namespace {

// 0 -> F_p -> 0 concentrated in degree n0
ChainComplex point(i64 p, int n0) {
  ChainComplex c(p, n0, n0);
  c.set_dim(n0, 1);
  c.set_diff(n0, SpMat(p, 0, 1));
  return c;
}

// 0 -> F_p --id--> F_p -> 0 in degrees [n0, n0+1]
ChainComplex contractible(i64 p, int n0) {
  ChainComplex c(p, n0, n0 + 1);
  c.set_dim(n0, 1);
  c.set_dim(n0 + 1, 1);
  c.set_diff(n0, SpMat(p, 0, 1));
  c.set_diff(n0 + 1, SpMat::identity(p, 1));
  return c;
}

}  // namespace

TEST_CASE("basic homology") {
  ChainComplex pt = point(3, 0);
  pt.validate();
  CHECK(pt.homology_dim(0) == 1);
  CHECK(pt.homology_dim(1) == 0);
  CHECK(pt.homology_dim(-1) == 0);

  ChainComplex ac = contractible(3, 0);
  ac.validate();
  CHECK(ac.homology_dim(0) == 0);
  CHECK(ac.homology_dim(1) == 0);

  // d*d != 0 rejected
  ChainComplex bad(3, 0, 2);
  bad.set_dim(0, 1); bad.set_dim(1, 1); bad.set_dim(2, 1);
  bad.set_diff(0, SpMat(3, 0, 1));
  bad.set_diff(1, SpMat::identity(3, 1));
  bad.set_diff(2, SpMat::identity(3, 1));
  CHECK_THROWS(bad.validate());
}

TEST_CASE("homology representatives and coords") {
  // 0 -> F_5 --0--> F_5^2 --[1 1]--> F_5 -> 0 in degrees 2,1,0
  ChainComplex c(5, 0, 2);
  c.set_dim(0, 1); c.set_dim(1, 2); c.set_dim(2, 1);
  c.set_diff(0, SpMat(5, 0, 1));
  SpMat d1(5, 1, 2);
  d1.set(0, 0, 1); d1.set(0, 1, 1);
  c.set_diff(1, d1);
  c.set_diff(2, SpMat::zero(5, 2, 1));
  c.validate();
  CHECK(c.homology_dim(0) == 0);  // d1 surjective
  CHECK(c.homology_dim(1) == 1);
  CHECK(c.homology_dim(2) == 1);

  HomologySpace h1 = homology(c, 1);
  CHECK(h1.dim == 1);
  // (1, 4) is a cycle; its class coordinates are well defined
  std::vector<i64> co = h1.coords({1, 4});
  CHECK(co.size() == 1);
  // (2, 3) = 2 * (1, 4) as cycles, and H_1 has no boundaries here
  std::vector<i64> co2 = h1.coords({2, 3});
  CHECK(co2[0] == fp_norm(2 * co[0], 5));
  CHECK_THROWS(h1.coords({1, 0}));  // not a cycle
}

TEST_CASE("chain maps and induced maps") {
  ChainComplex a = point(3, 0), b = point(3, 0);
  ChainMap f = make_chain_map(a, b, {{0, SpMat::from_dense(3, {{2}})}});
  f.validate();
  SpMat ind = induced_on_homology(f, 0);
  CHECK(ind.rows == 1);
  CHECK(ind.cols == 1);
  CHECK(ind.get(0, 0) == 2);

  // zero map on homology from a contractible source
  ChainComplex ac = contractible(3, 0);
  ChainMap g = make_chain_map(ac, b, {{0, SpMat::from_dense(3, {{1}})}});
  CHECK_THROWS(g.validate());  // does not commute: d then 1 vs 0
}

TEST_CASE("cone") {
  // cone(id: pt -> pt) is acyclic
  ChainComplex a = point(3, 0), b = point(3, 0);
  ChainMap f = make_chain_map(a, b, {{0, SpMat::identity(3, 1)}});
  ChainComplex cn = cone(f);
  cn.validate();
  for (int n = -1; n <= 2; ++n) CHECK(cn.homology_dim(n) == 0);

  // cone(0: pt -> pt) = pt (+) pt[1]
  ChainMap z = make_chain_map(a, b, {{0, SpMat::zero(3, 1, 1)}});
  ChainComplex cz = cone(z);
  cz.validate();
  CHECK(cz.homology_dim(0) == 1);
  CHECK(cz.homology_dim(1) == 1);
}

TEST_CASE("shift and direct sum") {
  ChainComplex c = contractible(3, 0);
  ChainComplex s = shift(c, 2);
  s.validate();
  CHECK(s.dim(2) == 1);
  CHECK(s.dim(3) == 1);
  ChainComplex s1 = shift(c, 1);
  s1.validate();  // sign flip keeps d*d = 0 and shapes straight
  CHECK(s1.diff(2).get(0, 0) == 3 - 1);

  ChainComplex d = direct_sum(point(3, 0), point(3, 2));
  d.validate();
  CHECK(d.homology_dim(0) == 1);
  CHECK(d.homology_dim(1) == 0);
  CHECK(d.homology_dim(2) == 1);
}

TEST_CASE("mixed complex validation") {
  // base: 0 -> F_3 -> 0 at degrees 0,1 with zero d; B: deg 0 -> deg 1 identity
  ChainComplex c(3, 0, 1);
  c.set_dim(0, 1); c.set_dim(1, 1);
  c.set_diff(0, SpMat(3, 0, 1));
  c.set_diff(1, SpMat::zero(3, 1, 1));
  MixedComplex m;
  m.base = c;
  m.set_B(0, SpMat::identity(3, 1));
  m.set_B(1, SpMat(3, 0, 1));
  m.validate();

  // violating dB + Bd = 0 is caught
  MixedComplex bad;
  bad.base = contractible(3, 0);
  bad.set_B(0, SpMat::identity(3, 1));
  bad.set_B(1, SpMat(3, 0, 1));
  CHECK_THROWS(bad.validate());
}

TEST_CASE("bicomplex totalization") {
  // square with identity edges: anticommuting => total d^2 = 0
  BicomplexWindow b(3, 0, 1, 0, 1);
  b.set_dim(0, 0, 1); b.set_dim(1, 0, 1); b.set_dim(0, 1, 1); b.set_dim(1, 1, 1);
  b.set_dh(1, 0, SpMat::identity(3, 1));
  b.set_dh(1, 1, SpMat::identity(3, 1));
  b.set_dv(0, 1, SpMat::identity(3, 1));
  b.set_dv(1, 1, SpMat::from_dense(3, {{2}}));  // -1 for anticommutation
  b.validate();
  ChainComplex t = total(b);
  t.validate();
  CHECK(t.dim(0) == 1);
  CHECK(t.dim(1) == 2);
  CHECK(t.dim(2) == 1);
  // contractible square
  for (int n = 0; n <= 2; ++n) CHECK(t.homology_dim(n) == 0);
  // both totalization modes agree on a finite window
  CHECK(sp_equal(total(b, TotalMode::sum).diff(1), total(b, TotalMode::product).diff(1)));
}

TEST_CASE("trivial filtration and truncation") {
  // tau-truncation with the trivial filtration = canonical truncation from below
  ChainComplex c(3, 0, 2);
  c.set_dim(0, 1); c.set_dim(1, 2); c.set_dim(2, 1);
  c.set_diff(0, SpMat(3, 0, 1));
  SpMat d1(3, 1, 2);
  d1.set(0, 0, 1); d1.set(0, 1, 1);
  c.set_diff(1, d1);
  c.set_diff(2, SpMat::zero(3, 2, 1));
  c.validate();
  CHECK(c.homology_dim(0) == 0);
  CHECK(c.homology_dim(1) == 1);
  CHECK(c.homology_dim(2) == 1);

  FilteredComplex fc = trivial_filtration(c);
  fc.validate();
  // tau^1: degrees >= 2 full, degree 1 cycles only, degree 0 dropped
  FilteredComplex t1 = truncate(fc, TruncKind::tau, 1);
  t1.base.validate();
  CHECK(t1.base.dim(0) == 0);
  CHECK(t1.base.dim(1) == 1);  // ker d1
  CHECK(t1.base.dim(2) == 1);
  CHECK(t1.base.homology_dim(0) == 0);
  CHECK(t1.base.homology_dim(1) == c.homology_dim(1));
  CHECK(t1.base.homology_dim(2) == c.homology_dim(2));

  // beta^1: degrees >= 2 full, degree 1 boundaries only
  FilteredComplex b1 = truncate(fc, TruncKind::beta, 1);
  b1.base.validate();
  CHECK(b1.base.dim(1) == 0);  // im d2 = 0 here
  CHECK(b1.base.dim(2) == 1);
  CHECK(b1.base.homology_dim(2) == 1);
  CHECK(b1.base.homology_dim(1) == 0);
  CHECK(b1.base.homology_dim(0) == 0);

  // h-truncation: homology concentrated in the single degree
  for (int n = 0; n <= 2; ++n) {
    FilteredComplex hn = h_trunc(fc, n);
    hn.base.validate();
    for (int m = 0; m <= 2; ++m)
      CHECK(hn.base.homology_dim(m) == (m == n ? c.homology_dim(n) : 0));
  }
}

TEST_CASE("filtration validation") {
  ChainComplex c = contractible(3, 0);
  FilteredComplex fc;
  fc.base = c;
  fc.fmin = 0;
  fc.fmax = 1;
  // F^1 = degree-1 part only: not d-stable (d maps it onto degree 0)
  fc.set_filt(1, 0, subspace_zero(3, 1));
  fc.set_filt(1, 1, subspace_full(3, 1));
  CHECK_THROWS(fc.validate());
  // F^1 = 0 everywhere: fine
  fc.set_filt(1, 1, subspace_zero(3, 1));
  fc.validate();
  CHECK(fc.gr_dim(0, 0) == 1);
  CHECK(fc.gr_dim(1, 0) == 0);
}

TEST_CASE("two step filtration spectral sequence") {
  // C: F_3 --id--> F_3 in degrees 1, 0 with F^1 = degree-0 part.
  // E_1 has one class at each corner; d_1 kills both; E_2 = 0.
  ChainComplex c = contractible(3, 0);
  FilteredComplex fc;
  fc.base = c;
  fc.fmin = 0;
  fc.fmax = 1;
  fc.set_filt(1, 0, subspace_full(3, 1));
  fc.set_filt(1, 1, subspace_zero(3, 1));
  fc.validate();
  CHECK(ss_page(fc, 1, 0, 1) == 1);
  CHECK(ss_page(fc, 1, 1, 0) == 1);
  CHECK(ss_page(fc, 2, 0, 1) == 0);
  CHECK(ss_page(fc, 2, 1, 0) == 0);
  CHECK(ss_einf(fc, 0, 1) == 0);
  CHECK(ss_einf(fc, 1, 0) == 0);

  // trivial filtration: E_1 = E_inf = homology in filtration 0
  ChainComplex pt = point(3, 0);
  FilteredComplex tf = trivial_filtration(pt);
  CHECK(ss_page(tf, 1, 0, 0) == 1);
  CHECK(ss_einf(tf, 0, 0) == 1);
}

TEST_CASE("tower stabilization") {
  // constant tower of points with identity maps: stabilizes at dim 1
  std::vector<ChainComplex> stages;
  for (int s = 0; s < 4; ++s) stages.push_back(point(3, 0));
  Tower t;
  t.stages = stages;
  for (int s = 0; s + 1 < 4; ++s)
    t.maps.push_back(make_chain_map(t.stages[s], t.stages[s + 1], {{0, SpMat::identity(3, 1)}}));
  StabPolicy pol;
  StabResult r = stabilized_homology(t, 0, pol);
  CHECK(r.stabilized);
  CHECK(r.dim == 1);
  REQUIRE(r.certificate.has_value());
  CHECK(r.certificate->map_ranks == std::vector<int>({1, 1}));

  // tower whose comparison maps are zero: dims agree but no stabilization
  Tower z;
  z.stages = stages;
  for (int s = 0; s + 1 < 4; ++s)
    z.maps.push_back(make_chain_map(z.stages[s], z.stages[s + 1], {{0, SpMat::zero(3, 1, 1)}}));
  StabResult rz = stabilized_homology(z, 0, pol);
  CHECK_FALSE(rz.stabilized);

  // growing then constant: stabilizes from the constant run onward
  Tower g;
  g.stages.push_back(point(3, 1));  // degree-0 homology is 0 here
  for (int s = 0; s < 3; ++s) g.stages.push_back(point(3, 0));
  g.maps.push_back(make_chain_map(g.stages[0], g.stages[1], {}));
  for (int s = 1; s + 1 < 4; ++s)
    g.maps.push_back(make_chain_map(g.stages[s], g.stages[s + 1], {{0, SpMat::identity(3, 1)}}));
  StabResult rg = stabilized_homology(g, 0, pol);
  CHECK(rg.stabilized);
  CHECK(rg.dim == 1);
  CHECK(rg.certificate->stage == 1);

  // quotient tower direction
  Tower q;
  q.quotient = true;
  q.stages = stages;
  for (int s = 0; s + 1 < 4; ++s)
    q.maps.push_back(make_chain_map(q.stages[s + 1], q.stages[s], {{0, SpMat::identity(3, 1)}}));
  StabResult rq = stabilized_homology(q, 0, pol);
  CHECK(rq.stabilized);
  CHECK(rq.dim == 1);
}

TEST_CASE("wide bicomplex totalization") {
  // Three contractible columns (dv = id), horizontal maps only out of column 0
  // with the sign flip at level 1; total complex is acyclic.
  BicomplexWindow b(3, -2, 0, 0, 1);
  for (int i = -2; i <= 0; ++i) {
    b.set_dim(i, 0, 1);
    b.set_dim(i, 1, 1);
    b.set_dv(i, 1, SpMat::identity(3, 1));
  }
  b.set_dh(0, 0, SpMat::identity(3, 1));
  b.set_dh(0, 1, SpMat::from_dense(3, {{2}}));
  b.validate();
  ChainComplex t = total(b);
  t.validate();
  CHECK(t.dim(-2) == 1);
  CHECK(t.dim(-1) == 2);
  CHECK(t.dim(0) == 2);
  CHECK(t.dim(1) == 1);
  for (int n = -2; n <= 1; ++n) CHECK(t.homology_dim(n) == 0);
}
