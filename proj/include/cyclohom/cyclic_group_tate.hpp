#pragma once
// Homology, Tate homology, and periodic expansions for modules and complexes
// over a cyclic group, including sign-twisted and extended-group variants.
#include "cyclohom/complex_engine.hpp"

namespace cyclohom {

struct CyclicGroupModule {
  i64 p = 0;
  int order = 1;       // group order
  SpMat sigma;         // dim x dim, sigma^order = id
  int dim() const { return sigma.cols; }
  void validate() const;  // sigma invertible of order dividing `order`
};

struct CyclicGroupComplex {
  int order = 1;
  ChainComplex base;
  std::vector<SpMat> sigma_;  // per degree n - lo
  SpMat sigma(int n) const;
  void set_sigma(int n, SpMat s);
  void validate() const;  // sigma commutes with d, sigma^order = id
};

CyclicGroupComplex from_module(const CyclicGroupModule& m, int degree = 0);

// Two-term-per-degree mixed complex (K tensor E) after coinvariants:
// degree n carries E_n (+) E_{n-1}, vertical differential 1 - sigma (twisted:
// 1 - sigma-dagger), B the norm. twisted applies sigma-dagger = (-1)^{order+1} sigma.
MixedComplex build_K(const CyclicGroupComplex& E, bool twisted = false);

// u-expansions of a mixed complex: degree-n term is the sum of M_{n+2k} u^k
// over the kind's k-range (exp: k <= 0, the rest: all k). For M supported in
// finitely many degrees all four coincide beyond the k-range bookkeeping.
enum class ExpandKind { exp, per, Per, PerBar };
ChainComplex periodic_expand(const MixedComplex& m, ExpandKind kind, int lo, int hi);

// homology = C (exp), tate = Per, cotate = PerBar, poly = per.
enum class TateKind { homology, tate, cotate, poly };
std::vector<int> tate_dims(const CyclicGroupComplex& E, TateKind kind, bool twisted,
                           int deg_lo, int deg_hi);

// Connecting maps of the Jordan-block extension on Tate homology:
// eps_odd: H-check_1 -> H-check_0, eps_even: H-check_0 -> H-check_{-1} = H-check_1.
struct EpsilonMaps {
  SpMat eps_odd;
  SpMat eps_even;
  int h_even_dim = 0, h_odd_dim = 0;
};
EpsilonMaps epsilon_maps(const CyclicGroupModule& m);

// A module is tight when eps_odd is an isomorphism; I(M) is the common value
// of the Tate homology groups under that identification.
bool module_tight(const CyclicGroupModule& m);
int module_I_dim(const CyclicGroupModule& m);

struct TightReport {
  std::vector<int> degrees;
  std::vector<bool> degree_tight;   // eps_odd iso on E_i
  std::vector<int> I_dims;          // dim I(E_i)
  bool support_ok = true;           // I(E_i) = 0 unless p | i
  bool tight = false;
};
TightReport is_tight(const CyclicGroupComplex& E, i64 p);

// Tate dims computed through the length-2 complex of the ambient group Z/m
// restricted to Z/n (n | m); chain-homotopy equivalent to the plain complex.
std::vector<int> extended_tate_dims(int sub_order, int ambient_order,
                                    const CyclicGroupComplex& E, TateKind kind,
                                    int deg_lo, int deg_hi);

}  // namespace cyclohom
