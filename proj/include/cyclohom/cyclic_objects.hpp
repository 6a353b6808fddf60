#pragma once
// Finite-dimensional (DG) algebra presentations, the cyclic module of an
// algebra, edgewise subdivision, and Hochschild complexes with coefficients.
#include <string>
#include <vector>

#include "cyclohom/gf_linalg.hpp"

namespace cyclohom {

// Structure constants of a finite-dimensional unital associative (DG) algebra.
struct AlgebraPresentation {
  i64 p = 0;
  int dim = 0;
  std::vector<std::string> labels;
  std::vector<int> deg;               // homological degree per basis vector
  std::vector<i64> unit;              // coordinates of 1
  std::vector<std::vector<SparseVec>> mul;  // mul[i][j]: e_i * e_j
  SpMat diff;                         // d on basis vectors; 0 x 0 means zero

  bool graded() const;
  SparseVec product(const SparseVec& a, const SparseVec& b) const;
  std::vector<std::string> violations() const;  // every broken axiom instance
  void validate() const;                        // throws listing violations
};

AlgebraPresentation build_algebra(AlgebraPresentation spec);  // validate + return

AlgebraPresentation ground_field(i64 p);
AlgebraPresentation matrix_algebra(int k, i64 p);
AlgebraPresentation product_algebra(const AlgebraPresentation& a,
                                    const AlgebraPresentation& b);
AlgebraPresentation group_algebra(int m, i64 p);   // F_p[Z/m]
AlgebraPresentation truncated_poly(int n, i64 p);  // F_p[x]/x^n
AlgebraPresentation exterior_dg(i64 p);            // one generator in degree 1

// Level-l cyclic module on objects [n+1], n = 0..max_index: spaces E_n with
// faces d_i (0 <= i <= n), rotation t_n of order l*(n+1), optional internal
// grading and differential for DG input.
struct CyclicModuleData {
  i64 p = 0;
  int level = 1;
  int max_index = -1;
  std::vector<int> dims;
  std::vector<std::vector<int>> wdeg;    // internal degree per basis vector
  std::vector<std::vector<SpMat>> face;  // face[n][i]: E_n -> E_{n-1}
  std::vector<SpMat> rot;                // t_n: E_n -> E_n
  std::vector<SpMat> idiff;              // internal differential per level

  int order(int n) const { return level * (n + 1); }
  int dim(int n) const { return (n >= 0 && n <= max_index) ? dims[n] : 0; }
  // rotation twisted by the reduced-complex sign (-1)^(order+1)
  SpMat sigma_dag(int n) const;
};

// Every simplicial and cyclic identity, t^(l(n+1)) = id, degree preservation,
// and b(1 - sigma-dagger) = (1 - sigma-dagger) b' across the window.
std::vector<std::string> check_cyclic_relations(const CyclicModuleData& e);

// A-natural: E_n = A tensor (n+1), adjacent-multiplication faces, rotation
// with Koszul signs. Level 1.
CyclicModuleData build_anat(const AlgebraPresentation& a, int max_index);

// Edgewise subdivision: level-l module with spaces E_{l(n+1)-1}, composite
// faces, and the (n+1)-st power rotation. Needs max_index >= l*(out+1) - 1.
CyclicModuleData edgewise(const CyclicModuleData& e, int l, int out_max_index);

// Simplicial data with the residual order-l automorphism sigma = t^(n+1).
struct SimplicialSigma {
  i64 p = 0;
  int l = 1;
  int max_index = -1;
  std::vector<int> dims;
  std::vector<std::vector<int>> wdeg;
  std::vector<std::vector<SpMat>> face;
  std::vector<SpMat> sigma;
  std::vector<SpMat> idiff;
  std::vector<std::string> check() const;  // simplicial ids + sigma commutes
};
SimplicialSigma restrict_j(const CyclicModuleData& e);

// Bimodule over an AlgebraPresentation: per-basis-vector left/right actions.
struct BimodulePresentation {
  i64 p = 0;
  int dim = 0;
  std::vector<int> deg;
  std::vector<SpMat> lact;  // lact[i]: action of e_i from the left
  std::vector<SpMat> ract;  // ract[i]: action of e_i from the right
  SpMat diff;
  std::vector<std::string> violations(const AlgebraPresentation& a) const;
};
BimodulePresentation diagonal_bimodule(const AlgebraPresentation& a);
BimodulePresentation free_bimodule(const AlgebraPresentation& a);  // A^o (x) A

// Hochschild complex of A^(x)l with coefficients in M^(x)l, right action
// twisted by the block rotation; carries the Z/l block-rotation automorphism.
SimplicialSigma hoch_coeff(const AlgebraPresentation& a,
                           const BimodulePresentation& m, int l, int max_index);

}  // namespace cyclohom
