#pragma once
// Tensor powers with the cyclic rotation, tightness of p-th powers, the
// p-th-power map psi with its normalization constant, the functor I with its
// induced differential, adaptedness of cyclic nerves of algebras, and the
// conjugate spectral sequence (first-page tables and filtration pages).
#include <string>
#include <vector>

#include "cyclohom/cyclic_group_tate.hpp"
#include "cyclohom/cyclic_objects.hpp"
#include "cyclohom/periodic_homology.hpp"

namespace cyclohom {

// p-th tensor power of a finite complex, carrying the cyclic rotation with
// Koszul signs as an action of Z/p.  Basis of degree n: tuples of p basis
// vectors of m whose degrees sum to n, in lexicographic order.
CyclicGroupComplex tensor_power(const ChainComplex& m, int p);

struct PsiReport {
  bool tight = false;     // every degree of the power tight, support on p*Z
  bool additive = false;  // psi(x+y) = psi(x) + psi(y) modulo the norm image
  bool iso = false;       // psi bijective onto I degreewise, degree-times-p law
  i64 a = 0;              // normalization constant of the induced differential
  std::vector<std::string> violations;
};
// Builds m^{(x)p}, checks tightness, verifies the p-th-power map into the
// fixed-vectors-mod-norms quotient, and reports the constant a for this p.
PsiReport psi_check(const ChainComplex& m, int p);

// The constant a alone, from the contractible two-term probe; computed once
// per p and cached.
i64 psi_constant(i64 p);

struct IReport {
  int lo = 0, hi = -1;         // degrees n of I; I_n is built from E_{p n}
  std::vector<int> dims;       // dim I_n
  std::vector<SpMat> diff;     // diff[n-lo]: I_n -> I_{n-1}, zigzag-induced
  std::vector<SpMat> reps;     // reps[n-lo]: basis cycles inside E_{p n}
};
// dim I(E)_n with the induced differential obtained by the p-step zigzag
// descent through the two-periodic complex of the group action.  Throws when
// E is not tight enough for the descent to go through.
IReport I_dims(const CyclicGroupComplex& E);

struct AdaptReport {
  bool adapted = false;
  std::vector<int> levels;        // 0..N
  std::vector<bool> level_tight;  // restriction of level p(n+1)-1 along Z/p
  std::vector<int> I_dims;        // per level
  std::vector<int> expected;      // dim(A)^{n+1}; the twist preserves dims
  std::vector<std::string> failures;
};
// For each level n <= N restricts the cyclic nerve of `a` at simplicial index
// p(n+1)-1 along the order-p subgroup of its rotation and checks tightness
// and the dimension match with the level-n space of the nerve itself.
AdaptReport adaptedness_check(const AlgebraPresentation& a, int N);

struct ConjE1 {
  i64 p = 0;
  int lo = 0, hi = -1;      // degrees n
  int klo = 0, khi = -1;    // column window
  std::vector<std::vector<int>> cell;  // [n-lo][k-klo]
  std::vector<int> totals;             // per degree: sum over the window
};
// First page of the conjugate sequence as a Laurent-style table.  For odd p
// the cell at column k, degree n is dim HH_{n+2k}(a) when n+2k >= 0.  For
// p = 2 the table is cyclic-homology based with an extra odd generator, so
// column k holds dim HC_{n+k}(a) when n+k >= 0.
ConjE1 conjugate_e1(const AlgebraPresentation& a, int lo, int hi, int klo,
                    int khi);

struct ConjugatePage {
  i64 p = 0;
  int r = 1;
  int blocks = 0;           // p-row blocks realized in the window
  int jmin = 0, jmax = -1;  // filtration indices carried by the window
  int lo = 0, hi = -1;
  std::vector<std::vector<int>> dims;  // [j-jmin][n-lo]
  std::vector<std::vector<int>> einf;  // same layout
  bool u_periodic = false;  // dims at (j+1, n) match (j, n-2) away from edges
};
// Pages of the interleaved truncation filtration V^j = tau^{2j-1} of the
// p-rescaled row filtration on the subdivided cyclic complex, realized on a
// finite row window of the double complex.  Column sums of the limit page
// recover the homology of the window exactly.
ConjugatePage conjugate_pages(const AlgebraPresentation& a, int r, int lo,
                              int hi, const PeriodicPolicy& pol = {});

}  // namespace cyclohom
