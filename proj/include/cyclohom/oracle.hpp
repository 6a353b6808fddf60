#pragma once
// Independent brute-force ground truth. Depends only on gf_linalg; the
// duplication with the main computation path is deliberate.
#include "cyclohom/gf_linalg.hpp"

namespace cyclohom::oracle {

// Minimal dense algebra data, deliberately not the main-path presentation type.
struct RawAlgebra {
  i64 p = 0;
  int dim = 0;
  std::vector<i64> unit;                          // coordinates of 1
  std::vector<std::vector<std::vector<i64>>> mul; // mul[i][j] = e_i * e_j, dense
  std::vector<int> deg;                           // homological degree per basis vector
  std::vector<std::vector<i64>> diff;             // dense dim x dim matrix of d_A (or empty)
};

// Homology of the unreduced cyclic bar complex A^{(x)(n+1)} in total degrees
// 0..n_max (internal grading and Koszul signs included for DG input).
std::vector<int> bar_hh_dims(const RawAlgebra& a, int n_max);

struct GroupHomologyReport {
  std::vector<int> homology;  // H_0..H_{i_max}
  int tate_even = 0;          // dim of Tate homology in even degrees
  int tate_odd = 0;
};
// Dims from the explicit 2-periodic free resolution of a cyclic group module.
GroupHomologyReport brute_group_homology(int order, const SpMat& sigma, int i_max);

// Degree-n dimension bounds for the sum-total of the two-sided periodic
// lattice cut to levels 1..max_level; one raw elimination per window size.
// Degree-0 algebras only.
std::pair<int, int> direct_hpbar_window(const RawAlgebra& a, int n, int max_level);

}  // namespace cyclohom::oracle
