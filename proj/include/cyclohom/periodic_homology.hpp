#pragma once
// The bidirectional lattice of a cyclic module and the periodic theories built
// from it: Hochschild-type homology (two-column cone), cyclic homology (first
// quadrant), periodic homology (column-truncation quotient towers), co-periodic
// homology (row-band colimit towers), the polynomial variant, the restricted
// variants, and the five-theory comparison report.
#include <string>
#include <vector>

#include "cyclohom/complex_engine.hpp"
#include "cyclohom/cyclic_objects.hpp"

namespace cyclohom {

// Lattice data per row m: even columns carry the face complex (vertical b),
// odd columns the contractible variant (vertical -b'); horizontal maps going
// one column down alternate 1 - sigma (odd columns) and the norm N (even
// columns).  A cell of row m, internal degree w, sitting in column k has total
// degree n = k + m + w.  Internal differentials of DG input enter the total
// differential with the sign (-1)^(k+m).
struct TsyganWindow {
  i64 p = 0;
  int level = 1;
  int m_max = -1;  // rows [0, m_max]
  std::vector<int> dims;                // dim of row space E_m
  std::vector<std::vector<int>> wdeg;   // internal degrees (all 0 if ungraded)
  std::vector<SpMat> b, bp;             // verticals E_m -> E_{m-1} (bp = b')
  std::vector<SpMat> oms, nrm;          // 1 - sigma and N on E_m
  std::vector<SpMat> idf;               // internal differential on E_m (0x0 = zero)

  int rows() const { return m_max + 1; }
};

// Builds rows 0..rows-1 and verifies the lattice identities: both verticals
// square to zero, b(1-sigma) = (1-sigma)b', b'N = Nb, (1-sigma)N = N(1-sigma)
// = 0, and the internal differential squares to zero and commutes with all
// four structure maps.  Throws when rows exceed the available simplicial range
// or an identity fails.
TsyganWindow build_tsygan(const CyclicModuleData& e, int rows);

// Chain complex of the cells { (k, m) : kmin <= k <= kmax, 0 <= m <= mcap }
// over total degrees [lo-1, hi+1] (the margin degrees carry the differentials
// needed for homology at lo and hi).  Use INT_MIN / INT_MAX for unbounded
// column ranges.
ChainComplex window_total_complex(const TsyganWindow& w, int lo, int hi,
                                  int kmin, int kmax, int mcap);

// Row index of each basis vector of the degree-n term of the complex built by
// window_total_complex with the same bounds, in coordinate order.  Lets a
// caller carve row-based subspaces (filtrations by row blocks) out of the
// assembled total complex.
std::vector<int> window_cell_rows(const TsyganWindow& w, int n, int kmin,
                                  int kmax, int mcap);

struct PeriodicPolicy {
  int steps = 3;        // consecutive agreeing comparisons required
  int max_stages = 6;   // tower growth cap
  i64 budget = 2'000'000;  // cells per stage cap
  int threads = 1;
};

struct DegreeStab {
  int degree = 0;
  bool stabilized = false;
  int dim = -1;            // certified dimension; -1 when not stabilized
  int lower = 0, upper = -1;  // honest bounds when not stabilized
  int stage = -1;          // stage index backing the certificate
  std::vector<int> history;  // comparison ranks backing the certificate
};

struct StabTable {
  int lo = 0, hi = -1;
  std::vector<DegreeStab> at;
  const DegreeStab& deg(int n) const { return at[static_cast<size_t>(n - lo)]; }
  bool all_stabilized() const;
  std::vector<int> dims() const;  // -1 entries for uncertified degrees
};

// Homology of the cone of 1 - sigma on the contractible column mapping to the
// face column; internally cross-checked against the plain single-column
// complex (they must agree degreewise).
std::vector<int> hh_dims(const CyclicModuleData& e, int lo, int hi);

// Homology of the first-quadrant sum-total complex (finite in each degree).
std::vector<int> hc_dims(const CyclicModuleData& e, int lo, int hi);

// Periodic theory: inverse limit over quotient complexes truncating columns at
// k >= k0, with k0 dropping by 2 per stage (the periodicity shift), fed to the
// tower stabilizer.
StabTable hp_dims(const CyclicModuleData& e, int lo, int hi,
                  const PeriodicPolicy& pol);
StabTable hp_dims_window(const TsyganWindow& w, int lo, int hi,
                         const PeriodicPolicy& pol);

// Co-periodic theory: colimit over the row bands m <= M (the stages of the
// standard row filtration).  A class counts when it survives from band M0 to
// band M0 + gap with gap ~ 2p; the certificate records an agreeing run of
// surviving ranks at two consecutive top bands.
StabTable hpbar_dims(const CyclicModuleData& e, int lo, int hi,
                     const PeriodicPolicy& pol);
StabTable hpbar_dims_window(const TsyganWindow& w, int lo, int hi,
                            const PeriodicPolicy& pol);

// Polynomial periodic theory: colimit over growing column-and-row windows
// { k <= K, m <= M } (subcomplexes exhausting the lattice), same surviving-rank
// stabilization as the co-periodic tower.
StabTable cp_poly_dims(const CyclicModuleData& e, int lo, int hi,
                       const PeriodicPolicy& pol);
StabTable cp_poly_dims_window(const TsyganWindow& w, int lo, int hi,
                              const PeriodicPolicy& pol);

// Restricted theories: each row is completed to its own 2-periodic complex
// first; for rows that are degreewise finite dimensional (always the case
// here) the completion is the row itself, so each side reduces to the
// corresponding outer totalization: the column tower (periodic side) or the
// row-band colimit (co-periodic side).
enum class RestrictedSide { periodic, coperiodic };
StabTable restricted_dims(const CyclicModuleData& e, RestrictedSide side,
                          int lo, int hi, const PeriodicPolicy& pol);

// Comparison of the five theories.  A map counts as a dimension-isomorphism
// over the window when both sides are certified in every degree and the
// dimensions agree.
struct CompareReport {
  StabTable hp;                     // periodic (inverse-limit side)
  StabTable restricted_periodic;    // restricted periodic
  StabTable poly;                   // polynomial periodic
  StabTable restricted_coperiodic;  // restricted co-periodic
  StabTable coperiodic;             // co-periodic
  bool l_iso = false;  // polynomial -> restricted periodic
  bool L_iso = false;  // restricted periodic -> periodic
  bool r_iso = false;  // polynomial -> restricted co-periodic
  bool R_iso = false;  // restricted co-periodic -> co-periodic
};
CompareReport compare_5dia(const CyclicModuleData& e, int lo, int hi,
                           const PeriodicPolicy& pol);

}  // namespace cyclohom
