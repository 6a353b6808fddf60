#pragma once
// Finite-window chain complexes, bicomplexes, filtered complexes, homology,
// cones, totalizations, truncations, spectral-sequence pages, towers.
#include <optional>
#include <string>
#include <vector>

#include "cyclohom/gf_linalg.hpp"

namespace cyclohom {

// Homological grading: d_n : C_n -> C_{n-1}. Everything outside [lo, hi] is 0.
struct ChainComplex {
  i64 p = 0;
  int lo = 0, hi = -1;
  std::vector<int> dims_;  // size hi-lo+1
  std::vector<SpMat> d_;   // d_[n-lo] : C_n -> C_{n-1}

  ChainComplex() = default;
  ChainComplex(i64 p_, int lo_, int hi_);
  int dim(int n) const;
  SpMat diff(int n) const;  // zero-shaped outside window
  void set_dim(int n, int dim);
  void set_diff(int n, SpMat m);
  void validate() const;  // throws on shape errors or d*d != 0
  int homology_dim(int n) const;
};

struct ChainMap {
  const ChainComplex* src = nullptr;
  const ChainComplex* dst = nullptr;
  std::vector<SpMat> f;  // indexed by degree n - lo(src); f[n]: src_n -> dst_n
  SpMat at(int n) const;
  void validate() const;  // commutation with differentials
};
ChainMap make_chain_map(const ChainComplex& src, const ChainComplex& dst,
                        const std::vector<std::pair<int, SpMat>>& comps);

ChainComplex cone(const ChainMap& f);
ChainComplex shift(const ChainComplex& c, int k);  // C[k]_n = C_{n-k}
ChainComplex direct_sum(const ChainComplex& a, const ChainComplex& b);

// Homology with representatives and class coordinates.
struct HomologySpace {
  i64 p = 0;
  int ambient = 0, dim = 0;
  SpMat reps;        // ambient x dim; cycle representatives
  SpMat boundaries;  // ambient x (dim of boundary space)
  std::vector<i64> coords(const std::vector<i64>& cycle) const;  // length dim
};
HomologySpace homology(const ChainComplex& c, int n);
// Matrix of H_n(f), size dim H_n(dst) x dim H_n(src).
SpMat induced_on_homology(const ChainMap& f, int n);

struct MixedComplex {
  ChainComplex base;
  std::vector<SpMat> B_;  // B[n-lo] : C_n -> C_{n+1}
  SpMat B(int n) const;
  void set_B(int n, SpMat m);
  void validate() const;  // B*B = 0 and dB + Bd = 0 (strict convention)
};

struct BicomplexWindow {
  i64 p = 0;
  int i0 = 0, i1 = -1, j0 = 0, j1 = -1;
  // cell (i, j); index (i - i0) * (j1 - j0 + 1) + (j - j0)
  std::vector<int> dims_;
  std::vector<SpMat> dh_;  // (i,j) -> (i-1,j)
  std::vector<SpMat> dv_;  // (i,j) -> (i,j-1)
  BicomplexWindow() = default;
  BicomplexWindow(i64 p_, int i0_, int i1_, int j0_, int j1_);
  int idx(int i, int j) const;
  int dim(int i, int j) const;
  SpMat dh(int i, int j) const;
  SpMat dv(int i, int j) const;
  void set_dim(int i, int j, int dim);
  void set_dh(int i, int j, SpMat m);
  void set_dv(int i, int j, SpMat m);
  void validate() const;  // squares vanish, anticommutation
};
enum class TotalMode { sum, product };  // coincide on finite rectangles (asserted)
ChainComplex total(const BicomplexWindow& b, TotalMode mode = TotalMode::sum);

// Decreasing filtration on a chain complex. F^i full for i <= fmin, 0 for i > fmax.
struct FilteredComplex {
  ChainComplex base;
  int fmin = 0, fmax = -1;
  // sub[(i - fmin) * width + (n - lo)]: subspace of C_n
  std::vector<Subspace> sub_;
  Subspace filt(int i, int n) const;
  void set_filt(int i, int n, Subspace s);
  void validate() const;  // decreasing, d-stable
  int gr_dim(int i, int n) const;
};
FilteredComplex trivial_filtration(const ChainComplex& c);

enum class TruncKind { tau, beta };
// Filtered truncations; returned as a re-coordinatized subcomplex with the
// induced filtration.
FilteredComplex truncate(const FilteredComplex& fc, TruncKind kind, int n);
// tau^n / beta^n as a quotient complex with the induced filtration.
FilteredComplex h_trunc(const FilteredComplex& fc, int n);

// E_r^{i,n} dimension of the filtration spectral sequence (r >= 1).
int ss_page(const FilteredComplex& fc, int r, int i, int n);
int ss_einf(const FilteredComplex& fc, int i, int n);

// Towers and stabilization. For sub towers maps[k]: stage k -> stage k+1
// (injections); for quotient towers maps[k]: stage k+1 -> stage k (surjections).
struct Tower {
  std::vector<ChainComplex> stages;
  std::vector<ChainMap> maps;
  bool quotient = false;
};
struct StabPolicy {
  int steps = 3;
  int max_stages = 16;
};
struct StabCertificate {
  int stage = 0;  // first stage of the verified run
  int dim = 0;
  std::vector<int> map_ranks;
};
struct StabResult {
  bool stabilized = false;
  int dim = -1;
  std::optional<StabCertificate> certificate;
  int stages_used = 0;
};
StabResult stabilized_homology(const Tower& t, int n, const StabPolicy& policy);

}  // namespace cyclohom
