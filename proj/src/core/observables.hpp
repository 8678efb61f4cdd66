#pragma once

#include <string>
#include <utility>
#include <vector>

#include "core/common.hpp"

namespace eur {

struct ObservableBasis {
  std::string label;  // "S_x", "M1", ...
  Mat U;              // columns are the outcome eigenvectors
};

struct ObservableSet {
  std::string kind;  // "spin" | "mub"
  int dim = 0;
  double spin = 0.0;         // kind == "spin"
  std::vector<int> subset;   // kind == "mub": 1-based catalog indices
  std::string descriptor;
  std::vector<ObservableBasis> bases;

  int count() const { return static_cast<int>(bases.size()); }
};

// Ladder construction in the standard |s, m> basis, m descending from +s.
Mat spin_operator_ladder(double s, char axis);
// The spin-1 representation in which the S_j^2 are diagonal; null projectors
// are basis states here (|S_x=0> = (1,0,0) and cyclic).
Mat spin_operator_cartesian(char axis);
// Operative representation: cartesian for s=1, ladder otherwise.
Mat spin_operator(double s, char axis);

double parse_spin(const std::string& text);  // "1" | "3/2" | "2" (also 1.5 etc.)

// Columns sorted by descending eigenvalue; degenerate blocks re-orthonormalized
// by sequential projection in index order; every column's leading non-zero
// entry is made real non-negative. Requires a Hermitian input.
Mat eigenbasis(const Mat& H);

// Weyl-Heisenberg basis for prime d: (M_t)_{k,j} = w^{(t k^2 + j k) mod d}/sqrt(d).
Mat weyl_heisenberg(int d, int t);

// Operative catalog of pairwise unbiased bases (d+1 of them for d in {2,3,4,5}).
std::vector<Mat> mub_catalog(int d);
// Human-readable provenance notes for the catalog (corrected entries,
// column-permutation equivalences).
std::vector<std::string> mub_catalog_annotations(int d);

// Max deviation from unitarity and pairwise unbiasedness; diagnostic only.
double verify_mub(const std::vector<Mat>& bases);

// Largest overlap |<a_i|b_j>| and the second-largest distinct value
// (falls back to c when the spectrum is flat within 1e-9).
std::pair<double, double> overlap_c_c2(const Mat& A, const Mat& B);

// axes: comma-separated or contiguous subset of "x,y,z", order preserved.
ObservableSet make_spin_set(const std::string& spin, const std::string& axes);
ObservableSet make_spin_set(double spin, const std::string& axes);
// First L catalog bases, or an explicit 1-based subset. Bases are validated
// pairwise unbiased at load; a failure names the offending pair.
ObservableSet make_mub_set(int d, int L, const std::vector<int>& subset = {});

}  // namespace eur
