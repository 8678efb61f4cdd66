#pragma once

#include <array>
#include <string>
#include <vector>

#include "core/common.hpp"
#include "core/rng.hpp"

namespace eur {

// Spin-1 Bloch-like parameters in the representation where the S_j^2 are
// diagonal: omega_j = 1 - <S_j^2>, a_j = <S_j>, q_j = <{S_k, S_l}>.
struct QutritBlochParams {
  std::array<double, 3> omega{};
  std::array<double, 3> a{};
  std::array<double, 3> q{};
};

struct PositivityReport {
  bool ok = false;
  double margin = 0.0;  // min over j of 4*omega_k*omega_l - a_j^2 (and simplex slack)
};

// The 3x3 density matrix with diag(omega_x, omega_y, omega_z) and
// off-diagonals built from a and q. Hermitian with unit trace by construction;
// the trace/simplex constraints are validated (DomainError).
Mat density_from_bloch(const QutritBlochParams& p);

// Necessary conditions only: omega in the simplex and the three second-order
// minors 4*omega_k*omega_l >= a_j^2. Passing them does not guarantee a
// positive-semidefinite density matrix (the determinant can still be
// negative), so callers must not treat ok==true as full physicality.
PositivityReport check_positivity(const QutritBlochParams& p);

// Outcome probabilities of S_j: (p_0, p_+1, p_-1) = (omega, (1-omega-a)/2, (1-omega+a)/2).
std::array<double, 3> spin1_probabilities(double omega_j, double a_j);

// Closed-form H(S_j) in bits.
double spin1_entropy(double omega_j, double a_j);

double entropy_sum_bloch(const QutritBlochParams& p);  // sum over j of spin1_entropy

// Gamma(omega_x, omega_y) = -sum_j [omega_j log2 omega_j + B_j log2(B_j/2)],
// B_j = 1 - omega_j + 2 sqrt(omega_k omega_l). Equals 2 exactly at the
// simplex vertices and stays above 2 elsewhere, except in narrow strips
// (width ~1e-3) around the vertices where it dips below 2 by up to ~0.012;
// uniform grids of resolution <= 200 never sample the dip. It is NOT a
// pointwise lower bound for sum_j H(S_j) over all physical (omega, a):
// the sampler below violates it on roughly 8.5% of draws. The entropy sum
// itself respects the floor of 2 bits on every physical draw.
double gamma_bound(double omega_x, double omega_y);

struct SurfaceRow {
  double omega_x, omega_y, gamma;
};

// Uniform triangular grid including the three vertices: points
// (i, j)/(resolution-1) with i + j <= resolution-1, lexicographic order,
// resolution*(resolution+1)/2 rows in total.
std::vector<SurfaceRow> gamma_surface(int resolution);

// CSV with header omega_x,omega_y,gamma and 12 significant digits.
std::string gamma_surface_csv(int resolution);

// omega uniform on the simplex, each a_j uniform within its minors interval,
// q = 0.
QutritBlochParams sample_physical(SplitMix64& rng);

}  // namespace eur
