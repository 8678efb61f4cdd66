#include "core/qutrit.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace eur {

namespace {

double xlog2x(double x) { return x > 1e-15 ? x * std::log2(x) : 0.0; }

void check_simplex(const QutritBlochParams& p) {
  for (double w : p.omega)
    if (w < -1e-12 || w > 1.0 + 1e-12)
      throw DomainError("omega components must lie in [0,1]");
  double s = p.omega[0] + p.omega[1] + p.omega[2];
  if (std::abs(s - 1.0) > 1e-12)
    throw DomainError("omega_x + omega_y + omega_z must equal 1 (got " + std::to_string(s) + ")");
  for (double a : p.a)
    if (std::abs(a) > 1.0 + 1e-12) throw DomainError("|a_j| must not exceed 1");
}

}  // namespace

Mat density_from_bloch(const QutritBlochParams& p) {
  check_simplex(p);
  const double wx = p.omega[0], wy = p.omega[1], wz = p.omega[2];
  const double ax = p.a[0], ay = p.a[1], az = p.a[2];
  const double qx = p.q[0], qy = p.q[1], qz = p.q[2];
  const cxd i(0, 1);
  Mat rho(3, 3);
  rho << cxd(wx), (-i * az - qz) / 2.0, (i * ay - qy) / 2.0,
      (i * az - qz) / 2.0, cxd(wy), (-i * ax - qx) / 2.0,
      (-i * ay - qy) / 2.0, (i * ax - qx) / 2.0, cxd(wz);
  return rho;
}

PositivityReport check_positivity(const QutritBlochParams& p) {
  check_simplex(p);
  PositivityReport rep;
  rep.margin = 1e300;
  for (int j = 0; j < 3; ++j) {
    int k = (j + 1) % 3, l = (j + 2) % 3;
    rep.margin = std::min(rep.margin, 4.0 * p.omega[k] * p.omega[l] - p.a[j] * p.a[j]);
  }
  for (double w : p.omega) rep.margin = std::min(rep.margin, w);
  rep.ok = rep.margin >= -1e-12;
  return rep;
}

std::array<double, 3> spin1_probabilities(double omega_j, double a_j) {
  if (omega_j < -1e-12 || omega_j > 1.0 + 1e-12)
    throw DomainError("omega_j must lie in [0,1]");
  double pp = 0.5 * (1.0 - omega_j - a_j);
  double pm = 0.5 * (1.0 - omega_j + a_j);
  if (pp < -1e-9 || pm < -1e-9)
    throw DomainError("a_j incompatible with omega_j: negative outcome probability");
  return {omega_j, std::max(pp, 0.0), std::max(pm, 0.0)};
}

double spin1_entropy(double omega_j, double a_j) {
  auto p = spin1_probabilities(omega_j, a_j);
  return -(xlog2x(p[0]) + xlog2x(p[1]) + xlog2x(p[2]));
}

double entropy_sum_bloch(const QutritBlochParams& p) {
  check_simplex(p);
  double h = 0.0;
  for (int j = 0; j < 3; ++j) h += spin1_entropy(p.omega[j], p.a[j]);
  return h;
}

double gamma_bound(double omega_x, double omega_y) {
  double omega_z = 1.0 - omega_x - omega_y;
  if (omega_x < -1e-12 || omega_y < -1e-12 || omega_z < -1e-12)
    throw DomainError("(omega_x, omega_y) must lie in the simplex omega_x+omega_y<=1, both >=0");
  double w[3] = {std::max(omega_x, 0.0), std::max(omega_y, 0.0), std::max(omega_z, 0.0)};
  double g = 0.0;
  for (int j = 0; j < 3; ++j) {
    int k = (j + 1) % 3, l = (j + 2) % 3;
    double B = 1.0 - w[j] + 2.0 * std::sqrt(w[k] * w[l]);
    g -= xlog2x(w[j]) + (B > 1e-15 ? B * std::log2(B / 2.0) : 0.0);
  }
  return g;
}

std::vector<SurfaceRow> gamma_surface(int resolution) {
  if (resolution < 2) throw DomainError("surface resolution must be at least 2");
  std::vector<SurfaceRow> rows;
  rows.reserve(static_cast<size_t>(resolution) * (resolution + 1) / 2);
  // Direct division keeps the simplex vertices exact (i = res-1 gives 1.0
  // bit-for-bit), which i*step arithmetic does not.
  const double den = resolution - 1;
  for (int i = 0; i < resolution; ++i)
    for (int j = 0; j + i < resolution; ++j) {
      double wx = i / den, wy = j / den;
      rows.push_back({wx, wy, gamma_bound(wx, wy)});
    }
  return rows;
}

std::string gamma_surface_csv(int resolution) {
  std::string out = "omega_x,omega_y,gamma\n";
  char buf[128];
  for (const auto& r : gamma_surface(resolution)) {
    std::snprintf(buf, sizeof buf, "%.12g,%.12g,%.12g\n", r.omega_x, r.omega_y, r.gamma);
    out += buf;
  }
  return out;
}

QutritBlochParams sample_physical(SplitMix64& rng) {
  QutritBlochParams p;
  double u = rng.uniform(), v = rng.uniform();
  if (u > v) std::swap(u, v);
  p.omega = {u, v - u, 1.0 - v};
  for (int j = 0; j < 3; ++j) {
    int k = (j + 1) % 3, l = (j + 2) % 3;
    double amax = 2.0 * std::sqrt(p.omega[k] * p.omega[l]);
    p.a[j] = rng.uniform(-amax, amax);
  }
  p.q = {0.0, 0.0, 0.0};
  return p;
}

}  // namespace eur
