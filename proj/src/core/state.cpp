#include "core/state.hpp"

#include <cmath>

namespace eur {

namespace {
constexpr double kTwoPi = 2.0 * kPi;

void check_dim(int d) {
  if (d < 2 || d > 5) throw DomainError("state dimension must be in [2,5], got " + std::to_string(d));
}
}  // namespace

Vec canonicalize(const Vec& psi) {
  double n = psi.norm();
  if (n < 1e-12) throw DomainError("cannot canonicalize the zero vector");
  if (std::abs(n - 1.0) > 1e-6) throw NumericError("state norm deviates from 1 by more than 1e-6");
  Vec out = psi / n;
  // Anchor the global phase on the largest-magnitude component (ties break
  // toward the lowest index) so numerical dust in near-zero components cannot
  // steer the convention.
  Eigen::Index pick = 0;
  double best = 0.0;
  for (Eigen::Index j = 0; j < out.size(); ++j) {
    double m = std::abs(out[j]);
    if (m > best + 1e-15) {
      best = m;
      pick = j;
    }
  }
  out *= std::conj(out[pick]) / std::abs(out[pick]);
  return out;
}

double fidelity_distance(const Vec& a, const Vec& b) {
  cxd ov = a.dot(b);  // conjugates a
  double f = 1.0 - std::norm(ov);
  return std::sqrt(f > 0.0 ? f : 0.0);
}

Vec state_from_params_flat(const double* x, int d) {
  check_dim(d);
  const int n = d - 1;
  for (int k = 0; k < n; ++k) {
    if (x[k] < -1e-9 || x[k] > kPi / 2 + 1e-9)
      throw DomainError("chart angle out of [0, pi/2]");
    if (x[n + k] < -1e-9 || x[n + k] > kTwoPi + 1e-9)
      throw DomainError("chart phase out of [0, 2*pi)");
  }
  double s[4], c[4];
  for (int k = 0; k < n; ++k) {
    s[k] = std::sin(x[k]);
    c[k] = std::cos(x[k]);
  }
  double amp[5] = {0, 0, 0, 0, 0};
  if (d == 2) {
    amp[1] = c[0];
    amp[0] = s[0];
  } else {
    amp[d - 1] = c[0];
    double prod = 1.0;
    for (int k = 1; k <= d - 3; ++k) {
      prod *= s[k - 1];
      amp[d - 1 - k] = prod * c[k];
    }
    prod *= s[d - 3];
    if (d == 4) {
      amp[1] = prod * s[d - 2];
      amp[0] = prod * c[d - 2];
    } else {
      amp[1] = prod * c[d - 2];
      amp[0] = prod * s[d - 2];
    }
  }
  Vec psi(d);
  for (int j = 0; j < d - 1; ++j) {
    double chi = x[n + j];
    psi[j] = amp[j] * cxd(std::cos(chi), std::sin(chi));
  }
  psi[d - 1] = amp[d - 1];
  return psi;
}

Vec state_from_params(const StateParams& p) {
  const int d = p.dim();
  check_dim(d);
  if (static_cast<int>(p.phases.size()) != d - 1)
    throw DomainError("StateParams needs d-1 phases");
  std::vector<double> flat = params_to_flat(p);
  return state_from_params_flat(flat.data(), d);
}

StateParams params_from_state(const Vec& psi_in) {
  const int d = static_cast<int>(psi_in.size());
  check_dim(d);
  double n = psi_in.norm();
  if (n < 1e-12) throw DomainError("cannot parametrize the zero vector");
  Vec psi = psi_in / n;
  // Chart convention: last component real non-negative. If it vanishes, the
  // global phase is fixed by the first non-vanishing component instead (its
  // phase then lands in the corresponding chi).
  if (std::abs(psi[d - 1]) > 1e-12) {
    psi *= std::conj(psi[d - 1]) / std::abs(psi[d - 1]);
  }
  double r[5];
  for (int j = 0; j < d; ++j) r[j] = std::abs(psi[j]);

  StateParams p;
  p.angles.assign(d - 1, 0.0);
  p.phases.assign(d - 1, 0.0);
  auto tail_norm = [&](int count) {
    double t = 0;
    for (int j = 0; j < count; ++j) t += r[j] * r[j];
    return std::sqrt(t);
  };
  if (d == 2) {
    p.angles[0] = std::atan2(r[0], r[1]);
  } else {
    p.angles[0] = std::atan2(tail_norm(d - 1), r[d - 1]);
    for (int k = 1; k <= d - 3; ++k)
      p.angles[k] = std::atan2(tail_norm(d - 1 - k), r[d - 1 - k]);
    if (d == 4)
      p.angles[d - 2] = std::atan2(r[1], r[0]);
    else
      p.angles[d - 2] = std::atan2(r[0], r[1]);
  }
  for (int j = 0; j < d - 1; ++j) {
    if (r[j] > 1e-12) {
      double chi = std::arg(psi[j]);
      if (chi < 0) chi += kTwoPi;
      if (chi >= kTwoPi) chi -= kTwoPi;
      p.phases[j] = chi;
    }
  }
  return p;
}

std::vector<double> params_to_flat(const StateParams& p) {
  std::vector<double> x(p.angles);
  x.insert(x.end(), p.phases.begin(), p.phases.end());
  return x;
}

StateParams params_from_flat(const std::vector<double>& x, int d) {
  check_dim(d);
  if (static_cast<int>(x.size()) != 2 * (d - 1))
    throw DomainError("flat parameter vector must have length 2(d-1)");
  StateParams p;
  p.angles.assign(x.begin(), x.begin() + (d - 1));
  p.phases.assign(x.begin() + (d - 1), x.end());
  return p;
}

}  // namespace eur
