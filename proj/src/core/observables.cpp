#include "core/observables.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

namespace eur {

namespace {

int spin_dim(double s) { return static_cast<int>(std::lround(2 * s + 1)); }

void check_axis(char axis) {
  if (axis != 'x' && axis != 'y' && axis != 'z')
    throw DomainError(std::string("unknown spin axis '") + axis + "'");
}

Mat wh_phase_matrix(int d, const std::vector<std::vector<int>>& expo) {
  Mat M(d, d);
  for (int k = 0; k < d; ++k)
    for (int j = 0; j < d; ++j) {
      double th = 2.0 * kPi * expo[k][j] / d;
      M(k, j) = cxd(std::cos(th), std::sin(th)) / std::sqrt(double(d));
    }
  return M;
}

}  // namespace

Mat spin_operator_ladder(double s, char axis) {
  check_axis(axis);
  const int d = spin_dim(s);
  if (std::abs(2 * s - std::lround(2 * s)) > 1e-12 || d < 2)
    throw DomainError("spin must be a non-negative half-integer");
  Mat Sp = Mat::Zero(d, d);
  for (int k = 1; k < d; ++k) {
    double m = s - k;  // S+ raises |s,m> -> |s,m+1>
    Sp(k - 1, k) = std::sqrt(s * (s + 1) - m * (m + 1));
  }
  Mat Sm = Sp.adjoint();
  if (axis == 'x') return (Sp + Sm) / 2.0;
  if (axis == 'y') return (Sp - Sm) / cxd(0, 2);
  Mat Sz = Mat::Zero(d, d);
  for (int k = 0; k < d; ++k) Sz(k, k) = s - k;
  return Sz;
}

Mat spin_operator_cartesian(char axis) {
  check_axis(axis);
  Mat M = Mat::Zero(3, 3);
  const cxd i(0, 1);
  if (axis == 'x') {
    M(1, 2) = -i;
    M(2, 1) = i;
  } else if (axis == 'y') {
    M(0, 2) = i;
    M(2, 0) = -i;
  } else {
    M(0, 1) = -i;
    M(1, 0) = i;
  }
  return M;
}

Mat spin_operator(double s, char axis) {
  if (std::abs(s - 1.0) < 1e-12) return spin_operator_cartesian(axis);
  return spin_operator_ladder(s, axis);
}

double parse_spin(const std::string& text) {
  double s = -1;
  if (text == "1") s = 1;
  else if (text == "3/2" || text == "1.5") s = 1.5;
  else if (text == "2") s = 2;
  if (s < 0) throw DomainError("spin must be one of 1, 3/2, 2 (got '" + text + "')");
  return s;
}

Mat eigenbasis(const Mat& H) {
  if (H.rows() != H.cols()) throw DomainError("eigenbasis requires a square matrix");
  if ((H - H.adjoint()).cwiseAbs().maxCoeff() > 1e-10)
    throw DomainError("eigenbasis requires a Hermitian matrix");
  Eigen::SelfAdjointEigenSolver<Mat> es(H);
  if (es.info() != Eigen::Success) throw NumericError("eigendecomposition failed");
  const int d = static_cast<int>(H.rows());
  Mat V(d, d);
  for (int j = 0; j < d; ++j) V.col(j) = es.eigenvectors().col(d - 1 - j);  // descending
  Eigen::VectorXd w(d);
  for (int j = 0; j < d; ++j) w[j] = es.eigenvalues()[d - 1 - j];
  // Degenerate blocks: sequential projection in index order keeps the result
  // independent of solver-internal ordering details.
  int b = 0;
  while (b < d) {
    int e = b + 1;
    while (e < d && std::abs(w[e] - w[b]) < 1e-9) ++e;
    for (int j = b; j < e; ++j) {
      Vec v = V.col(j);
      for (int k = b; k < j; ++k) v -= V.col(k).dot(v) * V.col(k);
      double n = v.norm();
      if (n < 1e-12) throw NumericError("degenerate block orthonormalization collapsed");
      V.col(j) = v / n;
    }
    b = e;
  }
  for (int j = 0; j < d; ++j) {
    for (int r = 0; r < d; ++r) {
      double m = std::abs(V(r, j));
      if (m > 1e-12) {
        V.col(j) *= std::conj(V(r, j)) / m;
        break;
      }
    }
  }
  return V;
}

Mat weyl_heisenberg(int d, int t) {
  if (d != 2 && d != 3 && d != 5)
    throw DomainError("Weyl-Heisenberg construction requires prime d in {2,3,5}");
  std::vector<std::vector<int>> expo(d, std::vector<int>(d));
  for (int k = 0; k < d; ++k)
    for (int j = 0; j < d; ++j) expo[k][j] = (t * k * k + j * k) % d;
  return wh_phase_matrix(d, expo);
}

std::vector<Mat> mub_catalog(int d) {
  const double h = 1.0 / std::sqrt(2.0);
  const cxd i(0, 1);
  switch (d) {
    case 2: {
      Mat I = Mat::Identity(2, 2);
      Mat X(2, 2), Y(2, 2);
      X << h, h, h, -h;
      Y << h, h, i * h, -i * h;
      return {I, X, Y};
    }
    case 3:
      return {Mat::Identity(3, 3), weyl_heisenberg(3, 0), weyl_heisenberg(3, 1),
              weyl_heisenberg(3, 2)};
    case 4: {
      Mat I = Mat::Identity(4, 4);
      Mat M2(4, 4), M3(4, 4), M4(4, 4), M5(4, 4);
      M2 << 1, 1, 1, 1, 1, 1, -1, -1, 1, -1, -1, 1, 1, -1, 1, -1;
      M3 << 1, 1, 1, 1, 1, 1, -1, -1, -i, i, i, -i, i, -i, i, -i;
      M4 << 1, 1, 1, 1, i, -i, i, -i, -1, -1, 1, 1, i, -i, -i, i;
      M5 << 1, 1, 1, 1, i, -i, i, -i, i, -i, -i, i, -1, -1, 1, 1;
      return {I, M2 / 2.0, M3 / 2.0, M4 / 2.0, M5 / 2.0};
    }
    case 5:
      return {Mat::Identity(5, 5), weyl_heisenberg(5, 0), weyl_heisenberg(5, 1),
              weyl_heisenberg(5, 3), weyl_heisenberg(5, 2), weyl_heisenberg(5, 4)};
    default:
      throw DomainError("MUB catalog covers d in [2,5], got " + std::to_string(d));
  }
}

std::vector<std::string> mub_catalog_annotations(int d) {
  switch (d) {
    case 2:
      return {"standard qubit triple: computational, Hadamard, circular"};
    case 3:
      return {
          "Weyl-Heisenberg family {I, WH0, WH1, WH2}",
          "M3 equals the printed matrix up to column permutation (1,0,2)",
          "M4 equals the printed matrix up to column permutation (2,0,1)"};
    case 4:
      return {
          "printed five-matrix family with one correction",
          "M5 entry (3,2) corrected from +i to -i; the printed row (i,i,-i,i)/2 "
          "is not orthogonal to row 2, and the corrected completion is the "
          "unique one that is unitary and unbiased against M1..M4"};
    case 5:
      return {
          "Weyl-Heisenberg family in printed order {I, WH0, WH1, WH3, WH2, WH4}",
          "M4 entry (4,2) corrected from w^3 to w (Weyl-Heisenberg value)",
          "M5 entry (3,2) corrected from w^2 to w^4 (Weyl-Heisenberg value)",
          "ordering is significant: the first three bases form a triple whose "
          "entropy-sum minimum is 2*log2(5); other triples of the six reach "
          "~4.432"};
    default:
      throw DomainError("MUB catalog covers d in [2,5], got " + std::to_string(d));
  }
}

double verify_mub(const std::vector<Mat>& bases) {
  double dev = 0.0;
  const int n = static_cast<int>(bases.size());
  if (n == 0) return 0.0;
  const int d = static_cast<int>(bases[0].rows());
  for (int a = 0; a < n; ++a) {
    Mat g = bases[a].adjoint() * bases[a] - Mat::Identity(d, d);
    dev = std::max(dev, g.cwiseAbs().maxCoeff());
    for (int b = a + 1; b < n; ++b) {
      Mat ov = bases[a].adjoint() * bases[b];
      for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c)
          dev = std::max(dev, std::abs(std::norm(ov(r, c)) - 1.0 / d));
    }
  }
  return dev;
}

std::pair<double, double> overlap_c_c2(const Mat& A, const Mat& B) {
  if (A.rows() != B.rows() || A.cols() != B.cols())
    throw DomainError("overlap requires bases of equal dimension");
  Mat ov = A.adjoint() * B;
  double c = 0.0;
  for (int r = 0; r < ov.rows(); ++r)
    for (int k = 0; k < ov.cols(); ++k) c = std::max(c, std::abs(ov(r, k)));
  double c2 = 0.0;
  for (int r = 0; r < ov.rows(); ++r)
    for (int k = 0; k < ov.cols(); ++k) {
      double v = std::abs(ov(r, k));
      if (v < c - 1e-9) c2 = std::max(c2, v);
    }
  if (c2 <= 1e-12) c2 = c;  // flat (or effectively flat) overlap spectrum
  return {c, c2};
}

ObservableSet make_spin_set(double spin, const std::string& axes) {
  if (std::abs(spin - 1.0) < 1e-12) return make_spin_set(std::string("1"), axes);
  if (std::abs(spin - 1.5) < 1e-12) return make_spin_set(std::string("3/2"), axes);
  if (std::abs(spin - 2.0) < 1e-12) return make_spin_set(std::string("2"), axes);
  throw DomainError("supported spins are 1, 3/2 and 2");
}

ObservableSet make_spin_set(const std::string& spin, const std::string& axes) {
  double s = parse_spin(spin);
  std::vector<char> ax;
  for (char ch : axes) {
    if (ch == ',' || ch == ' ') continue;
    check_axis(ch);
    if (std::find(ax.begin(), ax.end(), ch) != ax.end())
      throw DomainError(std::string("axis '") + ch + "' listed twice");
    ax.push_back(ch);
  }
  if (ax.empty()) throw DomainError("at least one spin axis required");
  ObservableSet set;
  set.kind = "spin";
  set.spin = s;
  set.dim = spin_dim(s);
  std::ostringstream desc;
  desc << "spin-" << spin << " {";
  for (size_t k = 0; k < ax.size(); ++k) {
    ObservableBasis b;
    b.label = std::string("S_") + ax[k];
    b.U = eigenbasis(spin_operator(s, ax[k]));
    set.bases.push_back(std::move(b));
    desc << (k ? "," : "") << "S_" << ax[k];
  }
  desc << "}";
  set.descriptor = desc.str();
  return set;
}

ObservableSet make_mub_set(int d, int L, const std::vector<int>& subset) {
  std::vector<Mat> cat = mub_catalog(d);  // throws for d outside [2,5]
  const int n = static_cast<int>(cat.size());
  std::vector<int> pick;
  if (!subset.empty()) {
    if (L != 0 && L != static_cast<int>(subset.size()))
      throw DomainError("subset size disagrees with requested basis count");
    std::set<int> seen;
    for (int idx : subset) {
      if (idx < 1 || idx > n)
        throw DomainError("subset index " + std::to_string(idx) + " outside catalog 1.." +
                          std::to_string(n));
      if (!seen.insert(idx).second)
        throw DomainError("subset index " + std::to_string(idx) + " listed twice");
      pick.push_back(idx);
    }
  } else {
    if (L < 1 || L > n)
      throw DomainError("basis count must be in 1.." + std::to_string(n) + " for d=" +
                        std::to_string(d));
    for (int k = 1; k <= L; ++k) pick.push_back(k);
  }

  ObservableSet set;
  set.kind = "mub";
  set.dim = d;
  set.subset = pick;
  std::ostringstream desc;
  desc << "d=" << d << " MUBs {";
  for (size_t k = 0; k < pick.size(); ++k) {
    ObservableBasis b;
    b.label = "M" + std::to_string(pick[k]);
    b.U = cat[pick[k] - 1];
    set.bases.push_back(std::move(b));
    desc << (k ? "," : "") << "M" << pick[k];
  }
  desc << "}";
  set.descriptor = desc.str();

  for (int a = 0; a < set.count(); ++a)
    for (int b = a + 1; b < set.count(); ++b) {
      double dev = verify_mub({set.bases[a].U, set.bases[b].U});
      if (dev > 1e-8)
        throw ValidationError("bases " + set.bases[a].label + " and " + set.bases[b].label +
                              " fail the unbiasedness check (deviation " + std::to_string(dev) +
                              ")");
    }
  return set;
}

}  // namespace eur
