#include "core/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <thread>

#include "core/common.hpp"
#include "core/entropy.hpp"

namespace eur {

namespace {

// Allocation-free mirror of state_from_params_flat for the hot path. A unit
// test pins agreement between the two on random parameters.
inline void chart_state(const double* x, int d, cxd* psi) {
  const int na = d - 1;
  double ang[4], ph[4];
  for (int i = 0; i < na; ++i) {
    ang[i] = std::clamp(x[i], 0.0, 0.5 * kPi);
    ph[i] = std::clamp(x[na + i], 0.0, 2.0 * kPi);
  }
  double amp[5];
  if (d == 2) {
    amp[1] = std::cos(ang[0]);
    amp[0] = std::sin(ang[0]);
  } else {
    double c[4], s[4];
    for (int i = 0; i < na; ++i) {
      c[i] = std::cos(ang[i]);
      s[i] = std::sin(ang[i]);
    }
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
  for (int j = 0; j + 1 < d; ++j) psi[j] = amp[j] * cxd(std::cos(ph[j]), std::sin(ph[j]));
  psi[d - 1] = cxd(amp[d - 1], 0.0);
}

struct Objective {
  int d = 0;
  int L = 0;
  // adj[((b*d)+k)*d + j] = conj(U_b(j,k)): outcome amplitude (b,k) is the dot
  // product of row (b,k) with the state.
  std::vector<cxd> adj;

  explicit Objective(const ObservableSet& set) : d(set.dim), L(set.count()) {
    adj.resize(std::size_t(L) * d * d);
    std::size_t m = 0;
    for (int b = 0; b < L; ++b)
      for (int k = 0; k < d; ++k)
        for (int j = 0; j < d; ++j) adj[m++] = std::conj(set.bases[b].U(j, k));
  }

  double eval_state(const cxd* psi) const {
    double h = 0.0;
    const cxd* a = adj.data();
    for (int bk = 0; bk < L * d; ++bk) {
      cxd s(0.0, 0.0);
      for (int j = 0; j < d; ++j) s += a[j] * psi[j];
      a += d;
      const double p = std::norm(s);
      if (p > 1e-15) h -= p * std::log2(p);
    }
    return h;
  }

  double eval_flat(const double* x) const {
    cxd psi[5];
    chart_state(x, d, psi);
    return eval_state(psi);
  }
};

struct NMOptions {
  int max_iters = 2000;
  double fstop = 1e-14;  // stop when the simplex value spread drops below this
  double xstop = 1e-13;  // ... or its diameter drops below this
};

struct NMOutcome {
  double fmin = 0.0;
  std::vector<double> x;
  bool converged = false;
};

// Box-constrained Nelder-Mead (reflection 1, expansion 2, contraction 0.5,
// shrink 0.5); every candidate is clamped to the box.
NMOutcome nelder_mead(const Objective& obj, const std::vector<double>& x0,
                      const std::vector<double>& lo, const std::vector<double>& hi,
                      const NMOptions& opt, double value_tol, double param_tol) {
  const int n = int(x0.size());
  std::vector<std::vector<double>> pts(n + 1, x0);
  for (int i = 0; i < n; ++i) {
    double h = 0.2 * (hi[i] - lo[i]);
    double v = x0[i] + h;
    if (v > hi[i]) v = x0[i] - h;
    pts[i + 1][i] = std::clamp(v, lo[i], hi[i]);
  }
  std::vector<double> fv(n + 1);
  for (int i = 0; i <= n; ++i) fv[i] = obj.eval_flat(pts[i].data());
  std::vector<int> ord(n + 1);

  auto sort_simplex = [&] {
    for (int i = 0; i <= n; ++i) ord[i] = i;
    std::stable_sort(ord.begin(), ord.end(), [&](int a, int b) { return fv[a] < fv[b]; });
  };
  auto clamped = [&](const std::vector<double>& v) {
    std::vector<double> r(n);
    for (int i = 0; i < n; ++i) r[i] = std::clamp(v[i], lo[i], hi[i]);
    return r;
  };

  double spread = 0.0, diam = 0.0;
  for (int iter = 0; iter < opt.max_iters; ++iter) {
    sort_simplex();
    const int ib = ord[0], iw = ord[n], is = ord[n - 1];
    spread = fv[iw] - fv[ib];
    diam = 0.0;
    for (int i = 1; i <= n; ++i)
      for (int j = 0; j < n; ++j)
        diam = std::max(diam, std::abs(pts[ord[i]][j] - pts[ib][j]));
    if (spread <= opt.fstop || diam <= opt.xstop) break;

    std::vector<double> cen(n, 0.0);
    for (int i = 0; i <= n; ++i)
      if (i != iw)
        for (int j = 0; j < n; ++j) cen[j] += pts[i][j];
    for (int j = 0; j < n; ++j) cen[j] /= n;

    std::vector<double> xr(n);
    for (int j = 0; j < n; ++j) xr[j] = cen[j] + (cen[j] - pts[iw][j]);
    xr = clamped(xr);
    const double fr = obj.eval_flat(xr.data());

    if (fr < fv[ib]) {
      std::vector<double> xe(n);
      for (int j = 0; j < n; ++j) xe[j] = cen[j] + 2.0 * (cen[j] - pts[iw][j]);
      xe = clamped(xe);
      const double fe = obj.eval_flat(xe.data());
      if (fe < fr) {
        pts[iw] = xe;
        fv[iw] = fe;
      } else {
        pts[iw] = xr;
        fv[iw] = fr;
      }
    } else if (fr < fv[is]) {
      pts[iw] = xr;
      fv[iw] = fr;
    } else {
      std::vector<double> xc(n);
      if (fr < fv[iw]) {
        for (int j = 0; j < n; ++j) xc[j] = cen[j] + 0.5 * (xr[j] - cen[j]);
      } else {
        for (int j = 0; j < n; ++j) xc[j] = cen[j] + 0.5 * (pts[iw][j] - cen[j]);
      }
      xc = clamped(xc);
      const double fc = obj.eval_flat(xc.data());
      if (fc < std::min(fr, fv[iw])) {
        pts[iw] = xc;
        fv[iw] = fc;
      } else {
        for (int i = 0; i <= n; ++i) {
          if (i == ib) continue;
          for (int j = 0; j < n; ++j) pts[i][j] = pts[ib][j] + 0.5 * (pts[i][j] - pts[ib][j]);
          fv[i] = obj.eval_flat(pts[i].data());
        }
      }
    }
  }
  sort_simplex();
  NMOutcome out;
  out.fmin = fv[ord[0]];
  out.x = pts[ord[0]];
  // Convergence is judged on the value spread alone: at chart corners the
  // phases of vanishing amplitudes are flat directions, so the simplex
  // diameter carries no information there.
  out.converged = fv[ord[n]] - fv[ord[0]] <= value_tol;
  (void)param_tol;
  return out;
}

void chart_box(int d, std::vector<double>& lo, std::vector<double>& hi) {
  const int na = d - 1;
  lo.assign(2 * na, 0.0);
  hi.assign(2 * na, 0.0);
  for (int i = 0; i < na; ++i) {
    hi[i] = 0.5 * kPi;
    hi[na + i] = 2.0 * kPi;
  }
}

// Deterministic start list: first the 2^(d-1) angle-box corners nudged 1e-3
// inward (phases near zero), then uniform draws from per-start seed streams.
std::vector<double> start_point(int i, int d, std::uint64_t master_seed) {
  const int na = d - 1;
  std::vector<double> x(2 * na);
  const int corners = 1 << na;
  const double eps = 1e-3;
  if (i < corners) {
    for (int a = 0; a < na; ++a) {
      x[a] = ((i >> a) & 1) ? 0.5 * kPi - eps : eps;
      x[na + a] = eps;
    }
    return x;
  }
  SplitMix64 rng(derive_seed(master_seed, std::uint64_t(i)));
  for (int a = 0; a < na; ++a) x[a] = rng.uniform(0.0, 0.5 * kPi);
  for (int a = 0; a < na; ++a) x[na + a] = rng.uniform(0.0, 2.0 * kPi);
  return x;
}

struct ClusterScratch {
  std::vector<int> member_of;       // candidate index -> cluster id
  std::vector<std::vector<int>> members;  // cluster id -> candidate indices
};

}  // namespace

OptimizationResult minimize_entropy_sum(const ObservableSet& set,
                                        const OptimizerConfig& config) {
  if (config.n_starts < 1) throw DomainError("minimize: n_starts must be >= 1");
  if (config.max_iters < 10) throw DomainError("minimize: max_iters must be >= 10");
  if (!(config.value_tol > 0.0)) throw DomainError("minimize: value_tol must be > 0");
  if (!(config.param_tol > 0.0)) throw DomainError("minimize: param_tol must be > 0");
  if (!(config.cluster_radius > 0.0)) throw DomainError("minimize: cluster_radius must be > 0");
  if (config.threads < 0) throw DomainError("minimize: threads must be >= 0");

  const Objective obj(set);
  const int d = set.dim;
  std::vector<double> lo, hi;
  chart_box(d, lo, hi);

  const int n = config.n_starts;
  std::vector<NMOutcome> slots(n);
  NMOptions nm_opt;
  nm_opt.max_iters = config.max_iters;

  int threads = config.threads > 0 ? config.threads
                                   : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min(threads, n);
  auto run_range = [&](int begin, int end) {
    for (int i = begin; i < end; ++i) {
      auto x0 = start_point(i, d, config.seed);
      slots[i] = nelder_mead(obj, x0, lo, hi, nm_opt, config.value_tol, config.param_tol);
    }
  };
  if (threads <= 1) {
    run_range(0, n);
  } else {
    std::vector<std::future<void>> fut;
    for (int t = 0; t < threads; ++t) {
      const int b = n * t / threads, e = n * (t + 1) / threads;
      fut.push_back(std::async(std::launch::async, run_range, b, e));
    }
    for (auto& f : fut) f.get();
  }

  OptimizationResult res;
  res.config = config;
  res.start_values.resize(n);
  res.start_params.resize(n);
  int best_i = 0;
  int unconverged = 0;
  for (int i = 0; i < n; ++i) {
    res.start_values[i] = slots[i].fmin;
    res.start_params[i] = slots[i].x;
    if (!slots[i].converged) ++unconverged;
    if (slots[i].fmin < slots[best_i].fmin) best_i = i;
  }
  res.convergence_warning = unconverged * 2 > n;

  // Polish the winner with a larger budget, then recompute the value through
  // the plain entropy path so the reported minimum matches entropy_sum exactly.
  NMOptions polish{2 * config.max_iters, 1e-16, 1e-15};
  NMOutcome best = nelder_mead(obj, slots[best_i].x, lo, hi, polish,
                               config.value_tol, config.param_tol);
  if (best.fmin > slots[best_i].fmin) best = slots[best_i];
  res.best_params = params_from_flat(best.x, d);
  res.best_state = canonicalize(state_from_params(res.best_params));
  res.min_value = entropy_sum(res.best_state, set);

  // Cluster the starts that reached the minimal level.
  const double pre_min = slots[best_i].fmin;
  const double capture = std::max(config.value_tol, 1e-12);
  std::vector<int> cand;
  for (int i = 0; i < n; ++i)
    if (slots[i].fmin <= pre_min + capture) cand.push_back(i);

  std::vector<Vec> cstate(cand.size());
  for (std::size_t c = 0; c < cand.size(); ++c)
    cstate[c] = canonicalize(state_from_params_flat(slots[cand[c]].x.data(), d));

  ClusterScratch cl;
  cl.member_of.assign(cand.size(), -1);
  std::vector<Vec> first_member;
  for (std::size_t c = 0; c < cand.size(); ++c) {
    int assigned = -1;
    for (std::size_t k = 0; k < first_member.size(); ++k)
      if (fidelity_distance(cstate[c], first_member[k]) < config.cluster_radius) {
        assigned = int(k);
        break;
      }
    if (assigned < 0) {
      assigned = int(first_member.size());
      first_member.push_back(cstate[c]);
      cl.members.emplace_back();
    }
    cl.member_of[c] = assigned;
    cl.members[assigned].push_back(int(c));
  }

  // Representative per cluster: lowest-value member (ties -> lowest index).
  int best_cluster = -1;
  std::vector<Vec> reps(cl.members.size());
  for (std::size_t k = 0; k < cl.members.size(); ++k) {
    int pick = cl.members[k][0];
    for (int c : cl.members[k])
      if (slots[cand[c]].fmin < slots[cand[pick]].fmin) pick = c;
    reps[k] = cstate[pick];
    if (cand[pick] == best_i) best_cluster = int(k);
  }
  if (best_cluster < 0) {
    // Guard: the winner is always a candidate, so this should not happen.
    best_cluster = 0;
  }
  reps[best_cluster] = res.best_state;

  res.cluster_representatives.push_back(reps[best_cluster]);
  res.cluster_sizes.push_back(int(cl.members[best_cluster].size()));
  for (std::size_t k = 0; k < cl.members.size(); ++k) {
    if (int(k) == best_cluster) continue;
    res.cluster_representatives.push_back(reps[k]);
    res.cluster_sizes.push_back(int(cl.members[k].size()));
  }

  res.restarts_converged_to_best = res.cluster_sizes[0];
  res.best_cluster_fraction = double(res.restarts_converged_to_best) / double(n);
  res.certified = res.best_cluster_fraction >= 0.25;

  double next = 0.0;
  const double distinct = std::max(10.0 * config.value_tol, 1e-8);
  for (int i = 0; i < n; ++i) {
    const double v = slots[i].fmin;
    if (v > res.min_value + distinct && (next == 0.0 || v - res.min_value < next))
      next = v - res.min_value;
  }
  res.gap_to_next = next;
  return res;
}

std::vector<Vec> cluster_minimizers(const OptimizationResult& result, double radius) {
  if (!(radius > 0.0)) throw DomainError("cluster_minimizers: radius must be > 0");
  const int d = result.best_state.size() ? int(result.best_state.size())
                                         : result.best_params.dim();
  double best = result.start_values.empty() ? result.min_value
                                            : *std::min_element(result.start_values.begin(),
                                                                result.start_values.end());
  const double capture = std::max(result.config.value_tol, 1e-12);
  std::vector<Vec> reps;
  std::vector<double> repval;
  for (std::size_t i = 0; i < result.start_values.size(); ++i) {
    if (result.start_values[i] > best + capture) continue;
    Vec s = canonicalize(state_from_params_flat(result.start_params[i].data(), d));
    int assigned = -1;
    for (std::size_t k = 0; k < reps.size(); ++k)
      if (fidelity_distance(s, reps[k]) < radius) {
        assigned = int(k);
        break;
      }
    if (assigned < 0) {
      reps.push_back(s);
      repval.push_back(result.start_values[i]);
    } else if (result.start_values[i] < repval[assigned]) {
      reps[assigned] = s;
      repval[assigned] = result.start_values[i];
    }
  }
  std::vector<int> order(reps.size());
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = int(k);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return repval[a] < repval[b]; });
  std::vector<Vec> out;
  out.reserve(reps.size());
  for (int k : order) out.push_back(reps[k]);
  return out;
}

namespace {

// One exhaustive scan work unit: all angle tuples whose outermost index is in
// the caller's share, full phase grid underneath, partial sums reused across
// the phase recursion.
struct GridScan {
  const Objective* obj = nullptr;
  int d = 0, L = 0, res_a = 0, res_p = 0;
  std::vector<cxd> cis;  // res_p phase factors
  std::vector<double> angle_vals;

  double best = 0.0;
  std::vector<std::pair<double, std::vector<double>>> top;  // for polishing
  std::size_t top_cap = 0;

  double amp[5] = {0};
  double cur_ang[4] = {0};
  int cur_ph[4] = {0};
  cxd part[6][32];  // part[level][b*d+k]

  void consider(double v) {
    if (v < best) best = v;
    if (!top_cap) return;
    if (top.size() == top_cap && v >= top.back().first) return;
    const int na = d - 1;
    std::vector<double> x(2 * na);
    for (int a = 0; a < na; ++a) {
      x[a] = cur_ang[a];
      x[na + a] = 2.0 * kPi * cur_ph[a] / res_p;
    }
    top.emplace_back(v, std::move(x));
    std::sort(top.begin(), top.end(), [](const auto& p, const auto& q) {
      if (p.first != q.first) return p.first < q.first;
      return p.second < q.second;
    });
    if (top.size() > top_cap) top.pop_back();
  }

  void phase_recurse(int j) {
    const int nk = L * d;
    if (j < 0) {
      double h = 0.0;
      for (int m = 0; m < nk; ++m) {
        const double p = std::norm(part[0][m]);
        if (p > 1e-15) h -= p * std::log2(p);
      }
      consider(h);
      return;
    }
    const cxd* a = obj->adj.data();
    for (int t = 0; t < res_p; ++t) {
      cur_ph[j] = t;
      const cxd w = amp[j] * cis[t];
      for (int m = 0; m < nk; ++m) part[j][m] = part[j + 1][m] + w * a[m * d + j];
      phase_recurse(j - 1);
    }
  }

  void angle_recurse(int a, int i0_begin, int i0_end) {
    const int na = d - 1;
    const int from = (a == 0) ? i0_begin : 0;
    const int to = (a == 0) ? i0_end : res_a;
    for (int i = from; i < to; ++i) {
      cur_ang[a] = angle_vals[i];
      if (a + 1 < na) {
        angle_recurse(a + 1, i0_begin, i0_end);
      } else {
        // Amplitude magnitudes for this angle tuple (chart with zero phases).
        double full[8] = {0};
        for (int k = 0; k < na; ++k) full[k] = cur_ang[k];
        cxd psi[5];
        chart_state(full, d, psi);
        for (int j = 0; j < d; ++j) amp[j] = psi[j].real();
        const int nk = L * d;
        for (int m = 0; m < nk; ++m)
          part[d - 1][m] = amp[d - 1] * obj->adj[std::size_t(m) * d + (d - 1)];
        phase_recurse(d - 2);
      }
    }
  }
};

}  // namespace

double grid_oracle(const ObservableSet& set, int resolution) {
  if (resolution < 4) throw DomainError("grid_oracle: resolution must be >= 4");
  const Objective obj(set);
  const int d = set.dim;
  const bool coarse = d == 5;
  // `resolution` counts subintervals: res+1 angle samples spanning [0, pi/2]
  // (both endpoints and the midpoint land on the grid for even res) and res
  // phase samples covering the full turn.
  const int res = coarse ? std::min(resolution, 8) : resolution;
  const int res_a = res + 1;
  const int res_p = res;

  std::vector<double> angle_vals(res_a);
  for (int i = 0; i < res_a; ++i) angle_vals[i] = 0.5 * kPi * i / res;
  std::vector<cxd> cis(res_p);
  for (int t = 0; t < res_p; ++t) {
    const double w = 2.0 * kPi * t / res_p;
    cis[t] = cxd(std::cos(w), std::sin(w));
  }

  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const int threads = int(std::min<unsigned>(hw, unsigned(res_a)));

  auto scan_share = [&](int begin, int end) {
    GridScan g;
    g.obj = &obj;
    g.d = d;
    g.L = set.count();
    g.res_a = res_a;
    g.res_p = res_p;
    g.cis = cis;
    g.angle_vals = angle_vals;
    g.best = std::numeric_limits<double>::infinity();
    g.top_cap = coarse ? 64 : 0;
    g.angle_recurse(0, begin, end);
    return std::make_pair(g.best, std::move(g.top));
  };

  double best = std::numeric_limits<double>::infinity();
  std::vector<std::pair<double, std::vector<double>>> candidates;
  if (threads <= 1) {
    auto [b, t] = scan_share(0, res_a);
    best = b;
    candidates = std::move(t);
  } else {
    std::vector<std::future<std::pair<double, std::vector<std::pair<double, std::vector<double>>>>>> fut;
    for (int t = 0; t < threads; ++t) {
      const int b = res_a * t / threads, e = res_a * (t + 1) / threads;
      fut.push_back(std::async(std::launch::async, scan_share, b, e));
    }
    for (auto& f : fut) {
      auto [b, tc] = f.get();
      best = std::min(best, b);
      for (auto& item : tc) candidates.push_back(std::move(item));
    }
  }

  if (coarse && !candidates.empty()) {
    std::sort(candidates.begin(), candidates.end(), [](const auto& p, const auto& q) {
      if (p.first != q.first) return p.first < q.first;
      return p.second < q.second;
    });
    if (candidates.size() > 64) candidates.resize(64);
    std::vector<double> lo, hi;
    chart_box(d, lo, hi);
    NMOptions polish{4000, 1e-16, 1e-15};
    for (const auto& [v, x] : candidates) {
      NMOutcome o = nelder_mead(obj, x, lo, hi, polish, 1e-10, 1e-9);
      best = std::min(best, o.fmin);
    }
  }
  return best;
}

SaturationCheck verify_saturating_state(const Vec& state, const ObservableSet& set,
                                        double expected, double tol) {
  if (!(tol > 0.0)) throw DomainError("verify_saturating_state: tol must be > 0");
  SaturationCheck chk;
  Vec s = state;
  const double nrm = s.norm();
  if (nrm < 1e-12) throw DomainError("verify_saturating_state: zero state");
  s /= nrm;
  chk.value = entropy_sum(s, set);
  chk.residual = chk.value - expected;
  chk.pass = std::abs(chk.residual) <= tol;
  return chk;
}

Vec random_state(SplitMix64& rng, int dim) {
  if (dim < 2 || dim > 5) throw DomainError("random_state: dimension must be in [2,5]");
  Vec v(dim);
  for (int j = 0; j < dim; ++j) {
    const double re = rng.normal();
    const double im = rng.normal();
    v(j) = cxd(re, im);
  }
  const double nrm = v.norm();
  if (nrm < 1e-12) return random_state(rng, dim);
  return v / nrm;
}

}  // namespace eur
