#pragma once
// Minimization of entropy sums over pure states: multi-start Nelder-Mead in
// the hyperspherical chart, deterministic clustering of minimizers, and an
// exhaustive grid oracle for cross-checking.
#include <cstdint>
#include <vector>

#include "core/observables.hpp"
#include "core/rng.hpp"
#include "core/state.hpp"

namespace eur {

struct OptimizerConfig {
  int n_starts = 256;
  int max_iters = 2000;        // Nelder-Mead iterations per start
  double value_tol = 1e-10;    // convergence tolerance on the objective
  double param_tol = 1e-9;     // convergence tolerance on parameters
  std::uint64_t seed = 12345;  // master seed; start i derives its own stream
  double cluster_radius = 1e-4;  // fidelity-metric radius for clustering
  int threads = 0;               // 0 = use hardware concurrency
};

struct OptimizationResult {
  double min_value = 0.0;
  StateParams best_params;
  Vec best_state;  // canonical representative of the global minimizer

  // Distinct minimizers among starts that reached the minimal value, one
  // canonical state per cluster; the cluster containing the global best
  // comes first. cluster_sizes is aligned with cluster_representatives.
  std::vector<Vec> cluster_representatives;
  std::vector<int> cluster_sizes;

  std::vector<double> start_values;  // final objective value of each start
  int restarts_converged_to_best = 0;
  double best_cluster_fraction = 0.0;
  bool certified = false;            // >= 25% of starts reached best cluster
  bool convergence_warning = false;  // > 50% of starts failed to converge
  double gap_to_next = 0.0;  // distance from min to next distinct local value

  OptimizerConfig config;  // echo of the configuration used

  // Final chart parameters per start (diagnostics; same order as
  // start_values).
  std::vector<std::vector<double>> start_params;
};

// Minimizes the Shannon entropy sum of `set` over pure states.
OptimizationResult minimize_entropy_sum(const ObservableSet& set,
                                        const OptimizerConfig& config = {});

// Re-clusters the per-start minimizers of an existing result with a different
// fidelity radius. Returns canonical representatives (best cluster first).
std::vector<Vec> cluster_minimizers(const OptimizationResult& result, double radius);

// Exhaustive scan of the chart with `resolution` subintervals per axis:
// resolution+1 angle samples spanning [0, pi/2] and resolution phase samples
// covering the full turn. Dimensions 2-4 are scanned exhaustively; dimension 5
// caps the scan at 8 subintervals per axis and polishes the best 64 grid
// points with Nelder-Mead. Throws DomainError for resolution < 4.
double grid_oracle(const ObservableSet& set, int resolution);

struct SaturationCheck {
  bool pass = false;
  double value = 0.0;     // entropy sum of the candidate state
  double residual = 0.0;  // value - expected
};

// Checks that `state` attains `expected` within `tol`.
SaturationCheck verify_saturating_state(const Vec& state, const ObservableSet& set,
                                        double expected, double tol);

// Haar-ish random pure state (normalized complex Gaussian vector).
Vec random_state(SplitMix64& rng, int dim);

}  // namespace eur
