#pragma once

#include <string>
#include <utility>
#include <vector>

#include "core/common.hpp"
#include "core/observables.hpp"

namespace eur {

struct OutcomeDistribution {
  std::vector<double> probs;
};

struct EntropyProfile {
  std::vector<std::pair<std::string, double>> per_observable;  // (label, bits)
  double total = 0.0;
};

// |<b_k|psi>|^2 for each basis column. The input must already be normalized:
// a probability sum off 1 by more than 1e-12 raises NumericError rather than
// being silently renormalized.
OutcomeDistribution outcome_distribution(const Vec& state, const ObservableBasis& basis);

// Base-2 Shannon entropy with 0*log(0) = 0 (probabilities below 1e-15 are
// treated as exact zeros).
double shannon_entropy(const OutcomeDistribution& dist);

EntropyProfile entropy_profile(const Vec& state, const ObservableSet& set);
double entropy_sum(const Vec& state, const ObservableSet& set);

}  // namespace eur
