#include "core/entropy.hpp"

#include <cmath>

namespace eur {

OutcomeDistribution outcome_distribution(const Vec& state, const ObservableBasis& basis) {
  if (state.size() != basis.U.rows())
    throw DomainError("state dimension does not match basis dimension");
  OutcomeDistribution dist;
  const int d = static_cast<int>(state.size());
  dist.probs.resize(d);
  double sum = 0.0;
  for (int k = 0; k < d; ++k) {
    double p = std::norm(basis.U.col(k).dot(state));
    dist.probs[k] = p;
    sum += p;
  }
  if (std::abs(sum - 1.0) > 1e-12)
    throw NumericError("outcome probabilities sum to " + std::to_string(sum) +
                       "; state must be normalized");
  return dist;
}

double shannon_entropy(const OutcomeDistribution& dist) {
  double h = 0.0;
  for (double p : dist.probs) {
    if (p < -1e-12 || p > 1.0 + 1e-12)
      throw DomainError("probability outside [0,1]");
    if (p > 1e-15) h -= p * std::log2(p);
  }
  return h;
}

EntropyProfile entropy_profile(const Vec& state, const ObservableSet& set) {
  EntropyProfile prof;
  for (const auto& b : set.bases) {
    double h = shannon_entropy(outcome_distribution(state, b));
    prof.per_observable.emplace_back(b.label, h);
    prof.total += h;
  }
  return prof;
}

double entropy_sum(const Vec& state, const ObservableSet& set) {
  return entropy_profile(state, set).total;
}

}  // namespace eur
