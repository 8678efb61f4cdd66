#pragma once
// Literature lower bounds on entropy sums, and comparison reports against
// certified minima.
#include <optional>
#include <string>
#include <vector>

#include "core/observables.hpp"

namespace eur {

// Maassen-Uffink pair bound: -2*log2(c), c = largest overlap between the two
// bases. Valid for any pair; c in (0, 1].
double q_mu(double c);

// Coles-Piani refinement of MU. c2 = second-largest distinct overlap
// (c2 = c for flat overlap matrices).
double q_cp(double c, double c2);

// Rudnicki-Puchala-Zyczkowski pair bound.
double q_rpz(double c, double c2);

// Ivanovic bound for a full set of d+1 MUBs in dimension d.
double q_ivanovic(int d);

// Sanchez-Ruiz bound for a full set of d+1 MUBs, even d only.
double q_sanchez(int d);

// Ballester-Wehner bound for L MUBs in dimension d: (L/2)*log2(d).
double q_bw(int d, int L);

// Azarchs bound for L MUBs in dimension d: -L*log2((d+L-1)/(d*L)).
double q_azarchs(int d, int L);

struct LiteratureBound {
  std::string name;    // e.g. "MU", "CP", "RPZ", "BW", "A", "I", "S"
  double value = 0.0;  // bound on the entropy sum for the whole set
  bool applicable = true;  // counted in dominance/strongest checks
  bool tight = false;      // equals the certified minimum (when known)
  std::string note;        // human-readable qualifier
};

struct BoundReport {
  std::string descriptor;  // observable-set description
  std::string kind;        // "spin" or "mub"
  int dim = 0;
  int count = 0;           // number of observables L

  bool has_certified = false;
  double certified_min = 0.0;
  std::string certified_source;  // "analytic", "numerical", ...

  bool has_claimed = false;
  double claimed = 0.0;  // separately tracked reference value, if any

  std::vector<LiteratureBound> literature;
  std::string strongest;      // name of largest applicable literature bound
  double strongest_value = 0.0;
  bool dominance_ok = true;   // all applicable bounds <= certified + 1e-6
};

// Builds the literature-bound table for an observable set and, when a
// certified minimum is supplied, checks that every applicable bound is
// dominated by it.
BoundReport compare_bounds(const ObservableSet& set,
                           std::optional<double> certified = std::nullopt,
                           const std::string& certified_source = "",
                           std::optional<double> claimed = std::nullopt);

}  // namespace eur
