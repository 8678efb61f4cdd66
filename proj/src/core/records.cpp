#include "core/records.hpp"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "core/common.hpp"

namespace eur::records {

const char* const kSchemaVersion = "1";

double round12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return std::strtod(buf, nullptr);
}

Json num(double v) { return Json(round12(v)); }

Json vec_to_json(const Vec& v) {
  Json arr = Json::array();
  for (int j = 0; j < v.size(); ++j)
    arr.push_back(Json::array({num(v(j).real()), num(v(j).imag())}));
  return arr;
}

Json params_to_json(const StateParams& p) {
  Json angles = Json::array(), phases = Json::array();
  for (double a : p.angles) angles.push_back(num(a));
  for (double f : p.phases) phases.push_back(num(f));
  return Json{{"angles", angles}, {"phases", phases}};
}

Json set_to_json(const ObservableSet& set) {
  Json j;
  j["kind"] = set.kind;
  j["dim"] = set.dim;
  j["descriptor"] = set.descriptor;
  if (set.kind == "spin") j["spin"] = num(set.spin);
  if (set.kind == "mub") j["subset"] = set.subset;
  Json labels = Json::array();
  for (const auto& b : set.bases) labels.push_back(b.label);
  j["observables"] = labels;
  return j;
}

Json result_to_json(const OptimizationResult& r) {
  Json j;
  j["min_value"] = num(r.min_value);
  j["best_params"] = params_to_json(r.best_params);
  j["best_state"] = vec_to_json(r.best_state);
  Json clusters = Json::array();
  for (std::size_t k = 0; k < r.cluster_representatives.size(); ++k)
    clusters.push_back(Json{{"state", vec_to_json(r.cluster_representatives[k])},
                            {"size", r.cluster_sizes[k]}});
  j["clusters"] = clusters;
  j["restarts_converged_to_best"] = r.restarts_converged_to_best;
  j["best_cluster_fraction"] = num(r.best_cluster_fraction);
  j["certified"] = r.certified;
  j["convergence_warning"] = r.convergence_warning;
  j["gap_to_next"] = num(r.gap_to_next);
  Json sv = Json::array();
  for (double v : r.start_values) sv.push_back(num(v));
  j["start_values"] = sv;
  // The thread count is an execution detail and is deliberately left out so
  // records are byte-identical regardless of parallelism.
  j["config"] = Json{{"n_starts", r.config.n_starts},
                     {"max_iters", r.config.max_iters},
                     {"value_tol", num(r.config.value_tol)},
                     {"param_tol", num(r.config.param_tol)},
                     {"seed", r.config.seed},
                     {"cluster_radius", num(r.config.cluster_radius)}};
  return j;
}

Json bound_report_to_json(const BoundReport& rep) {
  Json j;
  j["descriptor"] = rep.descriptor;
  j["kind"] = rep.kind;
  j["dim"] = rep.dim;
  j["count"] = rep.count;
  if (rep.has_certified) {
    j["certified_min"] = num(rep.certified_min);
    j["certified_source"] = rep.certified_source;
  }
  if (rep.has_claimed) j["reference_value"] = num(rep.claimed);
  Json lits = Json::array();
  for (const auto& b : rep.literature) {
    Json e{{"name", b.name},
           {"value", num(b.value)},
           {"applicable", b.applicable},
           {"tight", b.tight}};
    if (!b.note.empty()) e["note"] = b.note;
    lits.push_back(e);
  }
  j["literature"] = lits;
  if (!rep.strongest.empty()) {
    j["strongest"] = rep.strongest;
    j["strongest_value"] = num(rep.strongest_value);
  }
  if (rep.has_certified) j["dominance_ok"] = rep.dominance_ok;
  return j;
}

Json case_results_to_json(const std::vector<CaseResult>& rows) {
  Json arr = Json::array();
  for (const auto& r : rows) {
    arr.push_back(Json{{"name", r.name},
                       {"state_index", r.state_index},
                       {"pass", r.pass},
                       {"value", num(r.value)},
                       {"expected", num(r.expected)},
                       {"residual", num(r.residual)},
                       {"tol", num(r.tol)}});
  }
  return arr;
}

void write_atomic(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open temporary file " + tmp.string());
    out << content;
    out.flush();
    if (!out) throw IoError("failed writing " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw IoError("failed to move record into place at " + path);
  }
}

}  // namespace eur::records
