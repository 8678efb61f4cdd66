#include "eur.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "core/bounds.hpp"
#include "core/common.hpp"
#include "core/entropy.hpp"
#include "core/observables.hpp"
#include "core/optimizer.hpp"
#include "core/qutrit.hpp"
#include "core/records.hpp"
#include "core/registry.hpp"
#include "core/state.hpp"

struct eur_observable_set {
  eur::ObservableSet impl;
};

struct eur_result {
  eur::OptimizationResult impl;
};

namespace {

thread_local std::string g_last_error;

void set_error(const std::string& msg) { g_last_error = msg; }

char* dup_string(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (p) std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

// Runs fn, translating exceptions into status codes.
template <typename Fn>
eur_status guarded(Fn&& fn) {
  try {
    fn();
    return EUR_OK;
  } catch (const eur::DomainError& e) {
    set_error(e.what());
    return EUR_ERR_INVALID;
  } catch (const eur::ValidationError& e) {
    set_error(e.what());
    return EUR_ERR_VALIDATION;
  } catch (const eur::NumericError& e) {
    set_error(e.what());
    return EUR_ERR_NUMERIC;
  } catch (const eur::IoError& e) {
    set_error(e.what());
    return EUR_ERR_IO;
  } catch (const std::exception& e) {
    set_error(e.what());
    return EUR_ERR_INTERNAL;
  } catch (...) {
    set_error("unknown failure");
    return EUR_ERR_INTERNAL;
  }
}

eur::OptimizerConfig to_config(const eur_opt_config* cfg) {
  eur::OptimizerConfig c;
  if (cfg) {
    c.n_starts = cfg->n_starts;
    c.max_iters = cfg->max_iters;
    c.value_tol = cfg->value_tol;
    c.param_tol = cfg->param_tol;
    c.seed = cfg->seed;
    c.cluster_radius = cfg->cluster_radius;
    c.threads = cfg->threads;
  }
  return c;
}

}  // namespace

extern "C" {

const char* eur_schema_version(void) { return eur::records::kSchemaVersion; }

const char* eur_last_error(void) { return g_last_error.c_str(); }

void eur_string_free(char* s) { std::free(s); }

void eur_opt_config_default(eur_opt_config* cfg) {
  if (!cfg) return;
  eur::OptimizerConfig d;
  cfg->n_starts = d.n_starts;
  cfg->max_iters = d.max_iters;
  cfg->value_tol = d.value_tol;
  cfg->param_tol = d.param_tol;
  cfg->seed = d.seed;
  cfg->cluster_radius = d.cluster_radius;
  cfg->threads = d.threads;
}

eur_status eur_spin_set_create(double spin, const char* axes, eur_observable_set** out) {
  if (!out || !axes) {
    set_error("null argument");
    return EUR_ERR_INVALID;
  }
  *out = nullptr;
  return guarded([&] {
    auto* h = new eur_observable_set{eur::make_spin_set(spin, axes)};
    *out = h;
  });
}

eur_status eur_mub_set_create(int dim, int count, const int* subset, size_t subset_len,
                              eur_observable_set** out) {
  if (!out) {
    set_error("null argument");
    return EUR_ERR_INVALID;
  }
  *out = nullptr;
  return guarded([&] {
    std::vector<int> sel;
    for (size_t i = 0; i < subset_len; ++i) {
      if (!subset) throw eur::DomainError("subset pointer is null but subset_len > 0");
      sel.push_back(subset[i]);
    }
    auto* h = new eur_observable_set{eur::make_mub_set(dim, count, sel)};
    *out = h;
  });
}

void eur_set_free(eur_observable_set* set) { delete set; }

int eur_set_dim(const eur_observable_set* set) { return set ? set->impl.dim : 0; }

int eur_set_size(const eur_observable_set* set) { return set ? set->impl.count() : 0; }

eur_status eur_set_info_json(const eur_observable_set* set, char** json_out) {
  if (!set || !json_out) {
    set_error("null argument");
    return EUR_ERR_INVALID;
  }
  return guarded([&] { *json_out = dup_string(eur::records::set_to_json(set->impl).dump()); });
}

eur_status eur_minimize(const eur_observable_set* set, const eur_opt_config* cfg,
                        eur_result** out) {
  if (!set || !out) {
    set_error("null argument");
    return EUR_ERR_INVALID;
  }
  *out = nullptr;
  return guarded([&] {
    auto* h = new eur_result{eur::minimize_entropy_sum(set->impl, to_config(cfg))};
    *out = h;
  });
}

double eur_result_min(const eur_result* r) { return r ? r->impl.min_value : 0.0; }

int eur_result_warning(const eur_result* r) {
  return r && r->impl.convergence_warning ? 1 : 0;
}

int eur_result_certified(const eur_result* r) { return r && r->impl.certified ? 1 : 0; }

eur_status eur_result_json(const eur_result* r, char** json_out) {
  if (!r || !json_out) {
    set_error("null argument");
    return EUR_ERR_INVALID;
  }
  return guarded(
      [&] { *json_out = dup_string(eur::records::result_to_json(r->impl).dump()); });
}

void eur_result_free(eur_result* r) { delete r; }

eur_status eur_result_clusters_json(const eur_result* r, double radius, char** json_out) {
  if (!r || !json_out) {
    set_error("null argument");
    return EUR_ERR_INVALID;
  }
  return guarded([&] {
    auto reps = eur::cluster_minimizers(r->impl, radius);
    auto arr = eur::records::Json::array();
    for (const auto& s : reps) arr.push_back(eur::records::vec_to_json(s));
    *json_out = dup_string(arr.dump());
  });
}

eur_status eur_grid_oracle(const eur_observable_set* set, int resolution, double* min_out) {
  if (!set || !min_out) {
    set_error("null argument");
    return EUR_ERR_INVALID;
  }
  return guarded([&] { *min_out = eur::grid_oracle(set->impl, resolution); });
}

eur_status eur_bounds_json(const eur_observable_set* set, const eur_opt_config* cfg,
                           char** json_out) {
  if (!set || !json_out) {
    set_error("null argument");
    return EUR_ERR_INVALID;
  }
  return guarded([&] {
    std::optional<double> certified;
    std::string source;
    std::optional<double> claimed;
    std::string case_name;
    std::string case_note;
    if (auto hit = eur::certified_lookup(set->impl)) {
      certified = hit->value;
      source = hit->source;
      if (hit->has_claimed) claimed = hit->claimed;
      case_name = hit->name;
      case_note = hit->note;
    } else if (cfg && set->impl.count() >= 2) {
      auto res = eur::minimize_entropy_sum(set->impl, to_config(cfg));
      certified = res.min_value;
      source = res.certified ? "numerical" : "numerical (low confidence)";
    }
    auto rep = eur::compare_bounds(set->impl, certified, source, claimed);
    auto j = eur::records::bound_report_to_json(rep);
    if (!case_name.empty()) j["case"] = case_name;
    if (!case_note.empty()) j["note"] = case_note;
    *json_out = dup_string(j.dump());
  });
}

eur_status eur_entropy_sum_state(const eur_observable_set* set, const double* re,
                                 const double* im, int dim, double* out) {
  if (!set || !re || !im || !out) {
    set_error("null argument");
    return EUR_ERR_INVALID;
  }
  return guarded([&] {
    if (dim != set->impl.dim)
      throw eur::DomainError("state dimension does not match the observable set");
    eur::Vec v(dim);
    for (int j = 0; j < dim; ++j) v(j) = eur::cxd(re[j], im[j]);
    const double nrm = v.norm();
    if (nrm < 1e-12) throw eur::DomainError("state has zero norm");
    *out = eur::entropy_sum(v / nrm, set->impl);
  });
}

eur_status eur_verify_state(const eur_observable_set* set, const double* angles,
                            const double* phases, int n_each, double expected, double tol,
                            int* pass_out, double* value_out, double* residual_out) {
  if (!set || !angles || !phases) {
    set_error("null argument");
    return EUR_ERR_INVALID;
  }
  return guarded([&] {
    if (n_each != set->impl.dim - 1)
      throw eur::DomainError("need dim-1 angles and dim-1 phases");
    eur::StateParams p;
    p.angles.assign(angles, angles + n_each);
    p.phases.assign(phases, phases + n_each);
    eur::Vec s = eur::state_from_params(p);
    auto chk = eur::verify_saturating_state(s, set->impl, expected, tol);
    if (pass_out) *pass_out = chk.pass ? 1 : 0;
    if (value_out) *value_out = chk.value;
    if (residual_out) *residual_out = chk.residual;
  });
}

eur_status eur_verify_cases(const char* name, char** json_out, int* n_failed) {
  return guarded([&] {
    auto rows = eur::verify_cases(name ? std::string(name) : std::string());
    int failed = 0;
    for (const auto& r : rows)
      if (!r.pass) ++failed;
    if (n_failed) *n_failed = failed;
    if (json_out) *json_out = dup_string(eur::records::case_results_to_json(rows).dump());
  });
}

eur_status eur_gamma(double omega_x, double omega_y, double* out) {
  if (!out) {
    set_error("null argument");
    return EUR_ERR_INVALID;
  }
  return guarded([&] { *out = eur::gamma_bound(omega_x, omega_y); });
}

eur_status eur_gamma_surface_csv(int resolution, char** csv_out) {
  if (!csv_out) {
    set_error("null argument");
    return EUR_ERR_INVALID;
  }
  return guarded([&] { *csv_out = dup_string(eur::gamma_surface_csv(resolution)); });
}

eur_status eur_catalog_json(int dim, char** json_out) {
  if (!json_out) {
    set_error("null argument");
    return EUR_ERR_INVALID;
  }
  return guarded([&] {
    auto bases = eur::mub_catalog(dim);
    auto notes = eur::mub_catalog_annotations(dim);
    double dev = eur::verify_mub(bases);
    eur::records::Json j;
    j["dim"] = dim;
    j["count"] = static_cast<int>(bases.size());
    auto arr = eur::records::Json::array();
    for (const auto& B : bases) {
      auto rows = eur::records::Json::array();
      for (int r = 0; r < B.rows(); ++r) {
        auto row = eur::records::Json::array();
        for (int c = 0; c < B.cols(); ++c)
          row.push_back(eur::records::Json::array(
              {eur::records::num(B(r, c).real()), eur::records::num(B(r, c).imag())}));
        rows.push_back(row);
      }
      arr.push_back(rows);
    }
    j["bases"] = arr;
    j["annotations"] = notes;
    j["max_unbiasedness_deviation"] = eur::records::num(dev);
    *json_out = dup_string(j.dump());
  });
}

}  // extern "C"
