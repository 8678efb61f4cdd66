// Command-line front end. Talks to the library exclusively through the C API
// in eur.h; JSON assembly and argument parsing are local concerns.
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "eur.h"

namespace {

using Json = nlohmann::ordered_json;

constexpr double kPi = 3.14159265358979323846;

// Exit codes: 0 success, 1 verification failure, 2 usage error, 3 I/O or
// internal failure.
enum ExitCode { kOk = 0, kVerifyFailed = 1, kUsage = 2, kFailure = 3 };

int status_exit(eur_status st) {
  switch (st) {
    case EUR_OK:
      return kOk;
    case EUR_ERR_INVALID:
    case EUR_ERR_VALIDATION:
      return kUsage;
    case EUR_ERR_IO:
      return kFailure;
    default:
      return kFailure;
  }
}

[[noreturn]] void fail(eur_status st) {
  std::cerr << "error: " << eur_last_error() << "\n";
  std::exit(status_exit(st));
}

std::string take_string(char* s) {
  std::string out = s ? s : "";
  eur_string_free(s);
  return out;
}

std::string env_or(const char* name, const std::string& fallback) {
  const char* v = std::getenv(name);
  return v ? std::string(v) : fallback;
}

std::string utc_now() {
  std::time_t t = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

// Command echo for records; the thread count is an execution detail that must
// not change record bytes, so it is omitted.
std::string command_echo(int argc, char** argv) {
  std::string out;
  for (int i = 0; i < argc; ++i) {
    std::string tok = argv[i];
    if (tok == "--threads" || tok == "-t") {
      ++i;  // skip its value too
      continue;
    }
    if (tok.rfind("--threads=", 0) == 0) continue;
    if (!out.empty()) out += ' ';
    out += tok;
  }
  return out;
}

void write_atomic_file(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  fs::path tmp = fs::path(path);
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) {
      std::cerr << "error: cannot open " << tmp.string() << " for writing\n";
      std::exit(kFailure);
    }
    out << content;
    out.flush();
    if (!out) {
      std::cerr << "error: failed writing " << tmp.string() << "\n";
      std::exit(kFailure);
    }
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    std::cerr << "error: cannot move record into place at " << path << "\n";
    std::exit(kFailure);
  }
}

struct SetSpec {
  std::string spin;          // "1", "3/2", "1.5", "2"
  std::string observables = "x,y,z";
  int dim = 0;
  int mubs = 0;
  std::vector<int> subset;

  bool spin_mode() const { return !spin.empty(); }

  void add_options(CLI::App* cmd) {
    cmd->add_option("--spin", spin, "spin quantum number: 1, 3/2 or 2");
    cmd->add_option("--observables", observables,
                    "spin axes, a subset of x,y,z (default x,y,z)");
    cmd->add_option("--dim", dim, "Hilbert-space dimension 2..5 (MUB mode)");
    cmd->add_option("--mubs", mubs, "number of bases from the MUB catalog");
    cmd->add_option("--subset", subset, "explicit 1-based MUB catalog indices")
        ->delimiter(',');
  }

  double spin_value() const {
    if (spin == "1") return 1.0;
    if (spin == "3/2" || spin == "1.5") return 1.5;
    if (spin == "2") return 2.0;
    std::cerr << "error: unsupported spin '" << spin << "' (use 1, 3/2 or 2)\n";
    std::exit(kUsage);
  }

  eur_observable_set* build() const {
    if (spin_mode() == (dim != 0)) {
      std::cerr << "error: specify exactly one of --spin or --dim\n";
      std::exit(kUsage);
    }
    eur_observable_set* set = nullptr;
    eur_status st;
    if (spin_mode()) {
      if (mubs != 0 || !subset.empty()) {
        std::cerr << "error: --mubs/--subset require --dim\n";
        std::exit(kUsage);
      }
      st = eur_spin_set_create(spin_value(), observables.c_str(), &set);
    } else {
      if (mubs == 0 && subset.empty()) {
        std::cerr << "error: --dim requires --mubs or --subset\n";
        std::exit(kUsage);
      }
      st = eur_mub_set_create(dim, mubs, subset.empty() ? nullptr : subset.data(),
                              subset.size(), &set);
    }
    if (st != EUR_OK) fail(st);
    return set;
  }
};

struct RunSettings {
  eur_opt_config cfg{};
  std::string record_path;
  std::string timestamp;

  void add_options(CLI::App* cmd, bool optimizer_knobs) {
    cmd->add_option("--record", record_path, "write the run record to this path");
    cmd->add_option("--timestamp", timestamp,
                    "fixed timestamp for the record (default: now, or EUR_TIMESTAMP)");
    if (optimizer_knobs) {
      cmd->add_option("--starts", cfg.n_starts, "number of multistart restarts");
      cmd->add_option("--iters", cfg.max_iters, "simplex iterations per start");
      cmd->add_option("--seed", cfg.seed, "master seed (default EUR_SEED or 12345)");
      cmd->add_option("--threads", cfg.threads,
                      "worker threads (0 = hardware; default EUR_THREADS)");
      cmd->add_option("--radius", cfg.cluster_radius, "minimizer cluster radius");
    }
  }

  void finalize(CLI::App* cmd) {
    if (timestamp.empty()) timestamp = env_or("EUR_TIMESTAMP", utc_now());
    const auto* seed_opt = cmd->get_option_no_throw("--seed");
    if (!seed_opt || !seed_opt->count()) {
      const std::string s = env_or("EUR_SEED", "");
      if (!s.empty()) cfg.seed = std::strtoull(s.c_str(), nullptr, 10);
    }
    const auto* thr_opt = cmd->get_option_no_throw("--threads");
    if (!thr_opt || !thr_opt->count()) {
      const std::string s = env_or("EUR_THREADS", "");
      if (!s.empty()) cfg.threads = std::atoi(s.c_str());
    }
  }
};

Json record_header(const std::string& command, const std::string& timestamp,
                   const std::string& kind) {
  Json j;
  j["record_version"] = eur_schema_version();
  j["kind"] = kind;
  j["command"] = command;
  j["timestamp"] = timestamp;
  return j;
}

void emit_record(const Json& record, const std::string& record_path) {
  const std::string text = record.dump(2) + "\n";
  std::cout << text;
  if (!record_path.empty()) write_atomic_file(record_path, text);
}

Json set_info(eur_observable_set* set) {
  char* s = nullptr;
  eur_status st = eur_set_info_json(set, &s);
  if (st != EUR_OK) fail(st);
  return Json::parse(take_string(s));
}

Json config_json(const eur_opt_config& cfg) {
  // threads deliberately omitted: records must not depend on parallelism.
  return Json{{"n_starts", cfg.n_starts},
              {"max_iters", cfg.max_iters},
              {"value_tol", cfg.value_tol},
              {"param_tol", cfg.param_tol},
              {"seed", cfg.seed},
              {"cluster_radius", cfg.cluster_radius}};
}

int cmd_minimize(const std::string& command, SetSpec& spec, RunSettings& run) {
  eur_observable_set* set = spec.build();
  eur_result* res = nullptr;
  eur_status st = eur_minimize(set, &run.cfg, &res);
  if (st != EUR_OK) {
    eur_set_free(set);
    fail(st);
  }
  char* rj = nullptr;
  st = eur_result_json(res, &rj);
  if (st != EUR_OK) fail(st);

  Json record = record_header(command, run.timestamp, "minimize");
  record["set"] = set_info(set);
  record["config"] = config_json(run.cfg);
  record["result"] = Json::parse(take_string(rj));

  emit_record(record, run.record_path);
  const int warn = eur_result_warning(res);
  if (warn) std::cerr << "warning: more than half of the restarts did not converge\n";
  eur_result_free(res);
  eur_set_free(set);
  return kOk;
}

int cmd_bounds(const std::string& command, SetSpec& spec, RunSettings& run, bool certify) {
  eur_observable_set* set = spec.build();
  char* bj = nullptr;
  eur_status st = eur_bounds_json(set, certify ? &run.cfg : nullptr, &bj);
  if (st != EUR_OK) {
    eur_set_free(set);
    fail(st);
  }
  Json record = record_header(command, run.timestamp, "bounds");
  record["set"] = set_info(set);
  if (certify) record["config"] = config_json(run.cfg);
  record["report"] = Json::parse(take_string(bj));
  emit_record(record, run.record_path);
  eur_set_free(set);
  return kOk;
}

int cmd_surface(const std::string& command, RunSettings& run, int resolution,
                const std::string& out_path) {
  char* csv = nullptr;
  eur_status st = eur_gamma_surface_csv(resolution, &csv);
  if (st != EUR_OK) fail(st);
  const std::string text = take_string(csv);

  // Row count and minimum of the gamma column for the record.
  std::size_t rows = 0;
  double min_gamma = 0.0;
  bool first = true;
  std::size_t pos = text.find('\n');  // skip header
  while (pos != std::string::npos && pos + 1 < text.size()) {
    std::size_t next = text.find('\n', pos + 1);
    const std::string line = text.substr(pos + 1, next - pos - 1);
    if (!line.empty()) {
      ++rows;
      const std::size_t comma = line.rfind(',');
      const double g = std::strtod(line.c_str() + comma + 1, nullptr);
      if (first || g < min_gamma) min_gamma = g;
      first = false;
    }
    pos = next;
  }

  if (out_path.empty()) {
    std::cout << text;
  } else {
    write_atomic_file(out_path, text);
  }

  Json record = record_header(command, run.timestamp, "surface");
  record["result"] =
      Json{{"resolution", resolution}, {"rows", rows}, {"min_gamma", min_gamma}};
  if (!out_path.empty()) {
    record["result"]["csv_path"] = out_path;
    emit_record(record, run.record_path);
  } else if (!run.record_path.empty()) {
    write_atomic_file(run.record_path, record.dump(2) + "\n");
  }
  return kOk;
}

int cmd_verify(const std::string& command, RunSettings& run, const std::string& case_name,
               SetSpec& spec, std::vector<double>& angles, std::vector<double>& phases,
               bool degrees, std::optional<double> expected, double tol, CLI::App* cmd) {
  const bool custom = cmd->count("--angles") > 0;
  Json rows = Json::array();
  int failed = 0;

  if (custom) {
    if (!expected) {
      std::cerr << "error: --expected is required with --angles\n";
      return kUsage;
    }
    if (degrees) {
      for (double& a : angles) a *= kPi / 180.0;
      for (double& p : phases) p *= kPi / 180.0;
    }
    if (phases.empty()) phases.assign(angles.size(), 0.0);
    eur_observable_set* set = spec.build();
    int pass = 0;
    double value = 0.0, residual = 0.0;
    eur_status st = eur_verify_state(set, angles.data(), phases.data(),
                                     static_cast<int>(angles.size()), *expected, tol,
                                     &pass, &value, &residual);
    if (st != EUR_OK) {
      eur_set_free(set);
      fail(st);
    }
    rows.push_back(Json{{"name", "custom-state"},
                        {"state_index", 0},
                        {"pass", pass != 0},
                        {"value", value},
                        {"expected", *expected},
                        {"residual", residual},
                        {"tol", tol}});
    if (!pass) ++failed;
    eur_set_free(set);
  } else {
    char* vj = nullptr;
    eur_status st = eur_verify_cases(case_name.empty() ? nullptr : case_name.c_str(), &vj,
                                     &failed);
    if (st != EUR_OK) fail(st);
    rows = Json::parse(take_string(vj));
  }

  for (const auto& r : rows) {
    std::printf("[%s] %s[%d] value=%.12g expected=%.12g residual=%.3g tol=%.3g\n",
                r["pass"].get<bool>() ? "PASS" : "FAIL",
                r["name"].get<std::string>().c_str(), r["state_index"].get<int>(),
                r["value"].get<double>(), r["expected"].get<double>(),
                r["residual"].get<double>(), r["tol"].get<double>());
  }

  if (!run.record_path.empty()) {
    Json record = record_header(command, run.timestamp, "verify");
    record["result"] = Json{{"cases", rows}, {"failed", failed}};
    write_atomic_file(run.record_path, record.dump(2) + "\n");
  }
  return failed == 0 ? kOk : kVerifyFailed;
}

int cmd_catalog(const std::string& command, RunSettings& run, int dim) {
  char* cj = nullptr;
  eur_status st = eur_catalog_json(dim, &cj);
  if (st != EUR_OK) fail(st);
  Json record = record_header(command, run.timestamp, "catalog");
  record["catalog"] = Json::parse(take_string(cj));
  emit_record(record, run.record_path);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Entropic uncertainty bounds for spin and MUB observables"};
  app.require_subcommand(1);

  const std::string command = command_echo(argc, argv);

  // minimize
  auto* mz = app.add_subcommand("minimize", "minimize the entropy sum over pure states");
  SetSpec mz_spec;
  RunSettings mz_run;
  eur_opt_config_default(&mz_run.cfg);
  mz_spec.add_options(mz);
  mz_run.add_options(mz, true);

  // bounds
  auto* bd = app.add_subcommand("bounds", "literature bounds and dominance report");
  SetSpec bd_spec;
  RunSettings bd_run;
  eur_opt_config_default(&bd_run.cfg);
  bool bd_certify = false;
  bd_spec.add_options(bd);
  bd_run.add_options(bd, true);
  bd->add_flag("--certify", bd_certify,
               "run a fresh minimization when the set is not in the registry");

  // surface
  auto* sf = app.add_subcommand("surface", "qutrit lower-bound surface as CSV");
  RunSettings sf_run;
  eur_opt_config_default(&sf_run.cfg);
  int sf_res = 50;
  std::string sf_out;
  sf->add_option("--resolution", sf_res, "points per simplex edge (>= 2)");
  sf->add_option("--out", sf_out, "CSV output path (default: stdout)");
  sf_run.add_options(sf, false);

  // verify
  auto* vf = app.add_subcommand("verify", "check saturating states against expected values");
  SetSpec vf_spec;
  RunSettings vf_run;
  eur_opt_config_default(&vf_run.cfg);
  std::string vf_case;
  std::vector<double> vf_angles, vf_phases;
  bool vf_degrees = false;
  double vf_expected = 0.0;
  double vf_tol = 1e-6;
  vf->add_option("--case", vf_case, "registry case name (default: all cases)");
  vf_spec.add_options(vf);
  vf->add_option("--angles", vf_angles, "chart angles of a custom state")->delimiter(',');
  vf->add_option("--phases", vf_phases, "chart phases of a custom state")->delimiter(',');
  vf->add_flag("--degrees", vf_degrees, "interpret --angles/--phases in degrees");
  auto* vf_exp_opt = vf->add_option("--expected", vf_expected, "expected entropy sum");
  vf->add_option("--tol", vf_tol, "tolerance for the custom state (default 1e-6)");
  vf_run.add_options(vf, false);

  // catalog
  auto* cat = app.add_subcommand("catalog", "MUB catalog for a dimension");
  RunSettings cat_run;
  eur_opt_config_default(&cat_run.cfg);
  int cat_dim = 0;
  cat->add_option("--dim", cat_dim, "dimension 2..5")->required();
  cat_run.add_options(cat, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  if (mz->parsed()) {
    mz_run.finalize(mz);
    return cmd_minimize(command, mz_spec, mz_run);
  }
  if (bd->parsed()) {
    bd_run.finalize(bd);
    return cmd_bounds(command, bd_spec, bd_run, bd_certify);
  }
  if (sf->parsed()) {
    sf_run.finalize(sf);
    return cmd_surface(command, sf_run, sf_res, sf_out);
  }
  if (vf->parsed()) {
    vf_run.finalize(vf);
    std::optional<double> expected;
    if (vf_exp_opt->count()) expected = vf_expected;
    return cmd_verify(command, vf_run, vf_case, vf_spec, vf_angles, vf_phases, vf_degrees,
                      expected, vf_tol, vf);
  }
  if (cat->parsed()) {
    cat_run.finalize(cat);
    return cmd_catalog(command, cat_run, cat_dim);
  }
  return kUsage;
}
