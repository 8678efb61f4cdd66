// Acceptance gate: one line per criterion, nonzero exit if any fails.
// Heavy grid-oracle sweeps make this the slow target; expect minutes, not
// seconds, on a single core.
#include <sys/wait.h>

#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "core/bounds.hpp"
#include "core/entropy.hpp"
#include "core/observables.hpp"
#include "core/optimizer.hpp"
#include "core/qutrit.hpp"
#include "core/registry.hpp"
#include "core/rng.hpp"

using namespace eur;

namespace {

int g_failures = 0;

void report(int id, bool pass, const std::string& text) {
  std::printf("[%s] %02d %s\n", pass ? "PASS" : "FAIL", id, text.c_str());
  std::fflush(stdout);
  if (!pass) ++g_failures;
}

std::string fmt(const char* f, ...) {
  char buf[512];
  va_list ap;
  va_start(ap, f);
  std::vsnprintf(buf, sizeof buf, f, ap);
  va_end(ap);
  return buf;
}

double minimize_default(const ObservableSet& set) {
  return minimize_entropy_sum(set).min_value;
}

// Truncation (not rounding) to two decimals, used for values quoted that way.
double trunc2(double v) { return std::floor(v * 100.0) / 100.0; }

const CertifiedCase* find_case(const std::string& name) {
  for (const auto& c : certified_cases())
    if (c.name == name) return &c;
  return nullptr;
}

bool registry_case_passes(const std::string& name, double* worst_residual = nullptr) {
  bool ok = true;
  double worst = 0.0;
  for (const auto& row : verify_cases(name)) {
    ok = ok && row.pass;
    if (std::abs(row.residual) > std::abs(worst)) worst = row.residual;
  }
  if (worst_residual) *worst_residual = worst;
  return ok;
}

std::string run_cli(const std::string& args, int* exit_code) {
  std::string cmd = std::string(EUR_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) {
    *exit_code = -1;
    return "";
  }
  std::string out;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  int rc = pclose(pipe);
  *exit_code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  return out;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main() {
  const double kExact = 1e-6;   // tolerance for analytically exact constants
  const double kTwoDp = 0.005;  // tolerance for two-decimal constants

  // 1. spin-1 triple -> 2.
  {
    double v = minimize_default(make_spin_set("1", "x,y,z"));
    report(1, std::abs(v - 2.0) <= kExact, fmt("spin-1 {S_x,S_y,S_z} minimum %.10f (target 2, tol 1e-6)", v));
  }

  // 2. spin-1 pairs -> 1.
  {
    double worst = 0.0;
    for (const char* axes : {"x,y", "x,z", "y,z"}) {
      double v = minimize_default(make_spin_set("1", axes));
      worst = std::max(worst, std::abs(v - 1.0));
    }
    report(2, worst <= kExact, fmt("spin-1 pairs minimum 1 on all three pairs (worst |err| %.2e, tol 1e-6)", worst));
  }

  // 3. spin-3/2 pairs -> 1.71.
  {
    double worst_print = 0.0, worst_frozen = 0.0;
    for (const char* axes : {"x,y", "x,z", "y,z"}) {
      double v = minimize_default(make_spin_set("3/2", axes));
      worst_print = std::max(worst_print, std::abs(v - 1.71));
      worst_frozen = std::max(worst_frozen, std::abs(v - 1.7091578053305));
    }
    report(3, worst_print <= kTwoDp && worst_frozen <= kExact,
           fmt("spin-3/2 pairs minimum 1.7091578 (|err vs 1.71| %.2e <= 0.005 on all pairs)", worst_print));
  }

  // 4. spin-3/2 triple -> 6 - (3/2) log2(3) ~= 3.6226.
  {
    double target = 6.0 - 1.5 * std::log2(3.0);
    double v = minimize_default(make_spin_set("3/2", "x,y,z"));
    report(4, std::abs(v - target) <= kExact,
           fmt("spin-3/2 triple minimum %.10f (target 6 - 1.5*log2(3) = %.10f, tol 1e-6)", v, target));
  }

  // 5. spin-2 pairs -> 1.56.
  {
    double worst_print = 0.0, worst_frozen = 0.0;
    for (const char* axes : {"x,y", "x,z", "y,z"}) {
      double v = minimize_default(make_spin_set("2", axes));
      worst_print = std::max(worst_print, std::abs(v - 1.56));
      worst_frozen = std::max(worst_frozen, std::abs(v - 1.5550852436098));
    }
    report(5, worst_print <= kTwoDp && worst_frozen <= kExact,
           fmt("spin-2 pairs minimum 1.5550852 (|err vs quoted 1.56| %.2e <= 0.005)", worst_print));
  }

  // 6. spin-2 triple: quoted 3.12 is the null-projection stationary value; the
  // global minimum sits lower, at 3 exactly (cat states).
  {
    double v = minimize_default(make_spin_set("2", "x,y,z"));
    Vec null_state = Vec::Zero(5);
    null_state[2] = 1.0;
    double null_value = entropy_sum(null_state, make_spin_set("2", "x,y,z"));
    bool pass = std::abs(v - 3.0) <= kExact && std::abs(null_value - 3.12) <= kTwoDp;
    report(6, pass,
           fmt("spin-2 triple global minimum %.10f (= 3); quoted 3.12 matches the |S_z=0> value %.10f within 0.005",
               v, null_value));
  }

  // 7. d=3 MUBs.
  {
    double v3 = minimize_default(make_mub_set(3, 3));
    double v4 = minimize_default(make_mub_set(3, 4));
    report(7, std::abs(v3 - 3.0) <= kExact && std::abs(v4 - 4.0) <= kExact,
           fmt("d=3 MUBs: L=3 minimum %.10f (= 3), L=4 minimum %.10f (= 4), tol 1e-6", v3, v4));
  }

  // 8. d=4 MUBs.
  {
    double v3 = minimize_default(make_mub_set(4, 3));
    double v4 = minimize_default(make_mub_set(4, 4));
    double v5 = minimize_default(make_mub_set(4, 5));
    bool pass = std::abs(v3 - 3.0) <= kExact && std::abs(v4 - 5.0) <= kExact &&
                std::abs(v5 - 7.0) <= kExact;
    report(8, pass,
           fmt("d=4 MUBs: L=3 %.10f (= 3), L=4 %.10f (= 5), L=5 %.10f (= 7), tol 1e-6", v3, v4, v5));
  }

  // 9. d=5 MUBs. The L=4/5/6 reference prints are two-decimal truncations of
  // the certified minima (6.3467.. -> 6.34), so they are checked as such.
  {
    double v3 = minimize_default(make_mub_set(5, 3));
    double v4 = minimize_default(make_mub_set(5, 4));
    double v5 = minimize_default(make_mub_set(5, 5));
    double v6 = minimize_default(make_mub_set(5, 6));
    bool pass = std::abs(v3 - 2 * std::log2(5.0)) <= kExact;
    pass = pass && std::abs(v4 - 6.3467468278818) <= kExact && trunc2(v4) == 6.34;
    pass = pass && std::abs(v5 - 8.3362092223832) <= kExact && trunc2(v5) == 8.33;
    pass = pass && std::abs(v6 - 10.2524481255108) <= kExact && trunc2(v6) == 10.25;
    report(9, pass,
           fmt("d=5 MUBs: L=3 %.6f (= 2log2(5)); L=4/5/6 = %.10f/%.10f/%.10f, truncating to the quoted 6.34/8.33/10.25",
               v3, v4, v5, v6));
  }

  // 10. d=2 sanity: three qubit MUBs -> 2.
  {
    double v = minimize_default(make_mub_set(2, 3));
    report(10, std::abs(v - 2.0) <= kExact, fmt("d=2 MUBs: L=3 minimum %.10f (= 2), tol 1e-6", v));
  }

  // 11. Null-projection states saturate the spin-1 triple (2) and sit at the
  // quoted spin-2 triple value (3.12).
  {
    double r1 = 0.0, r2 = 0.0;
    bool ok1 = registry_case_passes("spin1-null-projection", &r1);
    bool ok2 = registry_case_passes("spin2-null-projection", &r2);
    double null_value = verify_cases("spin2-null-projection")[0].value;
    bool quoted_ok = std::abs(null_value - 3.12) <= kTwoDp;
    report(11, ok1 && ok2 && quoted_ok,
           fmt("null-projection states: spin-1 triple residual %.1e; spin-2 triple value %.10f (quoted 3.12)",
               r1, null_value));
  }

  // 12. Eigenstate saturation: all 12 spin-3/2 eigenstates and all 15 d=5 L=3
  // MUB eigenstates.
  {
    bool ok1 = registry_case_passes("spin32-eigenstate-triple");
    bool ok2 = registry_case_passes("d5-eigenstate-l3");
    auto rows1 = verify_cases("spin32-eigenstate-triple");
    auto rows2 = verify_cases("d5-eigenstate-l3");
    report(12, ok1 && ok2 && rows1.size() == 12 && rows2.size() == 15,
           fmt("eigenstate saturation: %zu spin-3/2 states at 6-1.5log2(3); %zu d=5 L=3 states at 2log2(5)",
               rows1.size(), rows2.size()));
  }

  // 13. Named saturating families.
  {
    bool ok15 = registry_case_passes("spin32-pair-alpha15");
    bool okphi = registry_case_passes("d3-phi-family") && registry_case_passes("d3-superposition");
    bool okjk = registry_case_passes("d4-psi-jk");
    bool okstato = registry_case_passes("d5-stato-l4");
    double v15 = verify_cases("spin32-pair-alpha15")[0].value;
    double vstato = verify_cases("d5-stato-l4")[0].value;
    bool quoted = std::abs(v15 - 1.71) <= kTwoDp && std::abs(vstato - 6.34) <= 0.01;
    report(13, ok15 && okphi && okjk && okstato && quoted,
           fmt("saturating families: sin15|0>+cos15|2> = %.7f; d=3 phi-family and (|1>-|2>)/sqrt2 = 4; psi_jk = 7; d=5 printed state %.7f (quoted 6.34, tol 0.01)",
               v15, vstato));
  }

  // 14. Literature-bound table against the quoted values, plus dominance
  // against every certified minimum.
  {
    struct Row {
      const char* label;
      double value, quoted, tol;
    };
    const double c32 = std::sqrt(3.0 / 8.0);
    const std::vector<Row> rows = {
        {"q_CP(3/2)", q_cp(c32, 1.0 / (2.0 * std::sqrt(2.0))), 1.59, 0.01},
        {"q_RPZ(3/2)", q_rpz(c32, 1.0 / (2.0 * std::sqrt(2.0))), 1.68, 0.01},
        {"q_MU(2)", q_mu(c32), 1.41, 0.01},
        {"q_CP(2)", q_cp(c32, 0.5), 1.48, 0.01},
        {"q_RPZ(2)", q_rpz(c32, 0.5), 1.53, 0.01},
        {"q_A(3,3)", q_azarchs(3, 3), 2.54, 0.01},
        {"q_A(4,4)", q_azarchs(4, 4), 4.77, 0.01},
        {"q_A(5,3)", q_azarchs(5, 3), 3.30, 0.05},
        {"q_A(5,4)", q_azarchs(5, 4), 5.28, 0.05},
        {"q_A(5,5)", q_azarchs(5, 5), 7.34, 0.05},
        {"q_I(3)", q_ivanovic(3), 4.0, 0.01},
        {"q_I(5)", q_ivanovic(5), 9.51, 0.01},
        {"q_S(4)", q_sanchez(4), 5.30, 0.01},
        {"q_BW(4,4)", q_bw(4, 4), 4.0, 0.01},
    };
    bool formulas_ok = true;
    std::string worst_label = "-";
    double worst_err = 0.0;
    for (const auto& r : rows) {
      double err = std::abs(r.value - r.quoted);
      if (err > r.tol) formulas_ok = false;
      if (err > worst_err) {
        worst_err = err;
        worst_label = r.label;
      }
    }
    bool dominance_ok = true;
    for (const auto& c : certified_cases())
      dominance_ok = dominance_ok && compare_bounds(c.set, c.value, c.source).dominance_ok;
    report(14, formulas_ok && dominance_ok,
           fmt("literature bounds match quoted table (worst gap %s %.4f) and every applicable bound <= certified + 1e-6 across %zu cases",
               worst_label.c_str(), worst_err, certified_cases().size()));
  }

  // 15. Gamma surface floor and the entropic floor on physical draws. The
  // closed-form Gamma is not a pointwise lower bound for the entropy sum
  // (see qutrit.hpp), so the sound per-draw check is the 2-bit floor; the
  // violation rate of the pointwise comparison is reported for transparency.
  {
    auto rows = gamma_surface(100);
    double surf_min = 1e300;
    bool min_at_vertex_only = true;
    for (const auto& r : rows) {
      surf_min = std::min(surf_min, r.gamma);
      bool vertex = (r.omega_x == 0.0 && r.omega_y == 0.0) || r.omega_x == 1.0 || r.omega_y == 1.0;
      if (r.gamma == 2.0 && !vertex) min_at_vertex_only = false;
    }
    SplitMix64 rng(424242);
    const int n = 100000;
    double min_sum = 1e300;
    int gamma_violations = 0;
    for (int i = 0; i < n; ++i) {
      QutritBlochParams p = sample_physical(rng);
      double h = entropy_sum_bloch(p);
      min_sum = std::min(min_sum, h);
      if (h < gamma_bound(p.omega[0], p.omega[1]) - 1e-9) ++gamma_violations;
    }
    bool pass = surf_min == 2.0 && min_at_vertex_only && min_sum >= 2.0 - 1e-9;
    report(15, pass,
           fmt("gamma surface (res 100) min = %.10f at the vertices; entropy sums of %d physical draws >= 2 (min %.10f); pointwise H>=Gamma exceptions: %.1f%% (documented)",
               surf_min, n, min_sum, 100.0 * gamma_violations / n));
  }

  // 16. Grid oracle (resolution 24) vs minimizer on every certified case with
  // dim <= 4. This is the slow criterion: the d=4 scans take minutes in total.
  {
    bool pass = true;
    double worst = 0.0;
    std::string worst_name = "-";
    int checked = 0;
    for (const auto& c : certified_cases()) {
      if (c.set.dim > 4) continue;
      double mini = minimize_default(c.set);
      double oracle = grid_oracle(c.set, 24);
      double gap = std::abs(oracle - mini);
      if (gap > worst) {
        worst = gap;
        worst_name = c.name;
      }
      pass = pass && gap <= 0.02;
      ++checked;
    }
    report(16, pass,
           fmt("grid oracle (res 24) agrees with the minimizer within 0.02 on all %d dim<=4 cases (worst gap %.2e on %s)",
               checked, worst, worst_name.c_str()));
  }

  // 17. Random states never undercut the certified minima.
  {
    bool pass = true;
    double worst_slack = 1e300;
    std::string worst_name = "-";
    for (const auto& c : certified_cases()) {
      SplitMix64 rng(0xC0FFEE ^ std::hash<std::string>{}(c.name));
      for (int i = 0; i < 10000; ++i) {
        double h = entropy_sum(random_state(rng, c.set.dim), c.set);
        double slack = h - c.value;
        if (slack < worst_slack) {
          worst_slack = slack;
          worst_name = c.name;
        }
        if (slack < -1e-9) pass = false;
      }
    }
    report(17, pass,
           fmt("10000 random states per certified case stay >= certified - 1e-9 (tightest slack %.2e on %s)",
               worst_slack, worst_name.c_str()));
  }

  // 18. Catalog unbiasedness and spin algebra identities.
  {
    double worst_mub = 0.0;
    for (int d : {3, 4, 5}) worst_mub = std::max(worst_mub, verify_mub(mub_catalog(d)));
    double worst_spin = 0.0;
    const cxd I(0.0, 1.0);
    for (double s : {1.0, 1.5, 2.0}) {
      Mat Sx = spin_operator(s, 'x'), Sy = spin_operator(s, 'y'), Sz = spin_operator(s, 'z');
      int d = Sx.rows();
      worst_spin = std::max(worst_spin, (Sx * Sy - Sy * Sx - I * Sz).norm());
      worst_spin = std::max(worst_spin, (Sy * Sz - Sz * Sy - I * Sx).norm());
      worst_spin = std::max(worst_spin, (Sz * Sx - Sx * Sz - I * Sy).norm());
      worst_spin = std::max(
          worst_spin, (Sx * Sx + Sy * Sy + Sz * Sz - s * (s + 1) * Mat::Identity(d, d)).norm());
    }
    report(18, worst_mub < 1e-10 && worst_spin <= 1e-12,
           fmt("MUB catalogs d=3,4,5 unbiased within %.1e (< 1e-10); spin algebra identities within %.1e (<= 1e-12)",
               worst_mub, worst_spin));
  }

  // 19. CLI determinism: identical records for the same seed regardless of
  // thread count, byte for byte.
  {
    const std::string path = "/tmp/eur_acceptance_det.json";
    const std::string base =
        "minimize --dim 3 --mubs 4 --starts 64 --seed 314159 --timestamp 2026-01-01T00:00:00Z "
        "--record " +
        path;
    int rc1 = 0, rc2 = 0, rc3 = 0;
    std::string out1 = run_cli(base + " --threads 1", &rc1);
    std::string rec1 = slurp(path);
    std::string out2 = run_cli(base + " --threads 4", &rc2);
    std::string rec2 = slurp(path);
    std::string out3 = run_cli(base + " --threads 1", &rc3);
    std::string rec3 = slurp(path);
    std::remove(path.c_str());
    bool pass = rc1 == 0 && rc2 == 0 && rc3 == 0 && !rec1.empty() && rec1 == rec2 &&
                rec1 == rec3 && out1 == out2 && out1 == out3;
    report(19, pass,
           fmt("minimize records byte-identical across reruns and thread counts 1/4 (%zu-byte record)",
               rec1.size()));
  }

  if (g_failures == 0) {
    std::printf("acceptance: all 19 criteria passed\n");
    return 0;
  }
  std::printf("acceptance: %d criteria FAILED\n", g_failures);
  return 1;
}
