// Acceptance suite: one pass/fail line per criterion, exit 0 iff all pass.
//
// Each criterion re-checks the library through the verification suites at the
// stated tolerances, case counts, and runtime budgets; the last one drives
// the installed CLI against frozen golden records.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "dualfunc/verify.hpp"

namespace {

constexpr std::uint64_t kSeed = 20250810;

using dualfunc::verify::CheckResult;

class SuiteCache {
 public:
  const std::vector<CheckResult>& get(const std::string& suite) {
    auto it = cache_.find(suite);
    if (it == cache_.end()) {
      it = cache_.emplace(suite, dualfunc::verify::run_suite(suite, kSeed)).first;
    }
    return it->second;
  }

 private:
  std::map<std::string, std::vector<CheckResult>> cache_;
};

struct Requirement {
  std::string suite;
  std::string check_prefix;  // matches every check whose name starts with this
  int min_cases = 1;
};

struct Verdict {
  bool pass = true;
  double worst = 0.0;
  int checks = 0;
  std::string failure;
};

Verdict evaluate(SuiteCache& cache, const std::vector<Requirement>& requirements) {
  Verdict v;
  for (const Requirement& req : requirements) {
    int matched = 0;
    for (const CheckResult& r : cache.get(req.suite)) {
      if (r.name.rfind(req.check_prefix, 0) != 0) continue;
      ++matched;
      ++v.checks;
      v.worst = std::max(v.worst, r.worst_residual);
      if (!r.pass) {
        v.pass = false;
        v.failure = req.suite + "/" + r.name + " worst=" +
                    std::to_string(r.worst_residual);
      }
      if (r.cases < req.min_cases) {
        v.pass = false;
        v.failure = req.suite + "/" + r.name + " has only " +
                    std::to_string(r.cases) + " cases";
      }
    }
    if (matched == 0) {
      v.pass = false;
      v.failure = "no check matches " + req.suite + "/" + req.check_prefix + "*";
    }
  }
  return v;
}

struct CliResult {
  int exit_code = -1;
  std::string output;
};

CliResult run_cli(const std::string& cli, const std::string& args) {
  CliResult result;
  std::string cmd = cli + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return result;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) result.output.append(buf, n);
  int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

int g_failures = 0;

void report(int number, const std::string& label, bool pass, double seconds,
            double limit_seconds, const std::string& detail) {
  bool in_budget = limit_seconds <= 0.0 || seconds < limit_seconds;
  bool ok = pass && in_budget;
  if (!ok) ++g_failures;
  std::printf("criterion %d: %s  [%s]  (%.2fs%s%s%s)\n", number, label.c_str(),
              ok ? "PASS" : "FAIL", seconds,
              limit_seconds > 0.0 && !in_budget ? ", over budget" : "",
              detail.empty() ? "" : ", ", detail.c_str());
}

template <typename Fn>
void criterion(int number, const std::string& label, double limit_seconds, Fn body) {
  auto t0 = std::chrono::steady_clock::now();
  Verdict v;
  std::string extra;
  try {
    v = body();
  } catch (const std::exception& e) {
    v.pass = false;
    v.failure = e.what();
  }
  double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::ostringstream detail;
  if (v.checks > 0) detail << "worst=" << v.worst << " over " << v.checks << " checks";
  if (!v.pass && !v.failure.empty()) detail << " | " << v.failure;
  report(number, label, v.pass, seconds, limit_seconds, detail.str());
}

}  // namespace

int main(int argc, char** argv) {
  std::string cli_path, golden_dir;
  for (int i = 1; i + 1 < argc; ++i) {
    if (std::strcmp(argv[i], "--cli") == 0) cli_path = argv[i + 1];
    if (std::strcmp(argv[i], "--golden") == 0) golden_dir = argv[i + 1];
  }

  SuiteCache cache;

  criterion(1, "dual gamma values at small integers", 1.0, [&] {
    return evaluate(cache, {{"gamma", "paper_spot_values", 9}});
  });

  criterion(2, "forward-mode du channels vs finite differences", 30.0, [&] {
    return evaluate(cache, {{"forward_mode", "elementary_du_vs_fd", 200},
                            {"forward_mode", "pfq_parameter_sensitivity", 200},
                            {"forward_mode", "pfq_argument_sensitivity", 200},
                            {"forward_mode", "pfq_derivative_vs_fd", 200}});
  });

  criterion(3, "identity suites across the function family", 300.0, [&] {
    return evaluate(cache, {{"gamma", "functional_identity", 200},
                            {"gamma", "shifted_functional_identity", 200},
                            {"pochhammer", "identity_", 200},
                            {"beta", "relation_", 200},
                            {"contiguous", "numerator_pair", 200},
                            {"contiguous", "numerator_denominator", 200},
                            {"contiguous", "raise_first_", 200},
                            {"contiguous", "lower_numerator_", 200},
                            {"theta_ode", "residual_randomized", 200},
                            {"confluent", "contiguous_", 200},
                            {"confluent", "differential_", 200},
                            {"gauss", "contiguous_", 200},
                            {"gauss", "differential_", 200},
                            {"gauss", "ode_residual", 1}});
  });

  criterion(4, "quadrature cross-checks against series/gamma paths", 300.0, [&] {
    return evaluate(cache, {{"gamma", "integral_oracle", 50},
                            {"beta", "quadrature_agreement", 50},
                            {"pfq_integrals", "euler_kernel_vs_series", 50},
                            {"pfq_integrals", "euler_kernel_other_shapes", 50},
                            {"pfq_integrals", "infinite_kernel_vs_series", 50},
                            {"pfq_integrals", "scaled_kernel_vs_series", 50},
                            {"confluent_integrals", "representation_", 50}});
  });

  criterion(5, "gauss summation vs boundary series", 120.0, [&] {
    return evaluate(cache, {{"gauss_summation", "closed_form_vs_boundary_series", 50},
                            {"gauss_summation", "four_over_pi_spot", 1}});
  });

  criterion(6, "pfaff and euler transformations", 0.0, [&] {
    return evaluate(cache, {{"transformations", "pfaff_residual", 200},
                            {"transformations", "euler_residual", 200},
                            {"transformations", "pfaff_composition_is_euler", 50}});
  });

  criterion(7, "limiting definition of the dual gamma function", 0.0, [&] {
    return evaluate(cache, {{"gamma", "limit_monotone_error", 12},
                            {"gamma", "limit_final_error", 3}});
  });

  criterion(8, "integral formulas differentiate back to their integrands", 0.0, [&] {
    return evaluate(cache, {{"confluent", "integral_formula_", 50}});
  });

  criterion(9, "CLI golden records and full verification run", 0.0, [&] {
    Verdict v;
    if (cli_path.empty() || golden_dir.empty()) {
      v.pass = false;
      v.failure = "--cli and --golden are required";
      return v;
    }
    const std::vector<std::pair<std::string, std::string>> goldens = {
        {"eval gamma_d \"1+2eps\"", "eval_gamma_d.json"},
        {"eval pfq --num \"\" --den \"\" \"1+2eps\"", "eval_pfq_0f0.json"},
        {"eval gauss \"0.5\" \"0.5\" \"2\" \"1\"", "eval_gauss_at_1.json"},
    };
    for (const auto& [cmd, file] : goldens) {
      CliResult r = run_cli(cli_path, cmd);
      ++v.checks;
      if (r.exit_code != 0 || r.output != read_file(golden_dir + "/" + file)) {
        v.pass = false;
        v.failure = "golden mismatch for `" + cmd + "`";
        return v;
      }
    }
    CliResult first = run_cli(cli_path, "verify all --seed 1");
    CliResult second = run_cli(cli_path, "verify all --seed 1");
    ++v.checks;
    if (first.exit_code != 0) {
      v.pass = false;
      v.failure = "verify all --seed 1 exited " + std::to_string(first.exit_code);
    } else if (first.output != second.output) {
      v.pass = false;
      v.failure = "verify report is not byte-identical across runs";
    }
    return v;
  });

  if (g_failures == 0) {
    std::printf("acceptance: all 9 criteria passed\n");
    return 0;
  }
  std::printf("acceptance: %d criterion(s) failed\n", g_failures);
  return 1;
}
