// Command line surface of the dualfunc library: evaluate dual-valued special
// functions, sweep argument grids into CSV tables, and run the verification
// suites with machine-readable reports.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dualfunc/dualfunc.hpp"

namespace {

using dualfunc::DualReal;
using ordered_json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitNoConvergence = 3;

struct EvalContext {
  double tol = 1e-12;
  int max_terms = 10000;
  std::vector<DualReal> numerator;
  std::vector<DualReal> denominator;
  std::string lifted_fn;
  int derivative_order = 1;
  std::string relation;  // contiguous_residual family selector
  int relation_index = 1;
  int formula_id = 1;
};

struct Record {
  std::string function;
  std::vector<std::string> args;
  DualReal value;
  std::optional<int> terms_used;
  std::optional<bool> converged;
  std::optional<double> tail_bound;
};

struct Entry {
  int arity = 1;
  bool wants_params = false;  // consumes --num/--den
  bool wants_fn = false;      // consumes --fn
  std::function<Record(const std::vector<DualReal>&, const EvalContext&)> run;
};

Record plain(std::string name, const DualReal& value) {
  return {std::move(name), {}, value, {}, {}, {}};
}

Record from_series(std::string name, const dualfunc::SeriesResult& r) {
  return {std::move(name), {}, r.value, r.terms_used, r.converged, r.tail_bound};
}

long long integer_from(const DualReal& v, const char* what) {
  if (v.du != 0.0 || std::nearbyint(v.re) != v.re) {
    throw dualfunc::DomainError(std::string(what) + " must be a plain integer");
  }
  return static_cast<long long>(v.re);
}

dualfunc::ElementaryFunctionId fn_from_name(const std::string& name) {
  using Id = dualfunc::ElementaryFunctionId;
  static const std::map<std::string, Id> table = {
      {"exp", Id::exp()}, {"sin", Id::sin()}, {"cos", Id::cos()},
      {"tan", Id::tan()}, {"cot", Id::cot()}, {"sec", Id::sec()},
      {"csc", Id::csc()}, {"log", Id::log()}, {"arcsin", Id::arcsin()},
      {"arctan", Id::arctan()}};
  if (auto it = table.find(name); it != table.end()) return it->second;
  if (name.rfind("power_", 0) == 0) {
    return Id::power_k(std::stoll(name.substr(6)));
  }
  throw dualfunc::DomainError("unknown elementary function: " + name);
}

const std::map<std::string, Entry>& registry() {
  using namespace dualfunc;
  static const std::map<std::string, Entry> table = [] {
    std::map<std::string, Entry> reg;
    auto lifted = [](const char* name) {
      return Entry{1, false, false,
                   [name](const std::vector<DualReal>& a, const EvalContext&) {
                     return plain(name, lift(fn_from_name(name), a[0]));
                   }};
    };
    for (const char* name : {"exp", "sin", "cos", "tan", "cot", "sec", "csc",
                             "log", "arcsin", "arctan"}) {
      reg[name] = lifted(name);
    }
    reg["lift"] = {1, false, true,
                   [](const std::vector<DualReal>& a, const EvalContext& ctx) {
                     return plain("lift", lift(fn_from_name(ctx.lifted_fn), a[0]));
                   }};
    reg["dual_derivative"] = {
        1, false, true, [](const std::vector<DualReal>& a, const EvalContext& ctx) {
          return plain("dual_derivative",
                       dual_derivative(fn_from_name(ctx.lifted_fn), a[0]));
        }};
    reg["antiderivative"] = {
        1, false, true, [](const std::vector<DualReal>& a, const EvalContext& ctx) {
          return plain("antiderivative",
                       antiderivative(fn_from_name(ctx.lifted_fn), a[0]));
        }};
    reg["add"] = {2, false, false,
                  [](const std::vector<DualReal>& a, const EvalContext&) {
                    return plain("add", a[0] + a[1]);
                  }};
    reg["sub"] = {2, false, false,
                  [](const std::vector<DualReal>& a, const EvalContext&) {
                    return plain("sub", a[0] - a[1]);
                  }};
    reg["mul"] = {2, false, false,
                  [](const std::vector<DualReal>& a, const EvalContext&) {
                    return plain("mul", a[0] * a[1]);
                  }};
    reg["div"] = {2, false, false,
                  [](const std::vector<DualReal>& a, const EvalContext&) {
                    return plain("div", a[0] / a[1]);
                  }};
    reg["pow"] = {2, false, false,
                  [](const std::vector<DualReal>& a, const EvalContext&) {
                    return plain("pow", pow(a[0], a[1]));
                  }};
    reg["gamma_real"] = {1, false, false,
                         [](const std::vector<DualReal>& a, const EvalContext&) {
                           return plain("gamma_real", DualReal{gamma_real(a[0].re)});
                         }};
    reg["digamma"] = {1, false, false,
                      [](const std::vector<DualReal>& a, const EvalContext&) {
                        return plain("digamma", DualReal{digamma(a[0].re)});
                      }};
    reg["trigamma"] = {1, false, false,
                       [](const std::vector<DualReal>& a, const EvalContext&) {
                         return plain("trigamma", DualReal{trigamma(a[0].re)});
                       }};
    Entry gamma_entry{1, false, false,
                      [](const std::vector<DualReal>& a, const EvalContext&) {
                        return plain("gamma_dual", gamma_dual(a[0]));
                      }};
    reg["gamma_dual"] = gamma_entry;
    reg["gamma_d"] = gamma_entry;  // short alias
    reg["pochhammer_dual"] = {
        2, false, false, [](const std::vector<DualReal>& a, const EvalContext&) {
          return plain("pochhammer_dual",
                       pochhammer_dual(a[0], integer_from(a[1], "index")));
        }};
    reg["gamma_limit_approx"] = {
        2, false, false, [](const std::vector<DualReal>& a, const EvalContext&) {
          return plain("gamma_limit_approx",
                       gamma_limit_approx(a[0], integer_from(a[1], "k")));
        }};
    Entry beta_entry{2, false, false,
                     [](const std::vector<DualReal>& a, const EvalContext&) {
                       return plain("beta_dual", beta_dual(a[0], a[1]));
                     }};
    reg["beta_dual"] = beta_entry;
    reg["beta_d"] = beta_entry;
    reg["beta_dual_quadrature"] = {
        2, false, false, [](const std::vector<DualReal>& a, const EvalContext& ctx) {
          return plain("beta_dual_quadrature",
                       beta_dual_quadrature(a[0], a[1], ctx.tol).value);
        }};
    reg["pfq"] = {1, true, false,
                  [](const std::vector<DualReal>& a, const EvalContext& ctx) {
                    HypergeometricParams params{ctx.numerator, ctx.denominator};
                    return from_series(
                        "pfq", pfq(params, a[0], ctx.tol, ctx.max_terms));
                  }};
    reg["pfq_derivative"] = {
        1, true, false, [](const std::vector<DualReal>& a, const EvalContext& ctx) {
          HypergeometricParams params{ctx.numerator, ctx.denominator};
          return plain("pfq_derivative",
                       pfq_derivative(params, a[0], ctx.derivative_order, ctx.tol,
                                      ctx.max_terms));
        }};
    reg["theta_ode_residual"] = {
        1, true, false, [](const std::vector<DualReal>& a, const EvalContext& ctx) {
          HypergeometricParams params{ctx.numerator, ctx.denominator};
          return plain("theta_ode_residual",
                       theta_ode_residual(params, a[0], ctx.tol, ctx.max_terms));
        }};
    reg["confluent"] = {3, false, false,
                        [](const std::vector<DualReal>& a, const EvalContext& ctx) {
                          return from_series(
                              "confluent",
                              confluent(a[0], a[1], a[2], ctx.tol, ctx.max_terms));
                        }};
    reg["gauss"] = {
        4, false, false, [](const std::vector<DualReal>& a, const EvalContext& ctx) {
          // at exactly x = 1 with the boundary condition met, the closed
          // summation form is both faster and exact in the dual algebra
          const DualReal& x = a[3];
          if (x.re == 1.0 && x.du == 0.0 &&
              (a[2] - a[0] - a[1]).re > 0.0) {
            return plain("gauss", gauss_sum_at_1(a[0], a[1], a[2]));
          }
          return from_series("gauss",
                             gauss(a[0], a[1], a[2], a[3], ctx.tol, ctx.max_terms));
        }};
    reg["gauss_sum_at_1"] = {
        3, false, false, [](const std::vector<DualReal>& a, const EvalContext&) {
          return plain("gauss_sum_at_1", gauss_sum_at_1(a[0], a[1], a[2]));
        }};
    reg["gauss_ode_residual"] = {
        4, false, false, [](const std::vector<DualReal>& a, const EvalContext& ctx) {
          return plain("gauss_ode_residual",
                       gauss_ode_residual(a[0], a[1], a[2], a[3], ctx.tol,
                                          ctx.max_terms));
        }};
    reg["contiguous_residual"] = {
        1, true, false, [](const std::vector<DualReal>& a, const EvalContext& ctx) {
          static const std::map<std::string, RelationId> names = {
              {"numerator_pair", RelationId::NumeratorPair},
              {"numerator_denominator", RelationId::NumeratorDenominator},
              {"raise_first_p_lt_q", RelationId::RaiseFirstNumeratorPLtQ},
              {"raise_first_p_eq_q", RelationId::RaiseFirstNumeratorPEqQ},
              {"raise_first_p_gt_q", RelationId::RaiseFirstNumeratorPGtQ},
              {"lower_numerator_p_le_q", RelationId::LowerNumeratorPLeQ},
              {"lower_numerator_p_gt_q", RelationId::LowerNumeratorPGtQ}};
          auto it = names.find(ctx.relation);
          if (it == names.end()) {
            throw DomainError("unknown contiguous relation: " + ctx.relation);
          }
          HypergeometricParams params{ctx.numerator, ctx.denominator};
          return plain("contiguous_residual",
                       contiguous_residual(it->second, params, a[0],
                                           ctx.relation_index, ctx.tol,
                                           ctx.max_terms));
        }};
    reg["confluent_contiguous_residual"] = {
        3, false, false, [](const std::vector<DualReal>& a, const EvalContext& ctx) {
          return plain("confluent_contiguous_residual",
                       confluent_contiguous_residual(ctx.formula_id, a[0], a[1], a[2],
                                                     ctx.tol, ctx.max_terms));
        }};
    reg["gauss_contiguous_residual"] = {
        4, false, false, [](const std::vector<DualReal>& a, const EvalContext& ctx) {
          return plain("gauss_contiguous_residual",
                       gauss_contiguous_residual(ctx.formula_id, a[0], a[1], a[2],
                                                 a[3], ctx.tol, ctx.max_terms));
        }};
    return reg;
  }();
  return table;
}

std::vector<DualReal> parse_literal_list(const std::string& text) {
  std::vector<DualReal> out;
  if (text.empty()) return out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    std::string piece = text.substr(
        start, comma == std::string::npos ? std::string::npos : comma - start);
    out.push_back(dualfunc::parse_dual(piece));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

ordered_json record_to_json(const Record& r) {
  ordered_json j;
  j["function"] = r.function;
  j["args"] = r.args;
  j["re"] = r.value.re;
  j["du"] = r.value.du;
  if (r.terms_used) j["terms_used"] = *r.terms_used;
  if (r.converged) j["converged"] = *r.converged;
  if (r.tail_bound) j["tail_bound"] = *r.tail_bound;
  return j;
}

std::string double_to_string(double v) {
  // shortest round-trip form, shared with format_dual
  return dualfunc::format_dual(DualReal{v, 0.0});
}

std::string record_to_csv(const Record& r) {
  std::ostringstream os;
  os << r.function << ',';
  for (std::size_t i = 0; i < r.args.size(); ++i) {
    if (i) os << ' ';
    os << r.args[i];
  }
  os << ',' << double_to_string(r.value.re) << ',' << double_to_string(r.value.du);
  if (r.terms_used) os << ',' << *r.terms_used;
  if (r.converged) os << ',' << (*r.converged ? "true" : "false");
  if (r.tail_bound) os << ',' << double_to_string(*r.tail_bound);
  return os.str();
}

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw dualfunc::DomainError("cannot open output file: " + out_path);
  f << text;
}

// --------------------------------------------------------------------------
// eval
// --------------------------------------------------------------------------

int run_eval(const std::string& function, const std::vector<std::string>& raw_args,
             const EvalContext& ctx, const std::string& format,
             const std::string& out_path) {
  auto it = registry().find(function);
  if (it == registry().end()) {
    std::cerr << "eval: unknown function '" << function << "'\n";
    return kExitBadInput;
  }
  const Entry& entry = it->second;
  if (static_cast<int>(raw_args.size()) != entry.arity) {
    std::cerr << "eval: " << function << " expects " << entry.arity
              << " argument(s), got " << raw_args.size() << "\n";
    return kExitBadInput;
  }
  std::vector<DualReal> args;
  std::vector<std::string> normalized;
  for (const std::string& raw : raw_args) {
    DualReal v = dualfunc::parse_dual(raw);
    args.push_back(v);
    normalized.push_back(dualfunc::format_dual(v));
  }
  Record record = entry.run(args, ctx);
  record.args = normalized;  // positional literals; --num/--den echo on the command line
  std::string text = format == "csv" ? record_to_csv(record) + "\n"
                                     : record_to_json(record).dump() + "\n";
  write_output(text, out_path);
  return kExitOk;
}

// --------------------------------------------------------------------------
// table
// --------------------------------------------------------------------------

struct AxisSpec {
  std::vector<DualReal> points;
};

AxisSpec parse_axis(const std::string& text) {
  // sweep form lo:hi:count[:du]; anything else is a fixed dual literal
  int colons = static_cast<int>(std::count(text.begin(), text.end(), ':'));
  if (colons == 0) return {{dualfunc::parse_dual(text)}};
  if (colons != 2 && colons != 3) {
    throw dualfunc::ParseError("grid axis must be lo:hi:count[:du]", 0);
  }
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    std::size_t colon = text.find(':', start);
    fields.push_back(text.substr(
        start, colon == std::string::npos ? std::string::npos : colon - start));
    if (colon == std::string::npos) break;
    start = colon + 1;
  }
  double lo = dualfunc::parse_dual(fields[0]).re;
  double hi = dualfunc::parse_dual(fields[1]).re;
  long long count = std::stoll(fields[2]);
  double du = fields.size() == 4 ? dualfunc::parse_dual(fields[3]).re : 0.0;
  if (count < 1) {
    throw dualfunc::DomainError("grid axis needs a positive point count");
  }
  AxisSpec axis;
  for (long long i = 0; i < count; ++i) {
    double t = count == 1 ? lo : lo + (hi - lo) * static_cast<double>(i) /
                                          static_cast<double>(count - 1);
    axis.points.push_back({t, du});
  }
  return axis;
}

int run_table(const std::string& function, const std::vector<std::string>& axis_specs,
              const EvalContext& ctx, const std::string& out_path) {
  auto it = registry().find(function);
  if (it == registry().end()) {
    std::cerr << "table: unknown function '" << function << "'\n";
    return kExitBadInput;
  }
  const Entry& entry = it->second;
  if (static_cast<int>(axis_specs.size()) != entry.arity) {
    std::cerr << "table: " << function << " expects " << entry.arity
              << " axis spec(s), got " << axis_specs.size() << "\n";
    return kExitBadInput;
  }
  std::vector<AxisSpec> axes;
  int dual_axes = 0;
  for (const std::string& spec : axis_specs) {
    axes.push_back(parse_axis(spec));
    if (axes.back().points.size() > 1 && axes.back().points.front().du != 0.0) {
      ++dual_axes;
    }
  }
  if (dual_axes > 1) {
    std::cerr << "table: dual parts are allowed on one swept axis only\n";
    return kExitBadInput;
  }

  std::ostringstream csv;
  for (std::size_t i = 0; i < axes.size(); ++i) csv << "arg" << i << ',';
  csv << "re,du\n";

  std::vector<std::size_t> index(axes.size(), 0);
  while (true) {
    std::vector<DualReal> args;
    for (std::size_t i = 0; i < axes.size(); ++i) args.push_back(axes[i].points[index[i]]);
    Record record = entry.run(args, ctx);
    for (const DualReal& a : args) csv << dualfunc::format_dual(a) << ',';
    csv << double_to_string(record.value.re) << ',' << double_to_string(record.value.du)
        << '\n';
    std::size_t axis = axes.size();
    while (axis > 0) {
      --axis;
      if (++index[axis] < axes[axis].points.size()) break;
      index[axis] = 0;
      if (axis == 0) {
        write_output(csv.str(), out_path);
        return kExitOk;
      }
    }
  }
}

// --------------------------------------------------------------------------
// verify
// --------------------------------------------------------------------------

int run_verify(const std::string& suite, std::uint64_t seed,
               const std::string& format, const std::string& out_path) {
  namespace verify = dualfunc::verify;
  std::vector<std::string> names;
  if (suite == "all") {
    names = verify::suite_names();
  } else if (verify::has_suite(suite)) {
    names = {suite};
  } else {
    std::cerr << "verify: unknown suite '" << suite << "'\n";
    return kExitBadInput;
  }

  std::ostringstream report;
  ordered_json jreport = ordered_json::array();
  int failures = 0, checks = 0;
  for (const std::string& name : names) {
    for (const verify::CheckResult& r : verify::run_suite(name, seed)) {
      ++checks;
      if (!r.pass) ++failures;
      if (format == "json") {
        ordered_json j;
        j["suite"] = name;
        j["check"] = r.name;
        j["pass"] = r.pass;
        j["worst_residual"] = r.worst_residual;
        j["tolerance"] = r.tolerance;
        j["cases"] = r.cases;
        jreport.push_back(j);
      } else {
        char line[256];
        std::snprintf(line, sizeof line, "%s/%s: %s worst=%.2e tol=%.2e cases=%d\n",
                      name.c_str(), r.name.c_str(), r.pass ? "pass" : "FAIL",
                      r.worst_residual, r.tolerance, r.cases);
        report << line;
      }
    }
  }
  if (format == "json") {
    write_output(jreport.dump(2) + "\n", out_path);
  } else {
    char line[128];
    std::snprintf(line, sizeof line, "verify: %d checks, %d failures (seed %llu)\n",
                  checks, failures, static_cast<unsigned long long>(seed));
    report << line;
    write_output(report.str(), out_path);
  }
  return failures == 0 ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dual-valued special functions: gamma, beta, and the pFq family"};
  app.require_subcommand(1);

  EvalContext ctx;
  std::string function, format = "json", out_path, num_list, den_list, suite;
  std::vector<std::string> positional;
  std::uint64_t seed = 1;

  CLI::App* eval = app.add_subcommand("eval", "evaluate one function on dual inputs");
  eval->add_option("function", function, "registry name")->required();
  eval->add_option("args", positional, "dual literals, e.g. 1.5+2eps");
  eval->add_option("--num", num_list, "comma separated numerator parameters");
  eval->add_option("--den", den_list, "comma separated denominator parameters");
  eval->add_option("--fn", ctx.lifted_fn, "elementary function name for lift family");
  eval->add_option("--r", ctx.derivative_order, "derivative order");
  eval->add_option("--relation", ctx.relation, "contiguous relation name");
  eval->add_option("--k", ctx.relation_index, "free index of the relation (1-based)");
  eval->add_option("--id", ctx.formula_id, "formula selector for the 1F1/2F1 families");
  eval->add_option("--tol", ctx.tol, "series/quadrature tolerance");
  eval->add_option("--max-terms", ctx.max_terms, "series term budget");
  eval->add_option("--format", format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  eval->add_option("--out", out_path, "write the record here instead of stdout");

  CLI::App* table = app.add_subcommand("table", "sweep a grid into a CSV table");
  table->add_option("function", function, "registry name")->required();
  table->add_option("axes", positional, "per-argument value or lo:hi:count[:du]");
  table->add_option("--num", num_list, "comma separated numerator parameters");
  table->add_option("--den", den_list, "comma separated denominator parameters");
  table->add_option("--fn", ctx.lifted_fn, "elementary function name for lift family");
  table->add_option("--tol", ctx.tol, "series/quadrature tolerance");
  table->add_option("--max-terms", ctx.max_terms, "series term budget");
  table->add_option("--out", out_path, "output CSV path (default stdout)");

  CLI::App* verify = app.add_subcommand("verify", "run identity/property suites");
  verify->add_option("suite", suite, "suite name or 'all'")->required();
  verify->add_option("--seed", seed, "randomized grid seed");
  verify->add_option("--format", format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  verify->add_option("--out", out_path, "write the report here instead of stdout");

  CLI11_PARSE(app, argc, argv);

  try {
    if (eval->parsed() || table->parsed()) {
      ctx.numerator = parse_literal_list(num_list);
      ctx.denominator = parse_literal_list(den_list);
    }
    if (eval->parsed()) {
      return run_eval(function, positional, ctx, format, out_path);
    }
    if (table->parsed()) {
      return run_table(function, positional, ctx, out_path);
    }
    if (format == "json" && !verify->count("--format")) format = "text";
    return run_verify(suite, seed, format, out_path);
  } catch (const dualfunc::NoConvergence& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNoConvergence;
  } catch (const dualfunc::ParseError& e) {
    std::cerr << "error: " << e.what() << " (byte offset " << e.offset() << ")\n";
    return kExitBadInput;
  } catch (const dualfunc::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
}
