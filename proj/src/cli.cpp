#include "zolo/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "zolo/asymptotics.hpp"
#include "zolo/io.hpp"
#include "zolo/remez.hpp"
#include "zolo/verification.hpp"

namespace zolo {

namespace {

struct Usage : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

using Clock = std::chrono::steady_clock;

std::int64_t ms_since(Clock::time_point t0) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
}

std::optional<Bits> env_bits() {
  const char* s = std::getenv("APPROX_PREC_BITS");
  if (s == nullptr || *s == '\0') return std::nullopt;
  char* end = nullptr;
  const long v = std::strtol(s, &end, 10);
  if (*end != '\0' || v < kMinUserBits) throw Usage("APPROX_PREC_BITS must be an integer >= 24");
  return static_cast<Bits>(v);
}

void emit(std::ostream& out, const std::string& text, const std::string& path) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw Usage("cannot open output file " + path);
  f << text;
}

struct SolveOpts {
  int k = 0, m = 1, n = 2;
  double p = 1.0;
  std::string a;
  bool unweighted = false;
  Bits prec_bits = 0;
  double tol = 1e-12;
  int max_iter = 60;
  bool allow_degenerate = false;
  bool parallel = false;
  std::string format = "text";
  std::string out;
};

struct SweepOpts {
  int k = 1;
  double a = 0.5;
  int m_from = 0, m_to = -1, step = 1;
  Bits prec_bits = 0;
  std::string format = "csv";
  std::string out;
};

struct AsymptOpts {
  std::string formula;
  std::map<std::string, double> values;
  std::string format = "text";
};

struct VerifyOpts {
  std::string suite = "all";
  std::optional<int> k, m;
  std::optional<double> a;
  std::size_t grid = 4000;
  std::string format = "text";
  std::string out;
};

int cmd_solve(const SolveOpts& o, std::ostream& out, std::ostream& err) {
  const auto t0 = Clock::now();
  const MPValue a_probe = mp(o.a, 128);
  ProblemSpec spec = o.unweighted ? ProblemSpec::unweighted(o.p, o.n, a_probe) : ProblemSpec::weighted(o.k, o.m, a_probe);
  spec.level_tol = o.tol;
  spec.max_iterations = o.max_iter;
  spec.allow_degenerate = o.allow_degenerate;
  Bits bits = o.prec_bits;
  if (bits == 0) bits = env_bits().value_or(0);
  validate(spec);
  spec.mantissa_bits = bits;
  spec.a = mp(o.a, std::max<Bits>(working_precision(spec), 64));
  validate(spec);
  err << "solving " << to_string(spec.kind) << " at " << working_precision(spec) << " bits\n";
  const EquiSolution sol = remez_solve(spec, o.parallel ? kernels::Exec::Parallel : kernels::Exec::Serial);

  if (o.format == "json") {
    Json params = to_json(spec);
    params["parallel"] = o.parallel;
    const Json env = envelope("solve", std::move(params), to_json(sol, spec), ms_since(t0));
    emit(out, env.dump(2) + "\n", o.out);
    return kExitOk;
  }
  std::ostringstream os;
  os << "problem      " << to_string(spec.kind);
  if (spec.kind == ProblemKind::WeightedSgn) {
    os << " k=" << spec.k << " m=" << spec.m;
  } else {
    os << " p=" << format_double(spec.p) << " n=" << spec.n;
  }
  os << " a=" << format_mp(spec.a) << "\n";
  os << "precision    " << sol.bits << " bits, " << sol.iterations << " iterations, levelness "
     << format_double(sol.levelness.to_double()) << "\n";
  os << "L            " << format_mp(sol.L) << "\n";
  os << "B            " << format_mp(b_from_error(sol.L)) << "\n";
  os << "alternation  " << sol.alternation.size() << " points (x, residual)\n";
  for (const auto& p : sol.alternation) os << "  " << p.x.to_string(20) << "  " << p.residual.to_string(20) << "\n";
  os << "chebyshev    t = x^2 on [" << sol.q.lo().to_string(20) << ", " << sol.q.hi().to_string(20) << "]\n";
  for (std::size_t j = 0; j < sol.q.coeffs().size(); ++j) {
    os << "  c" << j << " = " << sol.q.coeffs()[j].to_string(20) << "\n";
  }
  if (spec.kind == ProblemKind::WeightedSgn) {
    os << "laurent\n";
    for (const auto& [e, c] : expand_rational(sol, spec).laurent) os << "  x^" << e << " : " << c.to_string(20) << "\n";
  }
  emit(out, os.str(), o.out);
  return kExitOk;
}

int cmd_sweep(const SweepOpts& o, int jobs, std::ostream& out, std::ostream& err) {
  const auto t0 = Clock::now();
  if (o.m_to < o.m_from || o.m_from < 1 || o.step < 1) throw Usage("empty m range");
  Bits bits = o.prec_bits;
  if (bits == 0) bits = env_bits().value_or(0);
  err << "sweep k=" << o.k << " a=" << format_double(o.a) << " m=" << o.m_from << ".." << o.m_to << "\n";
  const ConvergenceTable table = convergence_table(o.k, o.a, o.m_from, o.m_to, o.step, bits, jobs);
  if (o.format == "json") {
    Json params;
    params["k"] = o.k;
    params["a"] = o.a;
    params["m_from"] = o.m_from;
    params["m_to"] = o.m_to;
    params["step"] = o.step;
    params["min_prec_bits"] = static_cast<std::int64_t>(bits);
    params["jobs"] = jobs;
    emit(out, envelope("sweep", std::move(params), to_json(table), ms_since(t0)).dump(2) + "\n", o.out);
  } else {
    emit(out, to_csv(table), o.out);
  }
  if (table.failure) {
    err << "sweep stopped: " << *table.failure << "\n";
    return kExitNumerical;
  }
  err << "sweep done, " << table.rows.size() << " rows in " << ms_since(t0) << " ms\n";
  return kExitOk;
}

FormulaId formula_by_name(const std::string& name) {
  static const std::map<std::string, FormulaId> names = {
      {"eq01", FormulaId::EQ01},       {"eq41", FormulaId::EQ41_B},        {"eq32", FormulaId::EQ32_B_FROM_L},
      {"yk", FormulaId::YK},           {"eq62", FormulaId::EQ62_DIAG},     {"eq6215", FormulaId::EQ6215_MAP},
      {"app1", FormulaId::APP1_EN},    {"estar", FormulaId::ESTAR_CONST},  {"model-c", FormulaId::MODEL_C},
      {"model-b", FormulaId::MODEL_B}, {"model-b-q", FormulaId::MODEL_B_Q}, {"model-phi", FormulaId::MODEL_PHI}};
  const auto it = names.find(name);
  if (it == names.end()) throw Usage("unknown formula '" + name + "'");
  return it->second;
}

int cmd_asympt(const AsymptOpts& o, std::ostream& out) {
  const auto t0 = Clock::now();
  const FormulaId id = formula_by_name(o.formula);
  std::vector<std::pair<std::string, double>> inputs(o.values.begin(), o.values.end());
  const AsymptoticReport rep = evaluate_formula(id, inputs);
  if (o.format == "json") {
    Json params;
    params["formula"] = o.formula;
    for (const auto& [k, v] : inputs) params[k] = v;
    out << envelope("asympt", std::move(params), to_json(rep), ms_since(t0)).dump(2) << "\n";
    return kExitOk;
  }
  out << to_string(rep.formula_id) << " = " << format_double(rep.value);
  if (rep.is_complex) out << (rep.value_im < 0 ? " - " : " + ") << format_double(std::abs(rep.value_im)) << "i";
  out << "\n";
  return kExitOk;
}

int cmd_verify(const VerifyOpts& o, int jobs, std::ostream& out, std::ostream& err) {
  const auto t0 = Clock::now();
  const std::optional<Suite> suite = parse_suite(o.suite);
  if (!suite) throw Usage("unknown suite '" + o.suite + "'");
  SuiteParams sp;
  sp.k = o.k;
  sp.m = o.m;
  sp.a = o.a;
  sp.grid_size = o.grid;
  sp.jobs = jobs;
  err << "verify suite " << o.suite << "\n";
  const std::vector<CheckReport> reports = run_suite(*suite, sp);
  bool all = true;
  for (const auto& r : reports) all = all && r.passed;
  if (o.format == "json") {
    Json params;
    params["suite"] = o.suite;
    params["k"] = o.k ? Json(*o.k) : Json(nullptr);
    params["m"] = o.m ? Json(*o.m) : Json(nullptr);
    params["a"] = o.a ? Json(*o.a) : Json(nullptr);
    params["grid"] = o.grid;
    params["jobs"] = jobs;
    Json payload = Json::array();
    for (const auto& r : reports) payload.push_back(to_json(r));
    emit(out, envelope("verify", std::move(params), std::move(payload), ms_since(t0)).dump(2) + "\n", o.out);
  } else {
    std::ostringstream os;
    for (const auto& r : reports) {
      os << (r.passed ? "PASS  " : "FAIL  ") << r.check_id << "  " << r.details << "\n";
    }
    os << (all ? "all " : "") << reports.size() << " checks, " << (all ? "all passed" : "failures present") << "\n";
    emit(out, os.str(), o.out);
  }
  return all ? kExitOk : kExitCheckFailed;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Minimax errors of sign-function approximants with prescribed poles"};
  app.require_subcommand(1);
  int jobs = 0;
  app.add_option("--jobs", jobs, "Worker threads (0 = all cores)")->check(CLI::NonNegativeNumber);

  SolveOpts so;
  auto* solve = app.add_subcommand("solve", "Solve one minimax instance");
  solve->add_option("--k", so.k, "Pole order parameter at 0")->check(CLI::NonNegativeNumber);
  solve->add_option("--m", so.m, "Pole order parameter at infinity")->check(CLI::PositiveNumber);
  solve->add_option("--a", so.a, "Inner endpoint in (0, 1), decimal")->required();
  solve->add_flag("--unweighted", so.unweighted, "Approximate |x|^p by polynomials instead");
  solve->add_option("--p", so.p, "Exponent of |x|^p");
  solve->add_option("--n", so.n, "Polynomial degree (even)");
  solve->add_option("--prec-bits", so.prec_bits, "Mantissa bits (default: precision rule)");
  solve->add_option("--tol", so.tol, "Levelness tolerance");
  solve->add_option("--max-iter", so.max_iter, "Exchange iteration limit")->check(CLI::PositiveNumber);
  solve->add_flag("--allow-degenerate", so.allow_degenerate, "Admit a <= 0.01 or a >= 0.99");
  solve->add_flag("--parallel", so.parallel, "Use the OpenMP residual kernels");
  solve->add_option("--format", so.format)->check(CLI::IsMember({"text", "json"}));
  solve->add_option("--out", so.out, "Write to file instead of stdout");

  SweepOpts sw;
  auto* sweep = app.add_subcommand("sweep", "Convergence table over m");
  sweep->add_option("--k", sw.k)->required()->check(CLI::NonNegativeNumber);
  sweep->add_option("--a", sw.a)->required();
  sweep->add_option("--m-from", sw.m_from)->required();
  sweep->add_option("--m-to", sw.m_to)->required();
  sweep->add_option("--step", sw.step);
  sweep->add_option("--prec-bits", sw.prec_bits, "Minimum mantissa bits");
  sweep->add_option("--format", sw.format)->check(CLI::IsMember({"csv", "json"}));
  sweep->add_option("--out", sw.out);

  AsymptOpts as;
  auto* asympt = app.add_subcommand("asympt", "Evaluate a closed-form asymptotic");
  asympt->add_option("--formula", as.formula)->required();
  for (const char* name : {"k", "m", "a", "p", "n", "q", "L", "z-re", "z-im"}) {
    std::string key = name;
    for (auto& c : key) c = c == '-' ? '_' : c;
    asympt->add_option_function<double>(std::string("--") + name, [&as, key](const double& v) { as.values[key] = v; });
  }
  asympt->add_option("--format", as.format)->check(CLI::IsMember({"text", "json"}));

  VerifyOpts vo;
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("--suite", vo.suite);
  verify->add_option("--k", vo.k);
  verify->add_option("--m", vo.m);
  verify->add_option("--a", vo.a);
  verify->add_option("--grid", vo.grid);
  verify->add_option("--format", vo.format)->check(CLI::IsMember({"text", "json"}));
  verify->add_option("--out", vo.out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*solve) {
      if (so.unweighted && (solve->count("--k") || solve->count("--m"))) throw Usage("--k/--m do not apply with --unweighted");
      if (!so.unweighted && (solve->count("--p") || solve->count("--n"))) throw Usage("--p/--n need --unweighted");
      return cmd_solve(so, out, err);
    }
    if (*sweep) return cmd_sweep(sw, jobs, out, err);
    if (*asympt) return cmd_asympt(as, out);
    return cmd_verify(vo, jobs, out, err);
  } catch (const ConvergenceError& e) {
    err << "error: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const PrecisionError& e) {
    err << "error: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitNumerical;
  }
}

}  // namespace zolo
