#include "zolo/verification.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <functional>
#include <numbers>
#include <sstream>

#include "zolo/asymptotics.hpp"
#include "zolo/cheb_poly.hpp"
#include "zolo/grid_oracle.hpp"
#include "zolo/kernels.hpp"

namespace zolo {

namespace {

double rel_diff(const MPValue& x, const MPValue& y) { return (abs(x - y) / max(abs(x), abs(y))).to_double(); }

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

}  // namespace

CheckReport check_equioscillation(const EquiSolution& sol, const ProblemSpec& spec) {
  CheckReport rep;
  std::ostringstream id;
  if (spec.kind == ProblemKind::WeightedSgn) {
    id << "equioscillation(k=" << spec.k << ",m=" << spec.m << ",a=" << fmt(spec.a.to_double()) << ")";
  } else {
    id << "equioscillation(p=" << fmt(spec.p) << ",n=" << spec.n << ",a=" << fmt(spec.a.to_double()) << ")";
  }
  rep.check_id = id.str();
  rep.tolerance = spec.level_tol;
  std::vector<std::string> problems;

  const std::size_t expected = static_cast<std::size_t>(spec.degree()) + 2;
  rep.measured.emplace_back("points", static_cast<double>(sol.alternation.size()));
  rep.measured.emplace_back("expected_points", static_cast<double>(expected));
  if (sol.alternation.size() != expected) problems.push_back("alternation has the wrong number of points");

  for (std::size_t i = 1; i < sol.alternation.size(); ++i) {
    if (sol.alternation[i].sign != -sol.alternation[i - 1].sign) {
      problems.push_back("signs do not alternate at index " + std::to_string(i));
      break;
    }
  }

  rep.measured.emplace_back("L", sol.L.to_double());
  rep.measured.emplace_back("levelness", sol.levelness.to_double());
  if (sol.levelness > spec.level_tol) problems.push_back("levelness above tolerance");

  const XAlternation xs = alternation_in_x(sol);
  rep.measured.emplace_back("starts_at_a", xs.starts_at_a ? 1.0 : 0.0);
  rep.measured.emplace_back("ends_at_one", xs.ends_at_one ? 1.0 : 0.0);
  if (xs.anomaly()) problems.push_back("endpoint missing from the alternation set");

  // Residuals recomputed from Q, independent of what the solver stored.
  const ReducedProblem prob(spec, sol.bits);
  const MPValue band = sol.L * spec.level_tol;
  double worst_point = 0.0;
  for (const auto& p : sol.alternation) {
    const MPValue r = prob.residual(p.t, sol.q(p.t));
    const MPValue off = abs(abs(r) - sol.L);
    worst_point = std::max(worst_point, (off / sol.L).to_double());
    if (off > band || r.sign() != p.sign) {
      problems.push_back("residual at t=" + p.t.to_string(8) + " is not +-L with the recorded sign");
      break;
    }
  }
  rep.measured.emplace_back("max_point_deviation", worst_point);

  const std::vector<MPValue> probes = chebyshev_lobatto(32 * expected, prob.lo(), prob.hi());
  const std::vector<MPValue> r = kernels::residual_scan_serial(prob, sol.q, probes);
  MPValue peak(sol.bits);
  for (const auto& v : r) peak = max(peak, abs(v));
  const double excess = ((peak - sol.L) / sol.L).to_double();
  rep.measured.emplace_back("probe_excess", excess);
  if (peak > sol.L * (1.0 + spec.level_tol)) problems.push_back("residual exceeds L on the probe grid");

  rep.passed = problems.empty();
  rep.details = rep.passed ? "alternation verified at " + std::to_string(expected) + " points" : problems.front();
  return rep;
}

CheckReport check_symmetry(int k, int m, const MPValue& a, double tol, Bits min_bits) {
  ProblemSpec s1 = ProblemSpec::weighted(k, m, a);
  ProblemSpec s2 = ProblemSpec::weighted(m, k, a);
  const Bits bits = std::max({min_bits, default_precision(s1), default_precision(s2)});
  s1.mantissa_bits = s2.mantissa_bits = bits;
  const EquiSolution e1 = remez_solve(s1);
  const EquiSolution e2 = remez_solve(s2);
  CheckReport rep;
  rep.check_id = "symmetry(k=" + std::to_string(k) + ",m=" + std::to_string(m) + ",a=" + fmt(a.to_double()) + ")";
  rep.tolerance = tol;
  const double d = rel_diff(e1.L, e2.L);
  rep.measured = {{"L_km", e1.L.to_double()}, {"L_mk", e2.L.to_double()}, {"rel_diff", d}};
  rep.passed = d <= tol;
  rep.details = rep.passed ? "L^k_m = L^m_k" : "symmetric pair disagrees";
  return rep;
}

CheckReport check_diagonal(int m, const MPValue& a, double tol, Bits min_bits) {
  ProblemSpec diag = ProblemSpec::weighted(m, m, a);
  const Bits bits = std::max(min_bits, default_precision(diag));
  const MPValue mapped = diag_map(MPValue(a, bits + 64));
  ProblemSpec poly = ProblemSpec::weighted(0, m, mapped);
  poly.allow_degenerate = true;  // the mapped point can sit above 0.99
  const Bits bits_all = std::max(bits, default_precision(poly));
  diag.mantissa_bits = poly.mantissa_bits = bits_all;
  const EquiSolution e1 = remez_solve(diag);
  const EquiSolution e2 = remez_solve(poly);
  CheckReport rep;
  rep.check_id = "diagonal(m=" + std::to_string(m) + ",a=" + fmt(a.to_double()) + ")";
  rep.tolerance = tol;
  const double d = rel_diff(e1.L, e2.L);
  rep.measured = {{"L_mm", e1.L.to_double()}, {"L_0m_mapped", e2.L.to_double()}, {"a_mapped", mapped.to_double()},
                  {"rel_diff", d}};
  rep.passed = d <= tol;
  rep.details = rep.passed ? "L^m_m(a) = L^0_m(2 sqrt(a)/(1+a))" : "diagonal identity violated";
  return rep;
}

CheckReport check_area_identity(const EquiSolution& sol, const ProblemSpec& spec, const Quadrature& quad) {
  if (spec.kind != ProblemKind::UnweightedAbsP || spec.p != 1.0) {
    throw std::invalid_argument("check_area_identity needs the p = 1 uniform problem");
  }
  CheckReport rep;
  rep.check_id = "area(n=" + std::to_string(spec.n) + ",a=" + fmt(spec.a.to_double()) + ")";
  const ChebPoly dq = sol.q.derivative();
  // P(x) = Q(x^2), P'(x) = 2 x Q'(x^2)
  const ScalarFn integrand = [&](const MPValue& x) { return abs(ldexp(x, 1) * dq(x * x) - 1.0); };
  const XAlternation xs = alternation_in_x(sol);
  const MPValue two_l = ldexp(sol.L, 1);
  double worst = 0.0;
  double worst_tol = 0.0;
  MPValue total(sol.bits);
  bool ok = true;
  std::string note;
  for (std::size_t i = 1; i < xs.x.size(); ++i) {
    const QuadResult qr = integrate(integrand, xs.x[i - 1], xs.x[i], quad);
    if (!qr.ok) {
      ok = false;
      note = "quadrature budget exhausted on gap " + std::to_string(i);
    }
    total += qr.value;
    const double dev = abs(qr.value - two_l).to_double();
    const double tol = (quad.abs_tol + sol.levelness * (xs.x[i] - xs.x[i - 1]) * 10.0).to_double();
    rep.measured.emplace_back("gap" + std::to_string(i) + "_integral", qr.value.to_double());
    worst = std::max(worst, dev);
    worst_tol = std::max(worst_tol, tol);
    if (dev > tol) {
      ok = false;
      if (note.empty()) note = "gap " + std::to_string(i) + " integral differs from 2L by " + fmt(dev);
    }
  }
  const double gaps = static_cast<double>(xs.x.size() - 1);
  rep.measured.emplace_back("two_L", two_l.to_double());
  rep.measured.emplace_back("max_abs_dev", worst);
  rep.measured.emplace_back("total", total.to_double());
  rep.measured.emplace_back("total_expected", two_l.to_double() * gaps);
  rep.tolerance = worst_tol;
  rep.passed = ok;
  rep.details = ok ? "all " + std::to_string(xs.x.size() - 1) + " gaps integrate to 2L" : note;
  return rep;
}

std::vector<double> default_y_grid() {
  std::vector<double> g(64);
  for (std::size_t i = 0; i < g.size(); ++i) g[i] = std::pow(10.0, -3.0 + 9.0 * static_cast<double>(i) / 63.0);
  return g;
}

CheckReport check_curve_equation(const EquiSolution& sol, const ProblemSpec& spec, const std::vector<double>& y_grid,
                                 const CurveOptions& opts) {
  if (spec.kind != ProblemKind::UnweightedAbsP || spec.p != 1.0) {
    throw std::invalid_argument("check_curve_equation needs the p = 1 uniform problem");
  }
  // Where v is large, u sits within |zeta|^-1 of a multiple of pi; carry enough
  // bits to resolve that gap, or sin u loses all of its significance.
  Bits bits = sol.bits;
  if (!y_grid.empty()) {
    const double y_max = *std::max_element(y_grid.begin(), y_grid.end());
    const MPValue y(y_max, sol.bits);
    const MPValue z_max = hypot(sol.q(-(y * y)), y) / sol.L;
    if (z_max > 1.0) bits += static_cast<Bits>(std::ceil(log(z_max).to_double() / std::log(2.0))) + 64;
  }
  const MPValue L(sol.L, bits);
  const MPValue two_pi = ldexp(pi(bits), 1);
  const double strip = (spec.n / 2 + 1) * std::numbers::pi;

  CheckReport rep;
  rep.check_id = "curve(n=" + std::to_string(spec.n) + ",a=" + fmt(spec.a.to_double()) + ")";
  rep.tolerance = opts.identity_tol;
  std::vector<std::string> problems;

  const MPValue p0 = sol.q(MPValue(bits));  // evaluated at the raised width
  rep.measured.emplace_back("P0", p0.to_double());
  rep.measured.emplace_back("L", L.to_double());
  if (!(p0 > L)) problems.push_back("P(0) <= L");

  // y -> 0+: w sits on the left edge u = 0 at height arccosh(P(0)/L).
  MPValue prev_u(bits);
  MPValue prev_v = p0 > L ? acosh(p0 / L) : MPValue(bits);
  double worst_cos = 0.0, worst_sin = 0.0, worst_asym = 0.0;
  int asym_points = 0;
  bool v_increasing = true, p_decreasing = true, ambiguous = false;
  MPValue last_v(bits), last_p(bits);

  for (std::size_t i = 0; i < y_grid.size(); ++i) {
    const MPValue y(y_grid[i], bits);
    const MPValue p_iy = sol.q(-(y * y));
    const MPComplex zeta{p_iy / L, -y / L};
    const MPComplex w0 = principal_arccos(zeta);
    if (w0.im < 0.0) {
      problems.push_back("principal arccos left the v >= 0 half");
      break;
    }
    // Branches with v >= 0: u0 + 2 pi j inside the strip (0, (n/2+1) pi).
    MPValue best_u = w0.re;
    MPValue best_d(bits);
    bool have = false;
    for (int j = 0; (w0.re + two_pi * static_cast<double>(j)).to_double() < strip; ++j) {
      MPValue u = w0.re + two_pi * static_cast<double>(j);
      if (!(u > 0.0)) continue;
      MPValue d = hypot(u - prev_u, w0.im - prev_v);
      if (!have || d < best_d) {
        if (have && abs(d - best_d) < 1e-12) ambiguous = true;
        best_u = std::move(u);
        best_d = std::move(d);
        have = true;
      }
    }
    if (!have) {
      problems.push_back("no branch of arccos inside the strip at y=" + fmt(y_grid[i]));
      break;
    }
    const MPComplex w{best_u, w0.im};
    const MPComplex back = cos(w);
    const double cos_err = (hypot(back.re - zeta.re, back.im - zeta.im) / abs(zeta)).to_double();
    const double sin_err = (abs(L * sin(w.re) * sinh(w.im) - y) / y).to_double();
    worst_cos = std::max(worst_cos, cos_err);
    worst_sin = std::max(worst_sin, sin_err);

    if (i > 0) {
      if (!(w.im > last_v)) v_increasing = false;
      if (!(p_iy < last_p)) p_decreasing = false;
    }
    if (w.im >= opts.v_threshold) {
      ++asym_points;
      worst_asym = std::max(worst_asym, abs(w.re - pi(bits)).to_double());
    }
    last_v = w.im;
    last_p = p_iy;
    prev_u = w.re;
    prev_v = w.im;
  }

  rep.measured.emplace_back("max_cos_identity_err", worst_cos);
  rep.measured.emplace_back("max_sin_identity_err", worst_sin);
  rep.measured.emplace_back("asymptote_points", asym_points);
  rep.measured.emplace_back("max_u_minus_pi", worst_asym);
  rep.measured.emplace_back("v_final", last_v.to_double());
  // Branch self-consistency is asserted before the shape properties.
  if (worst_cos > opts.identity_tol || worst_sin > opts.identity_tol) {
    problems.insert(problems.begin(), "branch self-consistency above tolerance");
  }
  if (!v_increasing) problems.push_back("v(y) not strictly increasing");
  if (!p_decreasing) problems.push_back("P(iy) not strictly decreasing");
  if (asym_points == 0) problems.push_back("grid never reaches v >= " + fmt(opts.v_threshold));
  if (worst_asym > opts.asym_tol) problems.push_back("u does not approach pi where v is large");

  rep.passed = problems.empty();
  rep.details = rep.passed ? "curve equation and shape verified on " + std::to_string(y_grid.size()) + " points"
                           : problems.front();
  if (ambiguous) rep.details += " (branch tie encountered)";
  return rep;
}

CheckReport check_oracle(const ProblemSpec& spec, std::size_t grid_size, double tol) {
  const EquiSolution sol = remez_solve(spec);
  const GridOracleResult g = grid_oracle(spec, grid_size);
  CheckReport rep;
  std::ostringstream id;
  if (spec.kind == ProblemKind::WeightedSgn) {
    id << "oracle(k=" << spec.k << ",m=" << spec.m << ",a=" << fmt(spec.a.to_double()) << ")";
  } else {
    id << "oracle(p=" << fmt(spec.p) << ",n=" << spec.n << ",a=" << fmt(spec.a.to_double()) << ")";
  }
  rep.check_id = id.str();
  rep.tolerance = tol;
  const double d = ((sol.L - g.error) / sol.L).to_double();
  rep.measured = {{"L_remez", sol.L.to_double()},
                  {"L_grid", g.error.to_double()},
                  {"rel_gap", d},
                  {"grid_size", static_cast<double>(grid_size)},
                  {"exchanges", static_cast<double>(g.exchanges)}};
  // The discrete problem can only be easier, up to rounding.
  const bool sandwich = d >= -1e-20;
  rep.passed = std::abs(d) <= tol && sandwich;
  rep.details = rep.passed ? "grid oracle agrees with Remez" : (sandwich ? "gap above tolerance" : "grid value exceeds L");
  return rep;
}

namespace {

template <class Fill>
ConvergenceTable sweep(std::vector<int> indices, const std::string& index_name, int jobs, Fill fill) {
  ConvergenceTable table;
  table.index_name = index_name;
  const auto n = static_cast<std::ptrdiff_t>(indices.size());
  std::vector<ConvergenceRow> rows(indices.size());
  std::vector<std::string> errors(indices.size());
  const int threads = jobs > 0 ? jobs : kernels::max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(threads)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    try {
      rows[static_cast<std::size_t>(i)] = fill(indices[static_cast<std::size_t>(i)]);
    } catch (const std::exception& e) {
      errors[static_cast<std::size_t>(i)] = e.what();
      if (errors[static_cast<std::size_t>(i)].empty()) errors[static_cast<std::size_t>(i)] = "solve failed";
    }
  }
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (!errors[i].empty()) {
      table.failure = index_name + "=" + std::to_string(indices[i]) + ": " + errors[i];
      break;
    }
    table.rows.push_back(std::move(rows[i]));
  }
  return table;
}

}  // namespace

ConvergenceTable convergence_table(int k, double a, int m_from, int m_to, int step, Bits min_bits, int jobs) {
  if (m_from < 1 || m_to < m_from || step < 1) throw std::invalid_argument("empty or invalid m range");
  const MPValue a_mp(a, 53);
  const Bits bits = std::max(min_bits, default_precision(ProblemSpec::weighted(k, m_to, a_mp)));
  const double predicted = limit_rhs_eq01(k, a);
  std::vector<int> ms;
  for (int m = m_from; m <= m_to; m += step) ms.push_back(m);
  return sweep(ms, "m", jobs, [&](int m) {
    ProblemSpec spec = ProblemSpec::weighted(k, m, a_mp);
    spec.mantissa_bits = bits;
    const EquiSolution sol = remez_solve(spec);
    ConvergenceRow row;
    row.index = m;
    row.L = sol.L;
    row.normalized = normalized_error(k, m, a_mp, sol.L).to_double();
    row.predicted = predicted;
    row.ratio = row.normalized / predicted;
    row.B = b_from_error(sol.L).to_double();
    row.B_predicted = b_asymptote(k, m, a);
    row.B_diff = row.B - row.B_predicted;
    return row;
  });
}

ConvergenceTable app1_convergence_table(double p, double a, int l_from, int l_to, Bits min_bits, int jobs) {
  if (l_from < 1 || l_to < l_from) throw std::invalid_argument("empty or invalid l range");
  const MPValue a_mp(a, 53);
  const Bits bits = std::max(min_bits, default_precision(ProblemSpec::unweighted(p, 2 * l_to, a_mp)));
  const double s = -p / 2.0;
  // a^(-s-1) (1+a)^2 / (2 |Gamma(s)|): the l-independent part of the asymptotic.
  const double constant = std::pow(a, -s - 1.0) * (1.0 + a) * (1.0 + a) / (2.0 * std::abs(gamma_real(s)));
  std::vector<int> ls;
  for (int l = l_from; l <= l_to; ++l) ls.push_back(l);
  return sweep(ls, "l", jobs, [&](int l) {
    ProblemSpec spec = ProblemSpec::unweighted(p, 2 * l, a_mp);
    spec.mantissa_bits = bits;
    const EquiSolution sol = remez_solve(spec);
    const MPValue av(a, bits);
    const MPValue scale = exp(log((1.0 + av) / (1.0 - av)) * (l + 1.0) + log(MPValue(static_cast<long>(l), bits)) * (1.0 - s));
    const double asym = app1_en_asymptote(p, a, 2 * l);
    ConvergenceRow row;
    row.index = l;
    row.L = sol.L;
    row.normalized = (sol.L * scale).to_double();
    row.predicted = constant;
    row.ratio = row.normalized / constant;
    row.B = b_from_error(sol.L).to_double();
    row.B_predicted = b_from_error(asym);
    row.B_diff = row.B - row.B_predicted;
    return row;
  });
}

namespace {

template <class Metric>
CheckReport tail_check(const ConvergenceTable& table, int tail, double final_tol, const std::string& id,
                       Metric metric, const std::string& what) {
  CheckReport rep;
  rep.check_id = id;
  rep.tolerance = final_tol;
  if (table.failure) {
    rep.passed = false;
    rep.details = "sweep failed: " + *table.failure;
    return rep;
  }
  if (static_cast<int>(table.rows.size()) < tail || tail < 2) {
    rep.passed = false;
    rep.details = "need at least " + std::to_string(tail) + " rows";
    return rep;
  }
  const std::size_t start = table.rows.size() - static_cast<std::size_t>(tail);
  int violations = 0;
  for (std::size_t i = start + 1; i < table.rows.size(); ++i) {
    if (!(metric(table.rows[i]) < metric(table.rows[i - 1]))) ++violations;
  }
  const double final_dev = metric(table.rows.back());
  rep.measured = {{"first_tail_dev", metric(table.rows[start])},
                  {"final_dev", final_dev},
                  {"final_index", static_cast<double>(table.rows.back().index)},
                  {"monotone_violations", static_cast<double>(violations)}};
  rep.passed = violations == 0 && final_dev <= final_tol;
  rep.details = rep.passed ? what + " decreases over the last " + std::to_string(tail) + " rows"
                           : (violations ? what + " is not monotone in the tail" : what + " above tolerance at the last row");
  return rep;
}

}  // namespace

CheckReport check_ratio_tail(const ConvergenceTable& table, int tail, double final_tol, const std::string& id) {
  return tail_check(table, tail, final_tol, id, [](const ConvergenceRow& r) { return std::abs(r.ratio - 1.0); },
                    "|ratio - 1|");
}

CheckReport check_b_tail(const ConvergenceTable& table, int tail, double final_tol, const std::string& id) {
  return tail_check(table, tail, final_tol, id, [](const ConvergenceRow& r) { return std::abs(r.B_diff); },
                    "|B - B_predicted|");
}

std::optional<Suite> parse_suite(const std::string& name) {
  static const std::pair<const char*, Suite> names[] = {
      {"equioscillation", Suite::Equioscillation}, {"symmetry", Suite::Symmetry}, {"diagonal", Suite::Diagonal},
      {"area", Suite::Area}, {"curve", Suite::Curve}, {"oracle", Suite::Oracle},
      {"convergence", Suite::Convergence}, {"app1", Suite::App1}, {"all", Suite::All}};
  for (const auto& [n, s] : names) {
    if (name == n) return s;
  }
  return std::nullopt;
}

std::string to_string(Suite suite) {
  switch (suite) {
    case Suite::Equioscillation: return "equioscillation";
    case Suite::Symmetry: return "symmetry";
    case Suite::Diagonal: return "diagonal";
    case Suite::Area: return "area";
    case Suite::Curve: return "curve";
    case Suite::Oracle: return "oracle";
    case Suite::Convergence: return "convergence";
    case Suite::App1: return "app1";
    case Suite::All: return "all";
  }
  return "unknown";
}

namespace {

using Job = std::function<std::vector<CheckReport>()>;

MPValue mp_a(double a) { return MPValue(a, 53); }

void add_jobs(Suite suite, const SuiteParams& sp, std::vector<Job>& jobs) {
  switch (suite) {
    case Suite::Equioscillation: {
      std::vector<ProblemSpec> specs;
      if (sp.k || sp.m || sp.a) {
        specs.push_back(ProblemSpec::weighted(sp.k.value_or(1), sp.m.value_or(2), mp_a(sp.a.value_or(0.5))));
      } else {
        specs.push_back(ProblemSpec::weighted(0, 1, mp("0.333333333333333333333333333333", 128)));
        specs.push_back(ProblemSpec::weighted(1, 2, mp_a(0.5)));
        specs.push_back(ProblemSpec::weighted(2, 6, mp_a(0.5)));
        specs.push_back(ProblemSpec::unweighted(1.0, 2, mp_a(0.5)));
        specs.push_back(ProblemSpec::unweighted(1.0, 12, mp_a(0.4)));
      }
      for (auto& s : specs) {
        jobs.push_back([s] { return std::vector<CheckReport>{check_equioscillation(remez_solve(s), s)}; });
      }
      break;
    }
    case Suite::Symmetry: {
      std::vector<std::pair<int, int>> km = {{1, 2}, {2, 3}};
      std::vector<double> as = {0.3, 0.6};
      if (sp.k || sp.m) km = {{sp.k.value_or(1), sp.m.value_or(2)}};
      if (sp.a) as = {*sp.a};
      for (auto [k, m] : km) {
        for (double a : as) {
          jobs.push_back([k, m, a] { return std::vector<CheckReport>{check_symmetry(k, m, mp_a(a), 1e-9)}; });
        }
      }
      break;
    }
    case Suite::Diagonal: {
      std::vector<int> ms = {1, 2, 3};
      std::vector<double> as = {0.25, 0.5};
      if (sp.m) ms = {*sp.m};
      if (sp.a) as = {*sp.a};
      for (int m : ms) {
        for (double a : as) {
          jobs.push_back([m, a] { return std::vector<CheckReport>{check_diagonal(m, mp_a(a), 1e-9)}; });
        }
      }
      break;
    }
    case Suite::Area:
    case Suite::Curve: {
      const int m = sp.m.value_or(6);
      const double a = sp.a.value_or(0.4);
      const bool area = suite == Suite::Area;
      jobs.push_back([m, a, area] {
        const ProblemSpec s = ProblemSpec::unweighted(1.0, 2 * m, mp_a(a));
        const EquiSolution sol = remez_solve(s);
        if (area) return std::vector<CheckReport>{check_area_identity(sol, s, {MPValue(1e-14, sol.bits), 1 << 16})};
        return std::vector<CheckReport>{check_curve_equation(sol, s, default_y_grid())};
      });
      break;
    }
    case Suite::Oracle: {
      const double a = sp.a.value_or(0.5);
      const std::size_t grid = sp.grid_size;
      for (int k = 0; k <= 2; ++k) {
        if (sp.k && *sp.k != k) continue;
        for (int m = 1; m <= 6; ++m) {
          if (sp.m && *sp.m != m) continue;
          jobs.push_back([k, m, a, grid] {
            return std::vector<CheckReport>{check_oracle(ProblemSpec::weighted(k, m, mp_a(a)), grid, 1e-5)};
          });
        }
      }
      break;
    }
    case Suite::Convergence: {
      const int k = sp.k.value_or(1);
      const double a = sp.a.value_or(0.5);
      const int m_to = sp.m.value_or(40);
      const int inner = sp.jobs;
      jobs.push_back([k, a, m_to, inner] {
        const ConvergenceTable t = convergence_table(k, a, 5, m_to, 1, 256, inner);
        return std::vector<CheckReport>{check_ratio_tail(t, 10, 0.05, "convergence-ratio"),
                                        check_b_tail(t, 10, 0.05, "convergence-B")};
      });
      break;
    }
    case Suite::App1: {
      const double a = sp.a.value_or(0.5);
      const int l_to = sp.m.value_or(40);
      const int inner = sp.jobs;
      jobs.push_back([a, l_to, inner] {
        const ConvergenceTable t = app1_convergence_table(1.0, a, 5, l_to, 0, inner);
        return std::vector<CheckReport>{check_ratio_tail(t, 10, 0.1, "app1-ratio")};
      });
      break;
    }
    case Suite::All:
      for (Suite s : {Suite::Equioscillation, Suite::Symmetry, Suite::Diagonal, Suite::Area, Suite::Curve,
                      Suite::Oracle, Suite::Convergence, Suite::App1}) {
        add_jobs(s, sp, jobs);
      }
      break;
  }
}

}  // namespace

std::vector<CheckReport> run_suite(Suite suite, const SuiteParams& params) {
  std::vector<Job> jobs;
  add_jobs(suite, params, jobs);
  std::vector<std::vector<CheckReport>> results(jobs.size());
  const auto n = static_cast<std::ptrdiff_t>(jobs.size());
  const int threads = params.jobs > 0 ? params.jobs : kernels::max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(threads)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    auto& slot = results[static_cast<std::size_t>(i)];
    try {
      slot = jobs[static_cast<std::size_t>(i)]();
    } catch (const std::exception& e) {
      CheckReport failed;
      failed.check_id = to_string(suite) + "#" + std::to_string(i);
      failed.passed = false;
      failed.details = std::string("numerical failure: ") + e.what();
      slot = {failed};
    }
  }
  std::vector<CheckReport> out;
  for (auto& r : results) {
    for (auto& c : r) out.push_back(std::move(c));
  }
  return out;
}

}  // namespace zolo
