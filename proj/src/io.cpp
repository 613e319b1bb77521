#include "zolo/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace zolo {

std::string format_double(double v) {
  if (!std::isfinite(v)) return std::isnan(v) ? "nan" : (v > 0 ? "inf" : "-inf");
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string format_mp(const MPValue& v) { return v.to_string(0); }

namespace {

std::string mp17(const MPValue& v) {
  char buf[128];
  mpfr_snprintf(buf, sizeof buf, "%.17Rg", v.raw());
  return buf;
}

std::string d17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

Json measured_json(const std::vector<std::pair<std::string, double>>& kv) {
  Json out = Json::object();
  for (const auto& [k, v] : kv) out[k] = v;
  return out;
}

}  // namespace

Json to_json(const MPValue& v) {
  Json j;
  j["value"] = format_mp(v);
  j["prec_bits"] = static_cast<std::int64_t>(v.bits());
  return j;
}

Json to_json(const ProblemSpec& spec) {
  Json j;
  j["kind"] = to_string(spec.kind);
  if (spec.kind == ProblemKind::WeightedSgn) {
    j["k"] = spec.k;
    j["m"] = spec.m;
  } else {
    j["p"] = spec.p;
    j["n"] = spec.n;
  }
  j["a"] = to_json(spec.a);
  j["prec_bits"] = static_cast<std::int64_t>(working_precision(spec));
  j["level_tol"] = spec.level_tol;
  j["max_iterations"] = spec.max_iterations;
  j["allow_degenerate"] = spec.allow_degenerate;
  return j;
}

Json to_json(const EquiSolution& sol, const ProblemSpec& spec) {
  Json j;
  j["kind"] = to_string(sol.kind);
  j["L"] = to_json(sol.L);
  j["B"] = to_json(b_from_error(sol.L));
  j["iterations"] = sol.iterations;
  j["levelness"] = sol.levelness.to_double();
  j["prec_bits"] = static_cast<std::int64_t>(sol.bits);
  Json alt = Json::array();
  for (const auto& p : sol.alternation) {
    Json e;
    e["x"] = format_mp(p.x);
    e["t"] = format_mp(p.t);
    e["residual"] = format_mp(p.residual);
    e["sign"] = p.sign;
    alt.push_back(std::move(e));
  }
  j["alternation"] = std::move(alt);
  Json cheb;
  cheb["variable"] = "t = x^2";
  cheb["lo"] = format_mp(sol.q.lo());
  cheb["hi"] = format_mp(sol.q.hi());
  Json cs = Json::array();
  for (const auto& c : sol.q.coeffs()) cs.push_back(format_mp(c));
  cheb["coeffs"] = std::move(cs);
  j["chebyshev"] = std::move(cheb);
  if (sol.kind == ProblemKind::WeightedSgn) {
    const RationalExpansion r = expand_rational(sol, spec);
    Json lj = Json::array();
    for (const auto& [e, c] : r.laurent) {
      Json t;
      t["power"] = e;
      t["coeff"] = format_mp(c);
      lj.push_back(std::move(t));
    }
    j["laurent"] = std::move(lj);
  }
  return j;
}

Json to_json(const ConvergenceTable& table) {
  Json j;
  j["index"] = table.index_name;
  Json rows = Json::array();
  for (const auto& r : table.rows) {
    Json e;
    e[table.index_name] = r.index;
    e["L"] = to_json(r.L);
    e["normalized"] = r.normalized;
    e["predicted"] = r.predicted;
    e["ratio"] = r.ratio;
    e["B"] = r.B;
    e["B_predicted"] = r.B_predicted;
    e["B_diff"] = r.B_diff;
    rows.push_back(std::move(e));
  }
  j["rows"] = std::move(rows);
  j["failure"] = table.failure ? Json(*table.failure) : Json(nullptr);
  return j;
}

Json to_json(const CheckReport& report) {
  Json j;
  j["check_id"] = report.check_id;
  j["passed"] = report.passed;
  j["measured"] = measured_json(report.measured);
  j["tolerance"] = report.tolerance;
  j["details"] = report.details;
  return j;
}

Json to_json(const AsymptoticReport& report) {
  Json j;
  j["formula_id"] = to_string(report.formula_id);
  j["inputs"] = measured_json(report.inputs);
  if (report.is_complex) {
    j["value"] = {{"re", report.value}, {"im", report.value_im}};
  } else {
    j["value"] = report.value;
  }
  return j;
}

Json envelope(const std::string& command, Json params, Json payload, std::int64_t elapsed_ms) {
  Json j;
  j["tool_version"] = kToolVersion;
  j["command"] = command;
  j["params"] = std::move(params);
  j["payload"] = std::move(payload);
  j["elapsed_ms"] = elapsed_ms;
  return j;
}

std::string csv_header(const ConvergenceTable& table) {
  return table.index_name + ",L,normalized,predicted,ratio,B,B_predicted,B_diff";
}

std::string csv_row(const ConvergenceRow& r) {
  std::ostringstream os;
  os << r.index << ',' << mp17(r.L) << ',' << d17(r.normalized) << ',' << d17(r.predicted) << ',' << d17(r.ratio)
     << ',' << d17(r.B) << ',' << d17(r.B_predicted) << ',' << d17(r.B_diff);
  return os.str();
}

std::string to_csv(const ConvergenceTable& table) {
  std::string out = csv_header(table) + "\n";
  for (const auto& r : table.rows) out += csv_row(r) + "\n";
  return out;
}

}  // namespace zolo
