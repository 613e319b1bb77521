#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "zolo/mp_value.hpp"
#include "zolo/numerics.hpp"
#include "zolo/problem.hpp"
#include "zolo/remez.hpp"

namespace zolo {

struct CheckReport {
  std::string check_id;
  bool passed = false;
  std::vector<std::pair<std::string, double>> measured;
  double tolerance = 0.0;
  std::string details;
};

struct ConvergenceRow {
  int index = 0;  // m, or l for the uniform |x|^p table
  MPValue L;
  double normalized = 0.0;
  double predicted = 0.0;
  double ratio = 0.0;
  double B = 0.0;
  double B_predicted = 0.0;
  double B_diff = 0.0;
};

struct ConvergenceTable {
  std::string index_name = "m";
  std::vector<ConvergenceRow> rows;
  /// Set when a solve failed; rows then stop before the failing index.
  std::optional<std::string> failure;
};

/// Count N + 2, strict alternation, levelness, endpoint membership, agreement
/// of the stored residuals with a fresh evaluation, and no excess over L on a
/// dense probe grid.
CheckReport check_equioscillation(const EquiSolution& sol, const ProblemSpec& spec);

/// Relative |L^k_m(a) - L^m_k(a)| <= tol.
CheckReport check_symmetry(int k, int m, const MPValue& a, double tol, Bits min_bits = 0);

/// Relative |L^m_m(a) - L^0_m(2 sqrt(a)/(1+a))| <= tol.
CheckReport check_diagonal(int m, const MPValue& a, double tol, Bits min_bits = 0);

/// For the p = 1 uniform problem: every gap between consecutive alternation
/// points has integral of |P'(x) - 1| equal to 2L.
CheckReport check_area_identity(const EquiSolution& sol, const ProblemSpec& spec, const Quadrature& quad);

struct CurveOptions {
  double asym_tol = 0.05;
  double v_threshold = 20.0;
  double identity_tol = 1e-10;
};

/// 64 log-spaced points from 1e-3 to 1e6.
std::vector<double> default_y_grid();

/// Curve on the imaginary axis for the p = 1 uniform problem: w = arccos((P(iy) - iy)/L)
/// tracked continuously from y -> 0+.
CheckReport check_curve_equation(const EquiSolution& sol, const ProblemSpec& spec, const std::vector<double>& y_grid,
                                 const CurveOptions& opts = {});

/// Relative |grid_oracle - L| <= tol.
CheckReport check_oracle(const ProblemSpec& spec, std::size_t grid_size, double tol);

/// Weighted sgn sweep over m with normalized error vs the limit constant and
/// B = arccosh(1/L) vs the B-surrogate. Rows are solved on `jobs` threads
/// (0 = all cores) at max(min_bits, default precision) bits.
ConvergenceTable convergence_table(int k, double a, int m_from, int m_to, int step = 1, Bits min_bits = 0,
                                   int jobs = 0);

/// Uniform |x|^p sweep over l (degree 2l) against the closed-form error asymptotic.
ConvergenceTable app1_convergence_table(double p, double a, int l_from, int l_to, Bits min_bits = 0, int jobs = 0);

/// |ratio - 1| strictly decreasing over the last `tail` rows and <= final_tol
/// at the last row.
CheckReport check_ratio_tail(const ConvergenceTable& table, int tail, double final_tol, const std::string& id);

/// |B_diff| strictly decreasing over the last `tail` rows and <= final_tol.
CheckReport check_b_tail(const ConvergenceTable& table, int tail, double final_tol, const std::string& id);

enum class Suite { Equioscillation, Symmetry, Diagonal, Area, Curve, Oracle, Convergence, App1, All };

/// Parses "equioscillation", ..., "all"; nullopt otherwise.
std::optional<Suite> parse_suite(const std::string& name);
std::string to_string(Suite suite);

/// Optional single-instance overrides; unset fields use the built-in batteries.
struct SuiteParams {
  std::optional<int> k;
  std::optional<int> m;
  std::optional<double> a;
  std::size_t grid_size = 4000;
  int jobs = 0;
};

/// Runs the checks of a suite concurrently; reports come back in declaration order.
std::vector<CheckReport> run_suite(Suite suite, const SuiteParams& params);

}  // namespace zolo
