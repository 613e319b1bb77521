#pragma once

// JSON and CSV rendering of solver results, tables, check reports and
// formula evaluations.

#include <cstdint>
#include <string>

#include "json.hpp"
#include "zolo/asymptotics.hpp"
#include "zolo/mp_value.hpp"
#include "zolo/problem.hpp"
#include "zolo/remez.hpp"
#include "zolo/verification.hpp"

namespace zolo {

using Json = nlohmann::ordered_json;

inline constexpr const char* kToolVersion = "0.1.0";

/// Shortest decimal that parses back to the same double.
std::string format_double(double v);

/// At least 17 significant digits, more when the precision calls for it.
std::string format_mp(const MPValue& v);

/// {"value": decimal string, "prec_bits": n}
Json to_json(const MPValue& v);
Json to_json(const ProblemSpec& spec);
/// L, B = arccosh(1/L), alternation, Chebyshev coefficients and, for the
/// weighted problem, the Laurent coefficients.
Json to_json(const EquiSolution& sol, const ProblemSpec& spec);
Json to_json(const ConvergenceTable& table);
Json to_json(const CheckReport& report);
Json to_json(const AsymptoticReport& report);

Json envelope(const std::string& command, Json params, Json payload, std::int64_t elapsed_ms);

/// Header "<index>,L,normalized,predicted,ratio,B,B_predicted,B_diff", one row per line.
std::string csv_header(const ConvergenceTable& table);
std::string csv_row(const ConvergenceRow& row);
std::string to_csv(const ConvergenceTable& table);

}  // namespace zolo
