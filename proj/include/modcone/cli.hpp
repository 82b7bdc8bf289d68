#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "modcone/cone.hpp"
#include "modcone/descent.hpp"
#include "modcone/function.hpp"
#include "modcone/ray_oracle.hpp"

namespace modcone::cli {

using ordered_json = nlohmann::ordered_json;

/// A parsed spec file: the closed-form function, where to analyse it, and
/// how far to expand it.
///
///   {"form": "polynomial", "coeffs": [[re, im], ...], "center": [re, im], "order": N}
///   {"form": "rational", "numer": [...], "denom": [...], ...}
///   {"form": "exp", "inner": {<polynomial or rational spec>}, ...}
///
/// Coefficients are in powers of z (about 0). "center" defaults to 0 and
/// "order" to 2 * degree + 1. Polynomials are always kept exact.
struct FunctionSpec {
  ComplexFunction function;
  complex center{};
  int truncation_order = 1;

  PowerSeries series() const { return function.expand(center, truncation_order); }
};

FunctionSpec parse_function_spec(const nlohmann::json& doc);
FunctionSpec load_function_spec(const std::string& path);

/// Rounds to 15 significant digits so reports are stable across runs.
double round15(double v);

ordered_json to_json(const ConeDecomposition& d);
ordered_json to_json(const RayClassification& r);
ordered_json to_json(const AgreementReport& r);
ordered_json to_json(const SolverResult& r);

std::string to_text(const ConeDecomposition& d);
std::string to_text(const RayClassification& r);
std::string to_text(const AgreementReport& r);
std::string to_text(const SolverResult& r);

/// Entry point. Exit codes: 0 success, 1 verification mismatch or
/// non-convergence, 2 input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace modcone::cli
