#pragma once

#include "dfc/dfc.hpp"

#include <json.hpp>

#include <string>

namespace dfc::cli {

using nlohmann::json;

/// Problem file contents. The problem is already mapped to [-1, 1].
struct ProblemFile {
    IvpProblem ivp;
    Rational a = -1, b = 1;
};

Rational parse_json_rational(const json& v);
json rational_json(const Rational& q);

ProblemFile parse_problem(const json& j);
ProblemFile read_problem(const std::string& path);

/// Accepts a bare array of rationals or an object with a "coefficients" array.
ChebPoly parse_coeffs(const json& j);
ChebPoly read_coeffs(const std::string& path);
json coeffs_json(const ChebPoly& p, int digits);

json report_json(const ValidationReport& r, int digits);

/// Comma-separated rationals, low degree first ("2,-1" is 2 - x).
Poly parse_poly_list(const std::string& text);

std::string read_file(const std::string& path);
/// Writes to a temporary file in the same directory, then renames it over `path`.
void write_atomic(const std::string& path, const std::string& content);

} // namespace dfc::cli
