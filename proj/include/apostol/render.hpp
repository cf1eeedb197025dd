#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "apostol/polynomial.hpp"
#include "apostol/report.hpp"

namespace apostol {

enum class OutputFormat { Text, Json, Csv, Latex };

/// Parses "text" | "json" | "csv" | "latex" (std::invalid_argument otherwise).
OutputFormat parse_format(std::string_view name);
const char* format_name(OutputFormat f);

/// "x^2 - x + 1/6" style: descending powers, canonical signs, fractional
/// coefficients parenthesized.
std::string poly_text(const Poly& q);

/// "x^{2} - x + \frac{1}{6}": descending powers, canonical signs.
std::string poly_latex(const Poly& q);

/// JSON array of "p/q" strings, ascending powers.
std::string poly_json(const Poly& q);

std::string rational_latex(const Rational& x);

std::string render_rational(const Rational& x, OutputFormat f);
std::string render_poly(const Poly& q, OutputFormat f);
std::string render_numbers(const std::vector<Rational>& values, OutputFormat f);
std::string render_table(const std::vector<Poly>& polys, OutputFormat f);

/// One report per line (JSON Lines for Json); deterministic field order.
std::string render_reports(const std::vector<CheckReport>& reports, OutputFormat f);

}  // namespace apostol
