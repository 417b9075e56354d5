#pragma once

#include "knotpoly/chebyshev.hpp"
#include "knotpoly/laurent.hpp"
#include "knotpoly/poly.hpp"
#include "knotpoly/verify.hpp"

#include <json.hpp>

#include <string>
#include <string_view>

namespace knotpoly {

using ordered_json = nlohmann::ordered_json;

// Text and LaTeX renderings list terms by strictly descending exponent and
// omit unit coefficients. Text: "2*t^2 - t + 1 - t^-1 + t^(3/2)".
// LaTeX: "2t^{2} - t + 1 - t^{-1} + t^{3/2}".

std::string to_text(const LaurentPoly& p);
std::string to_latex(const LaurentPoly& p);
std::string to_text(const Poly& p, char var = 'x');
std::string to_latex(const Poly& p, char var = 'x');

/// Parses either the text or the LaTeX rendering back; throws invalid_input.
LaurentPoly parse_laurent(std::string_view text);

/// "+D(13,2) -D(9,2) +D(1,2)", "+T2 -T1 +1", "(+[5]_t^(1/2) -[3]_t^(1/2) +1) / [3]_t^(1/2)".
std::string to_text(const Expansion& e);
std::string to_latex(const Expansion& e);

std::string to_text(const SweepReport& r);

/// [{"exp2": k, "coef": "decimal"}, ...] by descending exponent.
ordered_json terms_to_json(const LaurentPoly& p);
LaurentPoly terms_from_json(const ordered_json& j);

/// [{"deg": d, "coef": "decimal"}, ...] by descending degree.
ordered_json coeffs_to_json(const Poly& p);
Poly coeffs_from_json(const ordered_json& j);

ordered_json expansion_to_json(const Expansion& e);
Expansion expansion_from_json(const ordered_json& j);

ordered_json report_to_json(const SweepReport& r);
SweepReport report_from_json(const ordered_json& j);

}  // namespace knotpoly
