#pragma once

#include "knotpoly/chebyshev.hpp"
#include "knotpoly/laurent.hpp"
#include "knotpoly/poly.hpp"
#include "knotpoly/render.hpp"
#include "knotpoly/verify.hpp"

#include <iosfwd>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace knotpoly::cli {

enum class OutputFormat { Text, Json, Latex };

// Exit-code contract of the command-line tool.
inline constexpr int exit_ok = 0;
inline constexpr int exit_check_failed = 1;
inline constexpr int exit_usage = 2;

/// A Laurent polynomial tagged with the integer parameters that produced it.
struct PolyResult {
    std::vector<std::pair<std::string, long>> params;  // e.g. {"n", 4}, {"l", 3}
    std::string form;
    LaurentPoly poly;
};

struct ChebyshevResult {
    ChebKind kind = ChebKind::FirstKind;
    long n = 0;
    Poly poly;
};

struct ExpansionResult {
    long n = 0;
    long l = 0;
    Expansion expansion;
};

struct ReportResult {
    SweepReport report;
};

using Result = std::variant<PolyResult, ChebyshevResult, ExpansionResult, ReportResult>;

std::string render(const Result& r, OutputFormat fmt);
ordered_json to_json(const Result& r);
/// Reconstructs a Result from its JSON rendering; throws invalid_input.
Result from_json(const ordered_json& j);

/**
 * Runs one command line (without the program name), writing results to out
 * and diagnostics to err. Returns the process exit code.
 */
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace knotpoly::cli
