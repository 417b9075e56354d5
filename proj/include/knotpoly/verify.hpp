#pragma once

#include "knotpoly/poly.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace knotpoly {

struct SweepFailure {
    std::string identity;
    std::string params;
    std::string expected;
    std::string actual;

    friend bool operator==(const SweepFailure&, const SweepFailure&) = default;
};

/// Outcome of a batch of identity checks. failures is empty iff every check passed.
struct SweepReport {
    std::uint64_t checked = 0;
    std::vector<SweepFailure> failures;
    double elapsed_ms = 0.0;

    bool ok() const { return failures.empty(); }
    void merge(SweepReport&& other);
};

/**
 * Δ̃_{n,l} by schoolbook long division of (t^{nl+1} - t^{nl} - t + 1) by the
 * expanded (t^{n+l} - t^n - t^l + 1) on plain 64-bit coefficient arrays.
 * Deliberately shares nothing with the LaurentPoly kernel.
 */
Poly oracle_division(long n, long l);

/// θ samples in (0, π) used when none are given.
std::vector<double> default_trig_samples();

/**
 * Floating-point checks at x = 2cos θ: the V-expansion of Δ_{n,2} against
 * cos(nθ/2)/cos(θ/2) and cos((m+1/2)θ)/cos(θ/2), plus T_k(x) = 2cos(kθ) and
 * V_k(x) = sin((k+1)θ)/sin θ for k <= n. Absolute tolerance 1e-9.
 */
SweepReport trig_spot_check(long n, std::span<const double> thetas);

inline constexpr double trig_tolerance = 1e-9;
inline constexpr double functional_dependence_tolerance = 1e-9;

/**
 * Runs every exact identity over 1 <= n <= max_n, 1 <= l <= max_l (coprime
 * pairs in both orders) plus the single-index families derived from those
 * bounds. Enumeration order is fixed; work is split across threads and
 * merged back in that order. threads == 0 picks the hardware concurrency.
 */
SweepReport run_identity_suite(long max_n, long max_l, unsigned threads = 0);

}  // namespace knotpoly
