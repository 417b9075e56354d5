#pragma once

#include "knotpoly/alexander.hpp"
#include "knotpoly/chebyshev.hpp"
#include "knotpoly/laurent.hpp"
#include "knotpoly/rational_laurent.hpp"

#include <array>
#include <optional>
#include <string_view>

namespace knotpoly {

/// Catalog of alternate closed forms of Δ_{n,l}; each one must reproduce alexander_laurent.
enum class FormulaId {
    EQ34,       // sqrt((T_n(x) + 2)/(x + 2))
    EQ35,       // V_{2n-1}(y) / (y V_{n-1}(y))
    EQ37,       // T_n(y) / y
    EQ_N3_TSQ,  // (T_n(y)^2 - 1) / (y^2 - 1)
    EQ_N3_TX,   // (T_n(x) + 1) / (x + 1)
    EQ42,       // [(n+1)/2]_t - [(n-1)/2]_t
    EQ44,       // ([2n+1] - [2n-1] + 1) / [3], q = t^{1/2}
    EQ45,       // fractional q-brackets at q = t^{l/2}
    EQ46,       // q-number ratios at q = t^{1/2}
    EQ47,       // (V_{2n}(y) - V_{2n-2}(y) + 1) / V_2(y)
    EQ48,       // V-ratio form of EQ46
    EQ49,       // V_{nl-1}(y) / (V_{n-1}(y) V_{l-1}(y))
    EQ50,       // V_{n-1}(t^{l/2} + t^{-l/2}) / V_{n-1}(y)
    EQ51,       // V_{l-1}(t^{n/2} + t^{-n/2}) / V_{l-1}(y)
    EQ52,       // V_{n-1}(T_l(y)) / V_{n-1}(y)
    EQ53,       // V_{l-1}(T_n(y)) / V_{l-1}(y)
    EQ54_K2,    // V_{l-1}(z) / V_{l-1}(y), z = y Δ_{n,2}
    EQ54_K3,    // V_{l-1}(z) / V_{l-1}(y), z = sqrt((x + 1) Δ_{n,3} + 1)
};

inline constexpr std::array<FormulaId, 18> all_formulas{
    FormulaId::EQ34,    FormulaId::EQ35, FormulaId::EQ37, FormulaId::EQ_N3_TSQ, FormulaId::EQ_N3_TX,
    FormulaId::EQ42,    FormulaId::EQ44, FormulaId::EQ45, FormulaId::EQ46,      FormulaId::EQ47,
    FormulaId::EQ48,    FormulaId::EQ49, FormulaId::EQ50, FormulaId::EQ51,      FormulaId::EQ52,
    FormulaId::EQ53,    FormulaId::EQ54_K2, FormulaId::EQ54_K3,
};

std::string_view formula_name(FormulaId f);
/// Inverse of formula_name; throws invalid_input.
FormulaId parse_formula(std::string_view name);

// Δ_{n,3} over the Δ_{k,2} basis.

/// Σ_{j=0}^{d} (Δ_{2n-1-6j,2} - Δ_{2n-5-6j,2}), d = ⌊(2n-1)/6⌋; negative indices dropped.
Expansion decompose_n3(long n);
/// Same decomposition reached by unrolling Δ_{n,3} = Δ_{2n-1,2} - Δ_{2n-5,2} + Δ_{n-3,3} down to n ∈ {1, 2}.
Expansion telescope_n3(long n);
/// Δ_{n,3} - Δ_{n-3,3} == Δ_{2n-1,2} - Δ_{2n-5,2}; requires n >= 4, 3 ∤ n.
bool check_prop1(long n);

// Chebyshev and q-number bases. All throw invalid_input outside their domain.

/// Δ_{2m+1,2} = V_m - V_{m-1}.
Expansion n2_to_V(long n);
/// Δ_{2m+1,2} = Σ_{k<m} (-1)^k T_{m-k} + (-1)^m.
Expansion n2_to_T(long n);
/// Δ_{n,3} = V_{n-1} + Σ_{k=0}^{d} (-V_{n-2-3k} - V_{n-3-3k} + 2V_{n-4-3k}), d = ⌊(n-2)/3⌋.
Expansion n3_to_V(long n);
/**
 * Δ_{n,3} = Σ_{k=0}^{d} (T_{n-1-3k} - T_{n-2-3k}) + (-1)^{n-d}.
 *
 * d = ⌊(n-1)/3⌋. The ceiling would put a spurious T_{-2}/T_{-3} pair in range
 * and flip the constant's sign for n ≡ 2, 0 (mod 3); only the floor
 * reproduces the worked cases n = 1, 2, 4, 5, 7.
 */
Expansion n3_to_T(long n);
/// Δ_{n,2} = [(n+1)/2]_t - [(n-1)/2]_t (q-number basis, q = t).
Expansion n2_to_q(long n);
/// Δ_{n,3} = ([2n+1] - [2n-1] + 1) / [3] (q-number basis, q = t^{1/2}).
Expansion n3_to_q(long n);
/// The three fractional brackets [(2n+1)/3] - [(2n-1)/3] + [1/3] at q = t^{3/2}, unreduced.
RationalLaurent n3_q_brackets(long n);

/// Whether (n, l), taken in this order, lies in the domain of f.
bool formula_applies(long n, long l, FormulaId f);
/// Evaluates f with n and l in the given order; throws invalid_input off-domain.
LaurentPoly compute_form(long n, long l, FormulaId f);
/// Evaluates f on whichever ordering of the knot's pair lies in its domain.
LaurentPoly compute_form(const TorusKnotId& k, FormulaId f);

enum class QuadraticRoot { Larger, Smaller };

/**
 * Floating-point Δ_{n,l}(t) reconstructed from Δ_{n,2}(t) alone.
 *
 * Z solves Z^2 - (t^{1/2} + t^{-1/2}) Δ_{n,2}(t) Z + 1 = 0 and the result is
 * [l]_Z / [l]_{t^{1/2}}, i.e. ((Z^l - Z^{-l})/(Z - Z^{-1})) ((t^{1/2} - t^{-1/2})/(t^{l/2} - t^{-l/2})).
 * Both roots give the same value. Requires odd n coprime to l, t > 0, t != 1.
 */
double functional_dependence_eval(long n, long l, double t, QuadraticRoot root = QuadraticRoot::Larger);

}  // namespace knotpoly
