#pragma once

#include "knotpoly/bigint.hpp"
#include "knotpoly/laurent.hpp"
#include "knotpoly/poly.hpp"

#include <string_view>
#include <vector>

namespace knotpoly {

// Chebyshev polynomials in the monic normalization: T_n(2cos θ) = 2cos(nθ)
// with T_0 = 2, and V_n(2cos θ) = sin((n+1)θ)/sin θ with V_0 = 1.

enum class ChebKind { FirstKind, SecondKind };

/// T_n via T_{n+1} = x T_n - T_{n-1}. Throws invalid_input for n < 0.
Poly cheb_T(long n);
/// V_n via V_{n+1} = x V_n - V_{n-1}. Throws invalid_input for n < 0.
Poly cheb_V(long n);
Poly chebyshev(ChebKind kind, long n);

/// Basis an Expansion is written over.
enum class Basis {
    ChebT,        // T_i(x), x = t + 1/t
    ChebV,        // V_i(x), x = t + 1/t
    AlexanderK2,  // Δ_{i,2}(t)
    QNumber,      // [i]_q, q = t^{s/2}
};

std::string_view basis_name(Basis b);
/// Inverse of basis_name; throws invalid_input.
Basis parse_basis(std::string_view name);

/**
 * Signed integer combination of basis elements plus a constant:
 *
 *     (Σ c_i B_i + constant) / [denominator]_q
 *
 * The q-number denominator only applies to the QNumber basis (1 means none).
 * Terms are stored by strictly decreasing index with nonzero coefficients.
 */
class Expansion {
public:
    struct Term {
        long index = 0;
        BigInt coef;
        friend bool operator==(const Term&, const Term&) = default;
    };

    Expansion() = default;

    /**
     * Builds an expansion from raw (index, coefficient) pairs. Pairs with a
     * negative index are dropped, like indices are combined, zeros removed.
     */
    static Expansion make(Basis basis, const std::vector<std::pair<long, BigInt>>& raw, BigInt constant = 0);
    /// QNumber basis with q = t^{s/2}, divided by [denominator]_q.
    static Expansion make_q(int s, const std::vector<std::pair<long, BigInt>>& raw, BigInt constant,
                            long denominator = 1);

    Basis basis() const { return basis_; }
    const std::vector<Term>& terms() const { return terms_; }
    const BigInt& constant() const { return constant_; }
    int q_base() const { return q_base_; }
    long denominator() const { return denominator_; }

    friend bool operator==(const Expansion&, const Expansion&) = default;

private:
    Basis basis_ = Basis::ChebT;
    std::vector<Term> terms_;
    BigInt constant_ = 0;
    int q_base_ = 1;
    long denominator_ = 1;
};

/// Evaluates the expansion as a Laurent polynomial in t.
LaurentPoly expansion_eval(const Expansion& e);

}  // namespace knotpoly
