#pragma once

#include "knotpoly/bigint.hpp"
#include "knotpoly/poly.hpp"

#include <compare>
#include <cstdint>
#include <utility>
#include <vector>

namespace knotpoly {

/**
 * Exponent on the half-integer lattice: the stored value k denotes t^{k/2}.
 */
struct HalfExp {
    std::int64_t twice = 0;

    static constexpr HalfExp whole(std::int64_t e) { return HalfExp{2 * e}; }
    static constexpr HalfExp half(std::int64_t k) { return HalfExp{k}; }

    constexpr bool is_integral() const { return twice % 2 == 0; }

    friend constexpr HalfExp operator+(HalfExp a, HalfExp b) { return {a.twice + b.twice}; }
    friend constexpr HalfExp operator-(HalfExp a, HalfExp b) { return {a.twice - b.twice}; }
    constexpr HalfExp operator-() const { return {-twice}; }
    friend constexpr auto operator<=>(HalfExp, HalfExp) = default;
};

/**
 * Sparse Laurent polynomial in t^{1/2} with big-integer coefficients.
 *
 * Terms are kept sorted by strictly descending exponent and never carry a
 * zero coefficient, so the empty term list is the canonical zero and
 * operator== is exact symbolic equality.
 */
class LaurentPoly {
public:
    using Term = std::pair<HalfExp, BigInt>;

    LaurentPoly() = default;
    LaurentPoly(long constant);  // NOLINT: integers promote to constants
    /// Accepts terms in any order; like exponents are summed and zeros dropped.
    explicit LaurentPoly(std::vector<Term> terms);

    static LaurentPoly monomial(const BigInt& c, HalfExp e);
    /// t^{e} for whole e.
    static LaurentPoly t_pow(std::int64_t e) { return monomial(1, HalfExp::whole(e)); }
    /// t^{k/2}.
    static LaurentPoly t_half_pow(std::int64_t k) { return monomial(1, HalfExp::half(k)); }
    /// Lifts a polynomial in t (Poly coefficient i -> t^i).
    static LaurentPoly from_poly(const Poly& p);

    bool is_zero() const { return terms_.empty(); }
    const std::vector<Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }

    /// Highest and lowest exponents; the polynomial must be nonzero.
    HalfExp top() const;
    HalfExp bottom() const;
    const BigInt& leading() const;
    BigInt coeff(HalfExp e) const;

    /// Value at t = 1.
    BigInt coefficient_sum() const;
    /// Image under t -> t^{-1}.
    LaurentPoly reflected() const;
    /// Multiplies by t^{e}.
    LaurentPoly shifted(HalfExp e) const;
    /// Converts back to a Poly in t; throws invalid_input for negative or half exponents.
    Poly to_poly() const;

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& b);
    LaurentPoly& operator-=(const LaurentPoly& b);
    LaurentPoly& operator*=(const LaurentPoly& b);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);

private:
    struct sorted_tag {};
    LaurentPoly(sorted_tag, std::vector<Term> terms) : terms_(std::move(terms)) {}

    std::vector<Term> terms_;
};

/// Quotient q with q * b == a exactly; throws not_divisible otherwise.
LaurentPoly exact_divide(const LaurentPoly& a, const LaurentPoly& b);

/// p(arg) by Horner's scheme in exact arithmetic.
LaurentPoly compose(const Poly& p, const LaurentPoly& arg);

/// The square root with positive leading coefficient; throws not_perfect_square.
LaurentPoly perfect_sqrt(const LaurentPoly& p);

/// True iff p is invariant under t -> t^{-1}.
bool is_palindromic(const LaurentPoly& p);

/// Floating-point evaluation; t must be positive when p has half-integer exponents.
double evaluate(const LaurentPoly& p, double t);

/**
 * Exact evaluation at a rational point. Half-integer exponents require t to be
 * the square of a positive rational; otherwise domain_error is thrown and the
 * floating-point overload should be used instead.
 */
BigRational evaluate(const LaurentPoly& p, const BigRational& t);

/// t^{1/2} + t^{-1/2}.
LaurentPoly y_variable();
/// t + t^{-1}.
LaurentPoly x_variable();

}  // namespace knotpoly
