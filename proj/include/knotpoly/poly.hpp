#pragma once

#include "knotpoly/bigint.hpp"

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace knotpoly {

/**
 * Dense univariate polynomial with big-integer coefficients and
 * non-negative exponents. coeffs()[i] is the coefficient of x^i.
 *
 * Normalized: the leading coefficient is nonzero, and the zero
 * polynomial has no stored coefficients.
 */
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<BigInt> coeffs);
    Poly(std::initializer_list<long> coeffs);

    static Poly constant(const BigInt& c);
    static Poly monomial(const BigInt& c, std::size_t degree);

    bool is_zero() const { return coeffs_.empty(); }
    /// Degree of the polynomial; -1 for zero.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    const std::vector<BigInt>& coeffs() const { return coeffs_; }
    /// Coefficient of x^i; zero past the degree.
    BigInt coeff(std::size_t i) const;
    const BigInt& leading() const;

    /// Horner evaluation in extended precision.
    long double evaluate(long double x) const;

    Poly operator-() const;
    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(const BigInt& c, const Poly& p);
    friend bool operator==(const Poly& a, const Poly& b) = default;

    /// Multiplies by x.
    Poly shift_up() const;

private:
    void normalize();

    std::vector<BigInt> coeffs_;
};

}  // namespace knotpoly
