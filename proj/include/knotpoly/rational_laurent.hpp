#pragma once

#include "knotpoly/laurent.hpp"

namespace knotpoly {

/**
 * Formal quotient num/den of Laurent polynomials. Arithmetic is carried out
 * on the pair without cancellation; finalize() performs the exact division.
 */
class RationalLaurent {
public:
    /// Throws invalid_input when den is zero.
    RationalLaurent(LaurentPoly num, LaurentPoly den);
    RationalLaurent(LaurentPoly value);  // NOLINT: polynomials are fractions over 1

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }

    /// num / den as a Laurent polynomial; throws not_divisible.
    LaurentPoly finalize() const;

    friend RationalLaurent operator+(const RationalLaurent& a, const RationalLaurent& b);
    friend RationalLaurent operator-(const RationalLaurent& a, const RationalLaurent& b);
    friend RationalLaurent operator*(const RationalLaurent& a, const RationalLaurent& b);
    friend RationalLaurent operator/(const RationalLaurent& a, const RationalLaurent& b);

private:
    LaurentPoly num_;
    LaurentPoly den_;
};

}  // namespace knotpoly
