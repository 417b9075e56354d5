#pragma once

#include "knotpoly/laurent.hpp"
#include "knotpoly/poly.hpp"

#include <cstdint>
#include <string>

namespace knotpoly {

/**
 * Identifier of the torus knot T(n, l). The pair is validated coprime and
 * stored with n >= l, so T(a, b) and T(b, a) compare equal.
 */
class TorusKnotId {
public:
    /// Throws invalid_input when a or b is non-positive or gcd(a, b) != 1.
    TorusKnotId(long a, long b);

    long n() const { return n_; }
    long l() const { return l_; }
    std::string to_string() const;

    friend bool operator==(const TorusKnotId&, const TorusKnotId&) = default;

private:
    long n_;
    long l_;
};

/// True for positive coprime a, b.
bool is_valid_knot(long a, long b);

/// Highest exponent of the Laurent form, (n-1)(l-1)/2.
std::int64_t degree_m(const TorusKnotId& k);

/// Δ̃_{n,l}(t) = (t^{nl} - 1)(t - 1) / ((t^n - 1)(t^l - 1)).
Poly alexander_standard(const TorusKnotId& k);

/// Δ_{n,l}(t) = Δ̃_{n,l}(t) t^{-m}, symmetric under t -> 1/t.
LaurentPoly alexander_laurent(const TorusKnotId& k);

/// Δ_{n,2} = (t^{n/2} + t^{-n/2}) / (t^{1/2} + t^{-1/2}); n odd, n >= 1.
LaurentPoly alexander_n2(long n);

/// Δ_{n,3} = (t^n + 1 + t^{-n}) / (t + 1 + t^{-1}); 3 ∤ n, n >= 1.
LaurentPoly alexander_n3(long n);

}  // namespace knotpoly
