#include "knotpoly/alexander.hpp"

#include "knotpoly/errors.hpp"

#include <numeric>
#include <utility>

namespace knotpoly {

bool is_valid_knot(long a, long b) { return a > 0 && b > 0 && std::gcd(a, b) == 1; }

TorusKnotId::TorusKnotId(long a, long b) {
    if (a <= 0 || b <= 0) throw invalid_input("n and l must be positive");
    if (std::gcd(a, b) != 1) throw invalid_input("n and l must be coprime");
    n_ = std::max(a, b);
    l_ = std::min(a, b);
}

std::string TorusKnotId::to_string() const { return "T(" + std::to_string(n_) + "," + std::to_string(l_) + ")"; }

std::int64_t degree_m(const TorusKnotId& k) {
    return static_cast<std::int64_t>(k.n() - 1) * static_cast<std::int64_t>(k.l() - 1) / 2;
}

Poly alexander_standard(const TorusKnotId& k) {
    const LaurentPoly one(1);
    const LaurentPoly numerator = (LaurentPoly::t_pow(k.n() * k.l()) - one) * (LaurentPoly::t_pow(1) - one);
    try {
        LaurentPoly q = exact_divide(numerator, LaurentPoly::t_pow(k.n()) - one);
        q = exact_divide(q, LaurentPoly::t_pow(k.l()) - one);
        return q.to_poly();
    } catch (const not_divisible&) {
        throw error("internal: Alexander quotient not exact for " + k.to_string());
    }
}

LaurentPoly alexander_laurent(const TorusKnotId& k) {
    return LaurentPoly::from_poly(alexander_standard(k)).shifted(HalfExp::whole(-degree_m(k)));
}

LaurentPoly alexander_n2(long n) {
    if (n < 1 || n % 2 == 0) throw invalid_input("Δ_{n,2} needs odd positive n, got " + std::to_string(n));
    return exact_divide(LaurentPoly::t_half_pow(n) + LaurentPoly::t_half_pow(-n), y_variable());
}

LaurentPoly alexander_n3(long n) {
    if (n < 1 || n % 3 == 0) {
        throw invalid_input("Δ_{n,3} needs positive n not divisible by 3, got " + std::to_string(n));
    }
    const LaurentPoly one(1);
    return exact_divide(LaurentPoly::t_pow(n) + one + LaurentPoly::t_pow(-n), x_variable() + one);
}

}  // namespace knotpoly
