#include "knotpoly/qcalc.hpp"

#include "knotpoly/errors.hpp"

#include <string>

namespace knotpoly {

QBase::QBase(long s) : s_(s) {
    if (s < 1) throw invalid_base("q = t^{s/2} needs s >= 1, got " + std::to_string(s));
}

LaurentPoly QBase::q_plus_inverse() const { return LaurentPoly::t_half_pow(s_) + LaurentPoly::t_half_pow(-s_); }

LaurentPoly q_number(long n, const QBase& base) {
    if (n < 0) throw invalid_input("q-number index must be non-negative");
    std::vector<LaurentPoly::Term> terms;
    terms.reserve(static_cast<std::size_t>(n));
    for (long i = 0; i < n; ++i) terms.emplace_back(HalfExp{base.s() * (n - 1 - 2 * i)}, BigInt(1));
    return LaurentPoly(std::move(terms));
}

RationalLaurent q_bracket_ratio(long x, long d, const QBase& base) {
    if (x < 1 || d < 1) throw invalid_input("q-bracket arguments must be positive");
    if (base.s() % d != 0) {
        throw invalid_base("bracket denominator " + std::to_string(d) + " does not divide s = " +
                           std::to_string(base.s()));
    }
    const QBase inner(base.s() / d);
    return {q_number(x, inner), q_number(d, inner)};
}

}  // namespace knotpoly
