#include "knotpoly/expansions.hpp"

#include "knotpoly/errors.hpp"
#include "knotpoly/qcalc.hpp"

#include <cmath>
#include <numeric>
#include <string>

namespace knotpoly {

namespace {

using RawTerms = std::vector<std::pair<long, BigInt>>;

long floor_div(long a, long b) {
    long q = a / b;
    return (a % b != 0 && ((a < 0) != (b < 0))) ? q - 1 : q;
}

void require_odd(long n) {
    if (n < 1 || n % 2 == 0) throw invalid_input("n must be odd and positive, got " + std::to_string(n));
}

void require_coprime_to_3(long n) {
    if (n < 1 || n % 3 == 0) {
        throw invalid_input("n must be positive and not divisible by 3, got " + std::to_string(n));
    }
}

// [k]_q with [-k]_q = -[k]_q.
LaurentPoly signed_q_number(long k, const QBase& base) {
    return k < 0 ? -q_number(-k, base) : q_number(k, base);
}

// [x/d]_{t^{s/2}} as a pair over q' = t^{(s/d)/2}, allowing x <= 0.
RationalLaurent signed_bracket(long x, long d, const QBase& base) {
    if (x > 0) return q_bracket_ratio(x, d, base);
    const RationalLaurent unit = q_bracket_ratio(1, d, base);
    return {signed_q_number(x, QBase(base.s() / d)), unit.den()};
}

// V_k(arg), or zero for k < 0 (negative-index terms are omitted).
LaurentPoly v_at(long k, const LaurentPoly& arg) { return k < 0 ? LaurentPoly() : compose(cheb_V(k), arg); }

LaurentPoly z_power_sum(long s) { return QBase(s).q_plus_inverse(); }

LaurentPoly v_ratio_at(long k, const LaurentPoly& z, const LaurentPoly& y) {
    return exact_divide(v_at(k, z), v_at(k, y));
}

}  // namespace

std::string_view formula_name(FormulaId f) {
    switch (f) {
        case FormulaId::EQ34: return "EQ34";
        case FormulaId::EQ35: return "EQ35";
        case FormulaId::EQ37: return "EQ37";
        case FormulaId::EQ_N3_TSQ: return "EQ_N3_TSQ";
        case FormulaId::EQ_N3_TX: return "EQ_N3_TX";
        case FormulaId::EQ42: return "EQ42";
        case FormulaId::EQ44: return "EQ44";
        case FormulaId::EQ45: return "EQ45";
        case FormulaId::EQ46: return "EQ46";
        case FormulaId::EQ47: return "EQ47";
        case FormulaId::EQ48: return "EQ48";
        case FormulaId::EQ49: return "EQ49";
        case FormulaId::EQ50: return "EQ50";
        case FormulaId::EQ51: return "EQ51";
        case FormulaId::EQ52: return "EQ52";
        case FormulaId::EQ53: return "EQ53";
        case FormulaId::EQ54_K2: return "EQ54_K2";
        case FormulaId::EQ54_K3: return "EQ54_K3";
    }
    return "?";
}

FormulaId parse_formula(std::string_view name) {
    for (FormulaId f : all_formulas) {
        if (formula_name(f) == name) return f;
    }
    throw invalid_input("unknown formula id '" + std::string(name) + "'");
}

Expansion decompose_n3(long n) {
    require_coprime_to_3(n);
    const long d = (2 * n - 1) / 6;
    RawTerms raw;
    for (long j = 0; j <= d; ++j) {
        raw.emplace_back(2 * n - 1 - 6 * j, 1);
        raw.emplace_back(2 * n - 5 - 6 * j, -1);
    }
    return Expansion::make(Basis::AlexanderK2, raw);
}

Expansion telescope_n3(long n) {
    require_coprime_to_3(n);
    RawTerms raw;
    for (long k = n; k > 0; k -= 3) {
        if (k == 1) {
            raw.emplace_back(1, 1);  // Δ_{1,3} = Δ_{1,2}
        } else if (k == 2) {
            raw.emplace_back(3, 1);  // Δ_{2,3} = Δ_{3,2}
        } else {
            raw.emplace_back(2 * k - 1, 1);
            raw.emplace_back(2 * k - 5, -1);
        }
    }
    return Expansion::make(Basis::AlexanderK2, raw);
}

bool check_prop1(long n) {
    if (n < 4 || n % 3 == 0) throw invalid_input("the three-step relation needs n >= 4 with 3 ∤ n");
    return alexander_n3(n) - alexander_n3(n - 3) == alexander_n2(2 * n - 1) - alexander_n2(2 * n - 5);
}

Expansion n2_to_V(long n) {
    require_odd(n);
    const long m = (n - 1) / 2;
    return Expansion::make(Basis::ChebV, {{m, 1}, {m - 1, -1}});
}

Expansion n2_to_T(long n) {
    require_odd(n);
    const long m = (n - 1) / 2;
    RawTerms raw;
    for (long k = 0; k < m; ++k) raw.emplace_back(m - k, k % 2 == 0 ? 1 : -1);
    return Expansion::make(Basis::ChebT, raw, m % 2 == 0 ? 1 : -1);
}

Expansion n3_to_V(long n) {
    require_coprime_to_3(n);
    const long d = floor_div(n - 2, 3);
    RawTerms raw{{n - 1, 1}};
    for (long k = 0; k <= d; ++k) {
        raw.emplace_back(n - 2 - 3 * k, -1);
        raw.emplace_back(n - 3 - 3 * k, -1);
        raw.emplace_back(n - 4 - 3 * k, 2);
    }
    return Expansion::make(Basis::ChebV, raw);
}

Expansion n3_to_T(long n) {
    require_coprime_to_3(n);
    const long d = floor_div(n - 1, 3);
    RawTerms raw;
    for (long k = 0; k <= d; ++k) {
        raw.emplace_back(n - 1 - 3 * k, 1);
        raw.emplace_back(n - 2 - 3 * k, -1);
    }
    return Expansion::make(Basis::ChebT, raw, (n - d) % 2 == 0 ? 1 : -1);
}

Expansion n2_to_q(long n) {
    require_odd(n);
    return Expansion::make_q(2, {{(n + 1) / 2, 1}, {(n - 1) / 2, -1}}, 0);
}

Expansion n3_to_q(long n) {
    require_coprime_to_3(n);
    return Expansion::make_q(1, {{2 * n + 1, 1}, {2 * n - 1, -1}}, 1, 3);
}

RationalLaurent n3_q_brackets(long n) {
    require_coprime_to_3(n);
    const QBase base(3);
    return q_bracket_ratio(2 * n + 1, 3, base) - q_bracket_ratio(2 * n - 1, 3, base) + q_bracket_ratio(1, 3, base);
}

bool formula_applies(long n, long l, FormulaId f) {
    if (!is_valid_knot(n, l)) return false;
    switch (f) {
        case FormulaId::EQ34:
        case FormulaId::EQ35:
        case FormulaId::EQ37:
        case FormulaId::EQ42:
            return l == 2;
        case FormulaId::EQ_N3_TSQ:
        case FormulaId::EQ_N3_TX:
        case FormulaId::EQ44:
        case FormulaId::EQ47:
            return l == 3;
        case FormulaId::EQ54_K2:
            return n % 2 == 1;
        case FormulaId::EQ54_K3:
            return n % 3 != 0;
        default:
            return true;
    }
}

LaurentPoly compute_form(long n, long l, FormulaId f) {
    if (!formula_applies(n, l, f)) {
        throw invalid_input(std::string(formula_name(f)) + " does not apply to (n, l) = (" + std::to_string(n) +
                            ", " + std::to_string(l) + ")");
    }
    const LaurentPoly one(1);
    const LaurentPoly x = x_variable();
    const LaurentPoly y = y_variable();

    switch (f) {
        case FormulaId::EQ34: {
            const LaurentPoly square = exact_divide(compose(cheb_T(n), x) + LaurentPoly(2), x + LaurentPoly(2));
            return perfect_sqrt(square);
        }
        case FormulaId::EQ35:
            return exact_divide(compose(cheb_V(2 * n - 1), y), y * compose(cheb_V(n - 1), y));
        case FormulaId::EQ37:
            return exact_divide(compose(cheb_T(n), y), y);
        case FormulaId::EQ_N3_TSQ: {
            const LaurentPoly tn = compose(cheb_T(n), y);
            return exact_divide(tn * tn - one, y * y - one);
        }
        case FormulaId::EQ_N3_TX:
            return exact_divide(compose(cheb_T(n), x) + one, x + one);
        case FormulaId::EQ42:
            return expansion_eval(n2_to_q(n));
        case FormulaId::EQ44:
            return expansion_eval(n3_to_q(n));
        case FormulaId::EQ45: {
            // Third bracket: [l-2]_{t^{n/2}} / [l]_{t^{1/2}}.
            const QBase base(l);
            const RationalLaurent sum = signed_bracket(n * (l - 1) + 1, l, base) -
                                        signed_bracket(n * (l - 1) - 1, l, base) +
                                        RationalLaurent(signed_q_number(l - 2, QBase(n)), q_number(l, QBase(1)));
            return sum.finalize();
        }
        case FormulaId::EQ46: {
            const QBase u(1);
            const LaurentPoly ql = q_number(l, u);
            const RationalLaurent sum = RationalLaurent(signed_q_number(n * (l - 1) + 1, u), ql) -
                                        RationalLaurent(signed_q_number(n * (l - 1) - 1, u), ql) +
                                        RationalLaurent(signed_q_number(n * (l - 2), u), q_number(n, u)) *
                                            RationalLaurent(one, ql);
            return sum.finalize();
        }
        case FormulaId::EQ47:
            return exact_divide(v_at(2 * n, y) - v_at(2 * n - 2, y) + one, v_at(2, y));
        case FormulaId::EQ48: {
            const LaurentPoly vl = v_at(l - 1, y);
            const RationalLaurent sum = RationalLaurent(v_at(n * (l - 1), y) - v_at(n * (l - 1) - 2, y), vl) +
                                        RationalLaurent(v_at(n * (l - 2) - 1, y), vl * v_at(n - 1, y));
            return sum.finalize();
        }
        case FormulaId::EQ49:
            return exact_divide(v_at(n * l - 1, y), v_at(n - 1, y) * v_at(l - 1, y));
        case FormulaId::EQ50:
            return v_ratio_at(n - 1, z_power_sum(l), y);
        case FormulaId::EQ51:
            return v_ratio_at(l - 1, z_power_sum(n), y);
        case FormulaId::EQ52:
            return v_ratio_at(n - 1, compose(cheb_T(l), y), y);
        case FormulaId::EQ53:
            return v_ratio_at(l - 1, compose(cheb_T(n), y), y);
        case FormulaId::EQ54_K2:
            return v_ratio_at(l - 1, y * alexander_n2(n), y);
        case FormulaId::EQ54_K3:
            return v_ratio_at(l - 1, perfect_sqrt((x + one) * alexander_n3(n) + one), y);
    }
    throw invalid_input("unknown formula id");
}

LaurentPoly compute_form(const TorusKnotId& k, FormulaId f) {
    if (formula_applies(k.n(), k.l(), f)) return compute_form(k.n(), k.l(), f);
    if (formula_applies(k.l(), k.n(), f)) return compute_form(k.l(), k.n(), f);
    throw invalid_input(std::string(formula_name(f)) + " does not apply to " + k.to_string());
}

double functional_dependence_eval(long n, long l, double t, QuadraticRoot root) {
    if (!(t > 0.0) || t == 1.0 || !std::isfinite(t)) {
        throw domain_error("functional dependence needs finite t > 0, t != 1");
    }
    if (l < 1 || n < 1 || n % 2 == 0 || std::gcd(n, l) != 1) {
        throw invalid_input("functional dependence needs odd n coprime to l");
    }
    const double delta2 = evaluate(alexander_n2(n), t);
    const double b = (std::sqrt(t) + 1.0 / std::sqrt(t)) * delta2;
    const double larger = 0.5 * (b + std::sqrt(std::max(0.0, b * b - 4.0)));
    const double z = root == QuadraticRoot::Larger ? larger : 1.0 / larger;

    // [l]_q as Σ q^{l-1-2i}: positive terms, no cancellation near q = 1.
    auto bracket = [l](long double q) {
        long double sum = 0.0L;
        for (long i = 0; i < l; ++i) sum += std::pow(q, static_cast<long double>(l - 1 - 2 * i));
        return sum;
    };
    return static_cast<double>(bracket(z) / bracket(std::sqrt(static_cast<long double>(t))));
}

}  // namespace knotpoly
