#include "knotpoly/verify.hpp"

#include "knotpoly/alexander.hpp"
#include "knotpoly/chebyshev.hpp"
#include "knotpoly/errors.hpp"
#include "knotpoly/expansions.hpp"
#include "knotpoly/qcalc.hpp"
#include "knotpoly/render.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <thread>

namespace knotpoly {

void SweepReport::merge(SweepReport&& other) {
    checked += other.checked;
    failures.insert(failures.end(), std::make_move_iterator(other.failures.begin()),
                    std::make_move_iterator(other.failures.end()));
}

Poly oracle_division(long n, long l) {
    if (n < 1 || l < 1 || std::gcd(n, l) != 1) throw invalid_input("oracle_division needs coprime positive n, l");
    const auto nl = static_cast<std::size_t>(n * l);
    const auto un = static_cast<std::size_t>(n);
    const auto ul = static_cast<std::size_t>(l);

    std::vector<std::int64_t> rem(nl + 2, 0);
    rem[nl + 1] += 1;
    rem[nl] -= 1;
    rem[1] -= 1;
    rem[0] += 1;

    std::vector<std::int64_t> div(un + ul + 1, 0);
    div[un + ul] += 1;
    div[un] -= 1;
    div[ul] -= 1;
    div[0] += 1;

    const std::size_t div_deg = un + ul;
    std::vector<std::int64_t> quot(rem.size() - div_deg, 0);
    for (std::size_t i = rem.size(); i-- > div_deg;) {
        const std::int64_t c = rem[i];  // divisor is monic
        if (c == 0) continue;
        quot[i - div_deg] = c;
        for (std::size_t j = 0; j <= div_deg; ++j) {
            std::int64_t prod = 0;
            if (__builtin_mul_overflow(c, div[j], &prod) ||
                __builtin_sub_overflow(rem[i - div_deg + j], prod, &rem[i - div_deg + j])) {
                throw error("oracle_division: 64-bit overflow");
            }
        }
    }
    if (std::any_of(rem.begin(), rem.end(), [](std::int64_t c) { return c != 0; })) {
        throw error("oracle_division: nonzero remainder");
    }
    std::vector<BigInt> coeffs;
    coeffs.reserve(quot.size());
    for (std::int64_t c : quot) coeffs.emplace_back(static_cast<long>(c));
    return Poly(std::move(coeffs));
}

std::vector<double> default_trig_samples() { return {0.1, 0.3, 0.7, 1.1, 1.5, 2.0, 2.5, 3.0}; }

namespace {

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void check_close(SweepReport& r, const std::string& id, const std::string& params, double expected, double actual) {
    ++r.checked;
    if (!(std::fabs(expected - actual) <= trig_tolerance)) {
        r.failures.push_back({id, params, fmt_double(expected), fmt_double(actual)});
    }
}

long double eval_expansion_at(const Expansion& e, long double x) {
    long double sum = static_cast<long double>(e.constant().get_d());
    for (const auto& term : e.terms()) {
        const Poly basis = e.basis() == Basis::ChebT ? cheb_T(term.index) : cheb_V(term.index);
        sum += static_cast<long double>(term.coef.get_d()) * basis.evaluate(x);
    }
    return sum;
}

}  // namespace

SweepReport trig_spot_check(long n, std::span<const double> thetas) {
    if (n < 1 || n % 2 == 0) throw invalid_input("trig_spot_check needs odd positive n");
    const auto start = std::chrono::steady_clock::now();
    SweepReport r;
    const Expansion as_v = n2_to_V(n);
    const Expansion as_t = n2_to_T(n);
    const double m = static_cast<double>(n - 1) / 2.0;
    for (double theta : thetas) {
        const long double x = 2.0L * std::cos(static_cast<long double>(theta));
        const std::string params = "n=" + std::to_string(n) + ",theta=" + fmt_double(theta);
        const double ratio = std::cos(n * theta / 2.0) / std::cos(theta / 2.0);
        check_close(r, "EQ33", params, ratio, static_cast<double>(eval_expansion_at(as_v, x)));
        check_close(r, "EQ32", params, std::cos((m + 0.5) * theta) / std::cos(theta / 2.0),
                    static_cast<double>(eval_expansion_at(as_v, x)));
        check_close(r, "EQ28_float", params, ratio, static_cast<double>(eval_expansion_at(as_t, x)));
        for (long k = 0; k <= n; ++k) {
            const std::string kp = params + ",k=" + std::to_string(k);
            check_close(r, "EQ1", kp, 2.0 * std::cos(static_cast<double>(k) * theta),
                        static_cast<double>(cheb_T(k).evaluate(x)));
            check_close(r, "EQ3", kp, std::sin(static_cast<double>(k + 1) * theta) / std::sin(theta),
                        static_cast<double>(cheb_V(k).evaluate(x)));
        }
    }
    r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return r;
}

namespace {

// Records exact checks into one report; any exception is a failure.
class Checker {
public:
    explicit Checker(SweepReport& report) : report_(report) {}

    void equal(const std::string& id, const std::string& params, const std::function<LaurentPoly()>& expected,
               const std::function<LaurentPoly()>& actual) {
        ++report_.checked;
        try {
            LaurentPoly e = expected();
            LaurentPoly a = actual();
            if (!(e == a)) report_.failures.push_back({id, params, to_text(e), to_text(a)});
        } catch (const std::exception& ex) {
            report_.failures.push_back({id, params, "(no exception)", std::string("exception: ") + ex.what()});
        }
    }

    void holds(const std::string& id, const std::string& params, const std::function<bool()>& predicate) {
        ++report_.checked;
        try {
            if (!predicate()) report_.failures.push_back({id, params, "true", "false"});
        } catch (const std::exception& ex) {
            report_.failures.push_back({id, params, "true", std::string("exception: ") + ex.what()});
        }
    }

private:
    SweepReport& report_;
};

std::string p_n(long n) { return "n=" + std::to_string(n); }
std::string p_nl(long n, long l) { return "n=" + std::to_string(n) + ",l=" + std::to_string(l); }

using Task = std::function<void(Checker&)>;

void chebyshev_tasks(std::vector<Task>& tasks, long max_index) {
    tasks.emplace_back([max_index](Checker& c) {
        const LaurentPoly x = x_variable();
        const LaurentPoly y = y_variable();
        for (long n = 0; n <= max_index; ++n) {
            if (n >= 1) {
                c.holds("EQ5", p_n(n), [n] {
                    return cheb_T(n) == (n >= 2 ? cheb_V(n) - cheb_V(n - 2) : cheb_V(n));
                });
            }
            c.equal("EQ6", p_n(n), [n] { return LaurentPoly::t_pow(n) + LaurentPoly::t_pow(-n); },
                    [&, n] { return compose(cheb_T(n), x); });
            c.equal("EQ7", p_n(n),
                    [n] {
                        return exact_divide(LaurentPoly::t_pow(n + 1) - LaurentPoly::t_pow(-n - 1),
                                            LaurentPoly::t_pow(1) - LaurentPoly::t_pow(-1));
                    },
                    [&, n] { return compose(cheb_V(n), x); });
            c.equal("EQ36", p_n(n), [n] { return LaurentPoly::t_half_pow(n) + LaurentPoly::t_half_pow(-n); },
                    [&, n] { return compose(cheb_T(n), y); });
        }
    });
    tasks.emplace_back([max_index](Checker& c) {
        for (long s = 1; s <= 3; ++s) {
            const QBase base(s);
            const LaurentPoly q = LaurentPoly::t_half_pow(s);
            const LaurentPoly q_inv = LaurentPoly::t_half_pow(-s);
            const std::string ps = ",s=" + std::to_string(s);
            for (long n = 0; n <= max_index; ++n) {
                c.equal("EQ38", p_n(n) + ps,
                        [&, n] { return LaurentPoly::t_half_pow(s * n) - LaurentPoly::t_half_pow(-s * n); },
                        [&, n] { return q_number(n, base) * (q - q_inv); });
                c.holds("QLIMIT", p_n(n) + ps, [&, n] { return q_number(n, base).coefficient_sum() == n; });
                c.holds("QPALINDROME", p_n(n) + ps, [&, n] { return is_palindromic(q_number(n, base)); });
                c.equal("EQ40", p_n(n) + ps, [&, n] { return q_number(n + 1, base); },
                        [&, n] { return compose(cheb_V(n), q + q_inv); });
            }
        }
    });
}

void pair_tasks(std::vector<Task>& tasks, long max_n, long max_l) {
    for (long n = 1; n <= max_n; ++n) {
        tasks.emplace_back([n, max_l](Checker& c) {
            const QBase u(1);
            for (long l = 1; l <= max_l; ++l) {
                if (!is_valid_knot(n, l)) continue;
                const TorusKnotId k(n, l);
                const std::string ps = p_nl(n, l);
                const LaurentPoly delta = alexander_laurent(k);
                const auto reference = [&delta] { return delta; };
                const std::int64_t m = degree_m(k);

                c.holds("ORACLE", ps, [&] { return oracle_division(n, l) == alexander_standard(k); });
                c.equal("EQ13", ps,
                        [&] {
                            const auto sym = [](std::int64_t k2) {
                                return LaurentPoly::t_half_pow(k2) - LaurentPoly::t_half_pow(-k2);
                            };
                            return exact_divide(sym(n * l) * sym(1), sym(n) * sym(l));
                        },
                        reference);
                c.holds("PALINDROME", ps, [&] { return is_palindromic(delta); });
                c.holds("UNIT_AT_1", ps, [&] { return delta.coefficient_sum() == 1; });
                c.holds("DEGREE", ps,
                        [&] { return delta.top() == HalfExp::whole(m) && delta.bottom() == HalfExp::whole(-m); });
                c.equal("SYMMETRY", ps, [&] { return alexander_laurent(TorusKnotId(l, n)); }, reference);
                c.equal("EQ39_QNUM", ps, reference,
                        [&] { return exact_divide(q_number(n * l, u), q_number(n, u) * q_number(l, u)); });
                c.equal("EQ39_QBASE", ps, reference,
                        [&] { return exact_divide(q_number(l, QBase(n)), q_number(l, u)); });
                for (FormulaId f : all_formulas) {
                    if (!formula_applies(n, l, f)) continue;
                    c.equal(std::string(formula_name(f)), ps, reference, [&] { return compute_form(n, l, f); });
                }
            }
        });
    }
}

void l2_tasks(std::vector<Task>& tasks, long max_n) {
    tasks.emplace_back([max_n](Checker& c) {
        const LaurentPoly x = x_variable();
        for (long n = 1; n <= max_n; n += 2) {
            const std::string ps = p_n(n);
            const long m = (n - 1) / 2;
            const LaurentPoly delta = alexander_n2(n);
            const auto reference = [&delta] { return delta; };
            c.equal("EQ16", ps, [n] { return alexander_laurent(TorusKnotId(n, 2)); }, reference);
            c.equal("EQ24", ps, reference, [n] { return expansion_eval(n2_to_V(n)); });
            c.holds("EQ25", ps, [n, m] {
                const Expansion e = n2_to_V(n);
                if (n == 1) return e.terms().size() == 1 && e.terms()[0].index == 0;
                return e.terms().size() == 2 && e.terms()[0].index == (n - 1) / 2 &&
                       e.terms()[1].index == (n - 3) / 2 && e.terms()[0].index == m;
            });
            c.equal("EQ28", ps, reference, [n] { return expansion_eval(n2_to_T(n)); });
            c.equal("EQ41", ps, reference,
                    [m] { return q_number(m + 1, QBase(2)) - q_number(m, QBase(2)); });
            c.equal("EQ34_SQUARED", ps, [&] { return compose(cheb_T(n), x) + LaurentPoly(2); },
                    [&] { return delta * delta * (x + LaurentPoly(2)); });
            if (m >= 1) {
                c.equal("EQ26", "m=" + std::to_string(m), [&] { return compose(cheb_T(m), x); },
                        [n] { return alexander_n2(n) + alexander_n2(n - 2); });
            }
        }
    });
}

void l3_tasks(std::vector<Task>& tasks, long max_n) {
    tasks.emplace_back([max_n](Checker& c) {
        for (long n = 1; n <= max_n; ++n) {
            if (n % 3 == 0) continue;
            const std::string ps = p_n(n);
            const LaurentPoly delta = alexander_n3(n);
            const auto reference = [&delta] { return delta; };
            c.equal("EQ17", ps, [n] { return alexander_laurent(TorusKnotId(n, 3)); }, reference);
            c.equal("EQ19", ps, reference, [n] { return expansion_eval(decompose_n3(n)); });
            c.holds("TELESCOPE", ps, [n] { return telescope_n3(n) == decompose_n3(n); });
            if (n >= 4) c.holds("EQ18", ps, [n] { return check_prop1(n); });
            c.equal("EQ29", ps, reference, [n] { return expansion_eval(n3_to_V(n)); });
            c.holds("EQ30", ps, [n] {
                const Expansion e = n3_to_V(n);
                if (static_cast<long>(e.terms().size()) != n) return false;
                for (long j = 0; j < n; ++j) {
                    const auto& term = e.terms()[static_cast<std::size_t>(j)];
                    const long expected = j == 0 ? 1 : ((j - 1) % 3 == 2 ? 2 : -1);
                    if (term.index != n - 1 - j || term.coef != expected) return false;
                }
                return true;
            });
            c.equal("EQ31", ps, reference, [n] { return expansion_eval(n3_to_T(n)); });
            c.equal("EQ43", ps, [n] { return expansion_eval(n3_to_q(n)); },
                    [n] { return n3_q_brackets(n).finalize(); });
        }
    });
}

}  // namespace

SweepReport run_identity_suite(long max_n, long max_l, unsigned threads) {
    if (max_n < 2 || max_l < 2) throw invalid_input("identity sweep ranges must be at least 2");
    const auto start = std::chrono::steady_clock::now();

    std::vector<Task> tasks;
    chebyshev_tasks(tasks, 3 * std::max(max_n, max_l));
    l2_tasks(tasks, max_n);
    if (max_l >= 3) l3_tasks(tasks, max_n);
    pair_tasks(tasks, max_n, max_l);

    std::vector<SweepReport> partial(tasks.size());
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < tasks.size(); i = next++) {
            Checker checker(partial[i]);
            tasks[i](checker);
        }
    };
    {
        std::vector<std::jthread> pool;
        for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
        worker();
    }

    SweepReport report;
    for (auto& p : partial) report.merge(std::move(p));
    report.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return report;
}

}  // namespace knotpoly
