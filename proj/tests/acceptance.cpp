// Acceptance run: one line per criterion, nonzero exit if any criterion fails.

#include "knotpoly/alexander.hpp"
#include "knotpoly/chebyshev.hpp"
#include "knotpoly/errors.hpp"
#include "knotpoly/expansions.hpp"
#include "knotpoly/render.hpp"
#include "knotpoly/verify.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

using namespace knotpoly;

namespace {

constexpr double fast_limit_s = 1.0;
constexpr double sweep_limit_s = 60.0;
constexpr double trig_abs_tol = 1e-9;
constexpr double fd_rel_tol = 1e-9;

struct Tally {
    long checks = 0;
    std::vector<std::string> misses;

    void expect(bool ok, const std::string& what) {
        ++checks;
        if (!ok) misses.push_back(what);
    }
    template <class A, class B>
    void equal(const A& actual, const B& expected, const std::string& what) {
        expect(actual == expected, what + ": got '" + actual + "' want '" + expected + "'");
    }
};

struct Criterion {
    const char* id;
    const char* title;
    double limit_s;  // 0 = untimed
    std::function<void(Tally&)> body;
};

std::string std_text(long n, long l) { return to_text(alexander_standard(TorusKnotId(n, l)), 't'); }
std::string laurent_text(long n, long l) { return to_text(alexander_laurent(TorusKnotId(n, l))); }

void golden(Tally& t) {
    t.equal(std_text(1, 2), "1", "standard (1,2)");
    t.equal(std_text(3, 2), "t^2 - t + 1", "standard (3,2)");
    t.equal(std_text(5, 2), "t^4 - t^3 + t^2 - t + 1", "standard (5,2)");
    t.equal(std_text(1, 3), "1", "standard (1,3)");
    t.equal(std_text(2, 3), "t^2 - t + 1", "standard (2,3)");
    t.equal(std_text(4, 3), "t^6 - t^5 + t^3 - t + 1", "standard (4,3)");
    t.equal(laurent_text(3, 2), "t - 1 + t^-1", "laurent (3,2)");
    t.equal(laurent_text(5, 2), "t^2 - t + 1 - t^-1 + t^-2", "laurent (5,2)");
    t.equal(laurent_text(2, 3), "t - 1 + t^-1", "laurent (2,3)");
    t.equal(laurent_text(4, 3), "t^3 - t^2 + 1 - t^-2 + t^-3", "laurent (4,3)");
}

void decomposition_table(Tally& t) {
    const std::vector<std::pair<long, std::string>> rows{
        {1, "+D(1,2)"},
        {2, "+D(3,2)"},
        {4, "+D(7,2) -D(3,2) +D(1,2)"},
        {5, "+D(9,2) -D(5,2) +D(3,2)"},
        {7, "+D(13,2) -D(9,2) +D(7,2) -D(3,2) +D(1,2)"},
        {8, "+D(15,2) -D(11,2) +D(9,2) -D(5,2) +D(3,2)"},
        {10, "+D(19,2) -D(15,2) +D(13,2) -D(9,2) +D(7,2) -D(3,2) +D(1,2)"},
    };
    for (const auto& [n, want] : rows) t.equal(to_text(decompose_n3(n)), want, "n=" + std::to_string(n));
}

void chebyshev_catalog(Tally& t) {
    const char* first[] = {"2", "x", "x^2 - 2", "x^3 - 3*x", "x^4 - 4*x^2 + 2", "x^5 - 5*x^3 + 5*x"};
    const char* second[] = {"1", "x", "x^2 - 1", "x^3 - 2*x", "x^4 - 3*x^2 + 1", "x^5 - 4*x^3 + 3*x"};
    for (long n = 0; n <= 5; ++n) {
        t.equal(to_text(cheb_T(n)), std::string(first[n]), "T" + std::to_string(n));
        t.equal(to_text(cheb_V(n)), std::string(second[n]), "V" + std::to_string(n));
    }
}

void expansion_examples(Tally& t) {
    t.equal(to_text(n2_to_T(3)), "+T1 -1", "l=2 T n=3");
    t.equal(to_text(n2_to_T(5)), "+T2 -T1 +1", "l=2 T n=5");
    t.equal(to_text(n2_to_T(7)), "+T3 -T2 +T1 -1", "l=2 T n=7");
    const std::vector<std::pair<long, std::string>> v_rows{
        {1, "+V0"},
        {2, "+V1 -V0"},
        {4, "+V3 -V2 -V1 +2V0"},
        {5, "+V4 -V3 -V2 +2V1 -V0"},
        {7, "+V6 -V5 -V4 +2V3 -V2 -V1 +2V0"},
    };
    for (const auto& [n, want] : v_rows) t.equal(to_text(n3_to_V(n)), want, "l=3 V n=" + std::to_string(n));
    const std::vector<std::pair<long, std::string>> t_rows{
        {1, "+T0 -1"},
        {2, "+T1 -T0 +1"},
        {4, "+T3 -T2 +T0 -1"},
        {5, "+T4 -T3 +T1 -T0 +1"},
        {7, "+T6 -T5 +T3 -T2 +T0 -1"},
    };
    for (const auto& [n, want] : t_rows) t.equal(to_text(n3_to_T(n)), want, "l=3 T n=" + std::to_string(n));
}

void identity_sweep(Tally& t) {
    const SweepReport r = run_identity_suite(20, 20);
    t.expect(r.checked > 0, "sweep checked nothing");
    for (const auto& f : r.failures) t.expect(false, f.identity + " [" + f.params + "]");
    if (r.ok()) t.checks += static_cast<long>(r.checked) - 1;
}

template <class F>
void for_coprime_pairs(long bound, F&& f) {
    for (long n = 1; n <= bound; ++n) {
        for (long l = 1; l <= bound; ++l) {
            if (std::gcd(n, l) == 1) f(n, l);
        }
    }
}

std::string pair_name(long n, long l) { return "(" + std::to_string(n) + "," + std::to_string(l) + ")"; }

void oracle_equivalence(Tally& t) {
    for_coprime_pairs(30, [&](long n, long l) {
        t.expect(oracle_division(n, l) == alexander_standard(TorusKnotId(n, l)), "oracle mismatch " + pair_name(n, l));
    });
}

void structural(Tally& t) {
    for_coprime_pairs(30, [&](long n, long l) {
        const LaurentPoly d = alexander_laurent(TorusKnotId(n, l));
        const std::string p = pair_name(n, l);
        t.expect(is_palindromic(d), "palindrome " + p);
        t.expect(d.coefficient_sum() == 1, "sum " + p);
        t.expect(d.top().twice == (n - 1) * (l - 1), "degree " + p);
        t.expect(d == alexander_laurent(TorusKnotId(l, n)), "symmetry " + p);
    });
}

void numeric(Tally& t) {
    for (long n = 1; n <= 21; n += 2) {
        const SweepReport r = trig_spot_check(n, default_trig_samples());
        t.expect(default_trig_samples().size() == 8, "sample count");
        for (const auto& f : r.failures) t.expect(false, f.identity + " [" + f.params + "]");
        t.checks += static_cast<long>(r.checked);
    }
    static_assert(trig_abs_tol == trig_tolerance);
    for (long n = 1; n <= 9; n += 2) {
        for (long l = 1; l <= 9; ++l) {
            if (std::gcd(n, l) != 1) continue;
            const LaurentPoly d = alexander_laurent(TorusKnotId(n, l));
            for (double s : {0.5, 2.0, std::exp(1.0)}) {
                const double exact = evaluate(d, s);
                const double got = functional_dependence_eval(n, l, s);
                const double rel = std::fabs(got - exact) / std::max(std::fabs(exact), 1e-300);
                t.expect(rel <= fd_rel_tol, "reduction " + pair_name(n, l) + " t=" + std::to_string(s));
            }
        }
    }
}

template <class E, class F>
void expect_throw(Tally& t, const std::string& what, F&& f) {
    try {
        f();
        t.expect(false, what + ": no error");
    } catch (const E&) {
        t.expect(true, what);
    } catch (const std::exception& e) {
        t.expect(false, what + ": wrong error " + e.what());
    }
}

void error_paths(Tally& t) {
    expect_throw<invalid_input>(t, "non-coprime (4,2)", [] { TorusKnotId(4, 2); });
    expect_throw<invalid_input>(t, "non-coprime (6,9)", [] { alexander_laurent(TorusKnotId(6, 9)); });
    expect_throw<invalid_input>(t, "even n, l=2 family", [] { alexander_n2(4); });
    expect_throw<invalid_input>(t, "even n, V basis", [] { n2_to_V(6); });
    expect_throw<invalid_input>(t, "even n, T basis", [] { n2_to_T(2); });
    expect_throw<invalid_input>(t, "even n, closed form", [] { compute_form(4, 2, FormulaId::EQ35); });
    expect_throw<invalid_input>(t, "3 | n, l=3 family", [] { alexander_n3(9); });
    expect_throw<invalid_input>(t, "3 | n, decomposition", [] { decompose_n3(6); });
    expect_throw<invalid_input>(t, "3 | n, V basis", [] { n3_to_V(3); });
    expect_throw<invalid_input>(t, "3 | n, T basis", [] { n3_to_T(12); });
    expect_throw<invalid_input>(t, "3 | n, closed form", [] { compute_form(6, 3, FormulaId::EQ_N3_TX); });
    expect_throw<not_perfect_square>(t, "sqrt of t + 1 + 1/t", [] { perfect_sqrt(parse_laurent("t + 1 + t^-1")); });
    expect_throw<not_perfect_square>(t, "sqrt of 2t^2", [] { perfect_sqrt(parse_laurent("2*t^2")); });
    expect_throw<not_perfect_square>(t, "sqrt of t^2 + 1", [] { perfect_sqrt(parse_laurent("t^2 + 1")); });
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {"AC1", "golden Alexander polynomials", fast_limit_s, golden},
        {"AC2", "decomposition table", fast_limit_s, decomposition_table},
        {"AC3", "Chebyshev catalogs", fast_limit_s, chebyshev_catalog},
        {"AC4", "expansion examples", fast_limit_s, expansion_examples},
        {"AC5", "identity sweep 20x20", sweep_limit_s, identity_sweep},
        {"AC6", "long-division oracle, n,l <= 30", 0.0, oracle_equivalence},
        {"AC7", "structural properties, n,l <= 30", 0.0, structural},
        {"AC8", "numeric checks", 0.0, numeric},
        {"AC9", "error paths", 0.0, error_paths},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        Tally tally;
        const auto start = std::chrono::steady_clock::now();
        try {
            c.body(tally);
        } catch (const std::exception& e) {
            tally.expect(false, std::string("unexpected exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = c.limit_s == 0.0 || secs < c.limit_s;
        const bool pass = tally.misses.empty() && in_time;
        if (!pass) ++failed;
        std::printf("[%s] %s %s: %ld checks, %zu failures, %.3f s", pass ? "PASS" : "FAIL", c.id, c.title,
                    tally.checks, tally.misses.size(), secs);
        if (c.limit_s > 0.0) std::printf(" (limit %.0f s)", c.limit_s);
        std::printf("\n");
        for (std::size_t i = 0; i < tally.misses.size() && i < 10; ++i) std::printf("    %s\n", tally.misses[i].c_str());
    }
    std::printf("%s: %d of %zu criteria failed\n", failed == 0 ? "ACCEPTED" : "REJECTED", failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
