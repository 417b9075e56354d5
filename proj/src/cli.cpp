#include "knotpoly/cli.hpp"

#include "knotpoly/alexander.hpp"
#include "knotpoly/errors.hpp"
#include "knotpoly/expansions.hpp"
#include "knotpoly/qcalc.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <optional>
#include <ostream>

namespace knotpoly::cli {

namespace {

template <class... Fs>
struct overloaded : Fs... {
    using Fs::operator()...;
};

std::string_view kind_name(ChebKind k) { return k == ChebKind::FirstKind ? "T" : "V"; }

ChebKind parse_kind(const std::string& s) {
    if (s == "T") return ChebKind::FirstKind;
    if (s == "V") return ChebKind::SecondKind;
    throw invalid_input("unknown Chebyshev kind '" + s + "'");
}

// The (n, l) ordering for which basis-specific expansions apply, or nullopt.
std::optional<Expansion> expansion_for(long n, long l, Basis basis) {
    for (auto [a, b] : {std::pair{n, l}, std::pair{l, n}}) {
        if (b == 3) {
            switch (basis) {
                case Basis::AlexanderK2: return decompose_n3(a);
                case Basis::ChebT: return n3_to_T(a);
                case Basis::ChebV: return n3_to_V(a);
                case Basis::QNumber: return n3_to_q(a);
            }
        }
        if (b == 2 && basis != Basis::AlexanderK2) {
            switch (basis) {
                case Basis::ChebT: return n2_to_T(a);
                case Basis::ChebV: return n2_to_V(a);
                case Basis::QNumber: return n2_to_q(a);
                default: break;
            }
        }
    }
    return std::nullopt;
}

void emit(std::ostream& out, const std::string& s) {
    out << s;
    if (s.empty() || s.back() != '\n') out << '\n';
}

}  // namespace

ordered_json to_json(const Result& r) {
    return std::visit(
        overloaded{
            [](const PolyResult& p) {
                ordered_json j;
                for (const auto& [key, value] : p.params) j[key] = value;
                j["form"] = p.form;
                j["terms"] = terms_to_json(p.poly);
                return j;
            },
            [](const ChebyshevResult& c) {
                ordered_json j;
                j["kind"] = std::string(kind_name(c.kind));
                j["n"] = c.n;
                j["coeffs"] = coeffs_to_json(c.poly);
                return j;
            },
            [](const ExpansionResult& e) {
                ordered_json j;
                j["n"] = e.n;
                j["l"] = e.l;
                const ordered_json body = expansion_to_json(e.expansion);
                for (const auto& [key, value] : body.items()) j[key] = value;
                return j;
            },
            [](const ReportResult& r) { return report_to_json(r.report); },
        },
        r);
}

Result from_json(const ordered_json& j) {
    try {
        if (j.contains("checked")) return ReportResult{report_from_json(j)};
        if (j.contains("coeffs")) {
            return ChebyshevResult{parse_kind(j.at("kind").get<std::string>()), j.at("n").get<long>(),
                                   coeffs_from_json(j.at("coeffs"))};
        }
        if (j.contains("basis")) return ExpansionResult{j.at("n").get<long>(), j.at("l").get<long>(), expansion_from_json(j)};
        PolyResult p;
        for (const auto& [key, value] : j.items()) {
            if (value.is_number_integer()) p.params.emplace_back(key, value.get<long>());
        }
        p.form = j.at("form").get<std::string>();
        p.poly = terms_from_json(j.at("terms"));
        return p;
    } catch (const nlohmann::json::exception& ex) {
        throw invalid_input(std::string("malformed result JSON: ") + ex.what());
    }
}

std::string render(const Result& r, OutputFormat fmt) {
    if (fmt == OutputFormat::Json) return to_json(r).dump(2);
    const bool latex = fmt == OutputFormat::Latex;
    return std::visit(overloaded{
                          [latex](const PolyResult& p) { return latex ? to_latex(p.poly) : to_text(p.poly); },
                          [latex](const ChebyshevResult& c) { return latex ? to_latex(c.poly) : to_text(c.poly); },
                          [latex](const ExpansionResult& e) {
                              return latex ? to_latex(e.expansion) : to_text(e.expansion);
                          },
                          [latex](const ReportResult& r) {
                              const std::string body = to_text(r.report);
                              return latex ? "\\begin{verbatim}\n" + body + "\\end{verbatim}" : body;
                          },
                      },
                      r);
}

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Alexander polynomials of torus knots T(n, l) in Chebyshev and q-number bases"};
    app.name("knotpoly");
    app.require_subcommand(1);
    app.fallthrough();

    std::string fmt_name = "text";
    bool check = false;
    app.add_option("--fmt", fmt_name, "Output format")->check(CLI::IsMember({"text", "json", "latex"}));
    app.add_flag("--check", check, "Re-derive the result through the closed form and fail on mismatch");

    long n = 0;
    long l = 0;
    std::string form = "laurent";
    std::string basis = "V";
    std::string formula;
    std::string kind = "T";
    long s = 1;
    long max_n = 10;
    long max_l = 10;
    unsigned threads = 0;
    std::vector<double> thetas;

    auto* alexander = app.add_subcommand("alexander", "Alexander polynomial of T(n, l)");
    alexander->add_option("--n", n)->required();
    alexander->add_option("--l", l)->required();
    alexander->add_option("--form", form)->check(CLI::IsMember({"standard", "laurent"}));

    auto* expand = app.add_subcommand("expand", "Expansion of Δ_{n,l} over a basis");
    expand->add_option("--n", n)->required();
    expand->add_option("--l", l)->required();
    expand->add_option("--basis", basis)->check(CLI::IsMember({"T", "V", "q", "delta2"}));

    auto* compose_form = app.add_subcommand("compose-form", "Δ_{n,l} through one cataloged closed form");
    compose_form->add_option("--n", n)->required();
    compose_form->add_option("--l", l)->required();
    compose_form->add_option("--formula", formula, "Formula id, e.g. EQ49")->required();

    auto* qnum = app.add_subcommand("qnum", "q-number [n]_q with q = t^{s/2}");
    qnum->add_option("--n", n)->required()->check(CLI::NonNegativeNumber);
    qnum->add_option("--s", s)->check(CLI::PositiveNumber);

    auto* cheb = app.add_subcommand("chebyshev", "Chebyshev polynomial T_n or V_n");
    cheb->add_option("--kind", kind)->check(CLI::IsMember({"T", "V"}));
    cheb->add_option("--n", n)->required()->check(CLI::NonNegativeNumber);

    auto* decompose = app.add_subcommand("decompose", "Δ_{n,3} as a signed sum of Δ_{k,2}");
    decompose->add_option("--n", n)->required();

    auto* verify = app.add_subcommand("verify", "Run the exact identity sweep");
    verify->add_option("--max-n", max_n)->check(CLI::Range(2L, 100000L));
    verify->add_option("--max-l", max_l)->check(CLI::Range(2L, 100000L));
    verify->add_option("--threads", threads, "Worker threads (0 = hardware concurrency)");

    auto* trig = app.add_subcommand("trig-check", "Floating-point trigonometric spot checks for Δ_{n,2}");
    trig->add_option("--n", n)->required();
    trig->add_option("--theta", thetas, "θ samples")->delimiter(',');

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }
    const OutputFormat fmt = fmt_name == "json" ? OutputFormat::Json
                             : fmt_name == "latex" ? OutputFormat::Latex
                                                   : OutputFormat::Text;

    try {
        auto check_against = [&](const LaurentPoly& actual, const LaurentPoly& expected) {
            if (!check || actual == expected) return exit_ok;
            err << "check failed: got " << to_text(actual) << ", closed form gives " << to_text(expected) << "\n";
            return exit_check_failed;
        };

        if (alexander->parsed()) {
            const TorusKnotId k(n, l);
            PolyResult r{{{"n", n}, {"l", l}}, form, {}};
            r.poly = form == "standard" ? LaurentPoly::from_poly(alexander_standard(k)) : alexander_laurent(k);
            emit(out, render(r, fmt));
            return exit_ok;
        }
        if (expand->parsed()) {
            const TorusKnotId k(n, l);
            auto e = expansion_for(n, l, parse_basis(basis));
            if (!e) {
                err << "basis " << basis << " needs l = 3" << (basis == "delta2" ? "" : " or l = 2") << "\n";
                return exit_usage;
            }
            emit(out, render(ExpansionResult{n, l, *e}, fmt));
            return check_against(expansion_eval(*e), alexander_laurent(k));
        }
        if (decompose->parsed()) {
            const Expansion e = decompose_n3(n);
            emit(out, render(ExpansionResult{n, 3, e}, fmt));
            return check_against(expansion_eval(e), alexander_n3(n));
        }
        if (compose_form->parsed()) {
            const TorusKnotId k(n, l);
            const FormulaId f = parse_formula(formula);
            const LaurentPoly value = formula_applies(n, l, f) ? compute_form(n, l, f) : compute_form(k, f);
            emit(out, render(PolyResult{{{"n", n}, {"l", l}}, formula, value}, fmt));
            return check_against(value, alexander_laurent(k));
        }
        if (qnum->parsed()) {
            emit(out, render(PolyResult{{{"n", n}, {"s", s}}, "qnumber", q_number(n, QBase(s))}, fmt));
            return exit_ok;
        }
        if (cheb->parsed()) {
            const ChebKind ck = parse_kind(kind);
            emit(out, render(ChebyshevResult{ck, n, chebyshev(ck, n)}, fmt));
            return exit_ok;
        }
        if (verify->parsed()) {
            const SweepReport report = run_identity_suite(max_n, max_l, threads);
            emit(out, render(ReportResult{report}, fmt));
            return report.ok() ? exit_ok : exit_check_failed;
        }
        if (trig->parsed()) {
            if (thetas.empty()) thetas = default_trig_samples();
            const SweepReport report = trig_spot_check(n, thetas);
            emit(out, render(ReportResult{report}, fmt));
            return report.ok() ? exit_ok : exit_check_failed;
        }
    } catch (const invalid_input& e) {
        err << e.what() << "\n";
        return exit_usage;
    } catch (const invalid_base& e) {
        err << e.what() << "\n";
        return exit_usage;
    } catch (const domain_error& e) {
        err << e.what() << "\n";
        return exit_usage;
    } catch (const error& e) {
        err << "internal error: " << e.what() << "\n";
        return exit_check_failed;
    }
    return exit_usage;
}

}  // namespace knotpoly::cli
