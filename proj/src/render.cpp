#include "knotpoly/render.hpp"

#include "knotpoly/errors.hpp"

#include <cctype>
#include <cstdio>
#include <cstdlib>

namespace knotpoly {

namespace {

enum class Style { Text, Latex };

std::string exponent_suffix(char var, HalfExp e, Style style) {
    if (e.twice == 2) return std::string(1, var);
    const std::string body = e.is_integral() ? std::to_string(e.twice / 2) : std::to_string(e.twice) + "/2";
    if (style == Style::Latex) return std::string(1, var) + "^{" + body + "}";
    if (e.is_integral()) return std::string(1, var) + "^" + body;
    return std::string(1, var) + "^(" + body + ")";
}

std::string render_terms(const std::vector<LaurentPoly::Term>& terms, char var, Style style) {
    if (terms.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms) {
        const bool negative = c < 0;
        if (first) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;
        const BigInt mag = abs(c);
        if (e.twice == 0) {
            out += to_decimal(mag);
            continue;
        }
        if (mag != 1) out += to_decimal(mag) + (style == Style::Text ? "*" : "");
        out += exponent_suffix(var, e, style);
    }
    return out;
}

std::vector<LaurentPoly::Term> poly_terms(const Poly& p) { return LaurentPoly::from_poly(p).terms(); }

std::string q_base_text(int s, Style style) {
    if (s == 2) return "t";
    if (s % 2 == 0) return style == Style::Text ? "t^" + std::to_string(s / 2) : "t^{" + std::to_string(s / 2) + "}";
    return style == Style::Text ? "t^(" + std::to_string(s) + "/2)" : "t^{" + std::to_string(s) + "/2}";
}

std::string element_text(const Expansion& e, long index) {
    switch (e.basis()) {
        case Basis::ChebT: return "T" + std::to_string(index);
        case Basis::ChebV: return "V" + std::to_string(index);
        case Basis::AlexanderK2: return "D(" + std::to_string(index) + ",2)";
        case Basis::QNumber: return "[" + std::to_string(index) + "]_" + q_base_text(e.q_base(), Style::Text);
    }
    return "?";
}

std::string element_latex(const Expansion& e, long index) {
    const std::string i = std::to_string(index);
    switch (e.basis()) {
        case Basis::ChebT: return "T_{" + i + "}(x)";
        case Basis::ChebV: return "V_{" + i + "}(x)";
        case Basis::AlexanderK2: return "\\Delta_{" + i + ",2}(t)";
        case Basis::QNumber: return "[" + i + "]_{" + q_base_text(e.q_base(), Style::Latex) + "}";
    }
    return "?";
}

// Parser over the rendered forms; accepts both styles.
class LaurentParser {
public:
    explicit LaurentParser(std::string_view s) {
        for (char ch : s) {
            if (!std::isspace(static_cast<unsigned char>(ch))) text_ += ch;
        }
    }

    LaurentPoly parse() {
        if (text_ == "0") return {};
        std::vector<LaurentPoly::Term> terms;
        bool first = true;
        while (pos_ < text_.size()) {
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = text_[pos_++] == '-' ? -1 : 1;
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            first = false;
            BigInt coef = 1;
            bool has_coef = false;
            if (std::isdigit(static_cast<unsigned char>(peek())) != 0) {
                coef = parse_decimal(read_digits());
                has_coef = true;
                if (peek() == '*') ++pos_;
            }
            HalfExp e{0};
            if (peek() == 't') {
                ++pos_;
                e = HalfExp{2};
                if (peek() == '^') {
                    ++pos_;
                    e = read_exponent();
                }
            } else if (!has_coef) {
                fail("expected a coefficient or 't'");
            }
            terms.emplace_back(e, sign * coef);
        }
        if (terms.empty()) fail("empty polynomial");
        return LaurentPoly(std::move(terms));
    }

private:
    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    [[noreturn]] void fail(const std::string& what) const {
        throw invalid_input("cannot parse polynomial '" + text_ + "' at " + std::to_string(pos_) + ": " + what);
    }

    std::string read_digits() {
        const std::size_t start = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek())) != 0) ++pos_;
        if (start == pos_) fail("expected digits");
        return text_.substr(start, pos_ - start);
    }

    std::int64_t read_signed() {
        bool negative = false;
        if (peek() == '-') {
            negative = true;
            ++pos_;
        }
        const std::int64_t v = std::stoll(read_digits());
        return negative ? -v : v;
    }

    HalfExp read_exponent() {
        char close = '\0';
        if (peek() == '{') close = '}';
        if (peek() == '(') close = ')';
        if (close != '\0') ++pos_;
        const std::int64_t v = read_signed();
        HalfExp e = HalfExp::whole(v);
        if (peek() == '/') {
            ++pos_;
            if (read_digits() != "2") fail("only halves are supported");
            e = HalfExp::half(v);
        }
        if (close != '\0') {
            if (peek() != close) fail("unbalanced exponent");
            ++pos_;
        }
        return e;
    }

    std::string text_;
    std::size_t pos_ = 0;
};

}  // namespace

std::string to_text(const LaurentPoly& p) { return render_terms(p.terms(), 't', Style::Text); }
std::string to_latex(const LaurentPoly& p) { return render_terms(p.terms(), 't', Style::Latex); }
std::string to_text(const Poly& p, char var) { return render_terms(poly_terms(p), var, Style::Text); }
std::string to_latex(const Poly& p, char var) { return render_terms(poly_terms(p), var, Style::Latex); }

LaurentPoly parse_laurent(std::string_view text) { return LaurentParser(text).parse(); }

std::string to_text(const Expansion& e) {
    std::string body;
    auto append = [&body](const std::string& piece) {
        if (!body.empty()) body += " ";
        body += piece;
    };
    for (const auto& term : e.terms()) {
        const BigInt mag = abs(term.coef);
        append(std::string(term.coef < 0 ? "-" : "+") + (mag != 1 ? to_decimal(mag) : "") +
               element_text(e, term.index));
    }
    if (e.constant() != 0) append(std::string(e.constant() < 0 ? "-" : "+") + to_decimal(abs(e.constant())));
    if (body.empty()) body = "0";
    if (e.basis() == Basis::QNumber && e.denominator() != 1) {
        return "(" + body + ") / " + element_text(e, e.denominator());
    }
    return body;
}

std::string to_latex(const Expansion& e) {
    std::string body;
    auto append = [&body](const BigInt& coef, const std::string& element) {
        const BigInt mag = abs(coef);
        if (body.empty()) {
            if (coef < 0) body += "-";
        } else {
            body += coef < 0 ? " - " : " + ";
        }
        if (element.empty()) {
            body += to_decimal(mag);
        } else {
            body += (mag != 1 ? to_decimal(mag) : "") + element;
        }
    };
    for (const auto& term : e.terms()) append(term.coef, element_latex(e, term.index));
    if (e.constant() != 0) append(e.constant(), "");
    if (body.empty()) body = "0";
    if (e.basis() == Basis::QNumber && e.denominator() != 1) {
        return "\\frac{" + body + "}{" + element_latex(e, e.denominator()) + "}";
    }
    return body;
}

std::string to_text(const SweepReport& r) {
    char elapsed[64];
    std::snprintf(elapsed, sizeof elapsed, "%.3f", r.elapsed_ms);
    std::string out = "checked: " + std::to_string(r.checked) + "\nfailures: " + std::to_string(r.failures.size()) +
                      "\nelapsed_ms: " + elapsed + "\n";
    for (const auto& f : r.failures) {
        out += "FAIL " + f.identity + " [" + f.params + "] expected: " + f.expected + " actual: " + f.actual + "\n";
    }
    return out;
}

ordered_json terms_to_json(const LaurentPoly& p) {
    ordered_json arr = ordered_json::array();
    for (const auto& [e, c] : p.terms()) arr.push_back({{"exp2", e.twice}, {"coef", to_decimal(c)}});
    return arr;
}

LaurentPoly terms_from_json(const ordered_json& j) {
    std::vector<LaurentPoly::Term> terms;
    for (const auto& t : j) {
        terms.emplace_back(HalfExp{t.at("exp2").get<std::int64_t>()}, parse_decimal(t.at("coef").get<std::string>()));
    }
    return LaurentPoly(std::move(terms));
}

ordered_json coeffs_to_json(const Poly& p) {
    ordered_json arr = ordered_json::array();
    for (std::size_t i = p.coeffs().size(); i-- > 0;) {
        if (p.coeffs()[i] != 0) arr.push_back({{"deg", i}, {"coef", to_decimal(p.coeffs()[i])}});
    }
    return arr;
}

Poly coeffs_from_json(const ordered_json& j) {
    std::vector<BigInt> v;
    for (const auto& t : j) {
        const auto deg = t.at("deg").get<std::size_t>();
        if (v.size() <= deg) v.resize(deg + 1);
        v[deg] += parse_decimal(t.at("coef").get<std::string>());
    }
    return Poly(std::move(v));
}

ordered_json expansion_to_json(const Expansion& e) {
    ordered_json j;
    j["basis"] = std::string(basis_name(e.basis()));
    if (e.basis() == Basis::QNumber) {
        j["q_base"] = e.q_base();
        j["denominator"] = e.denominator();
    }
    ordered_json terms = ordered_json::array();
    for (const auto& t : e.terms()) terms.push_back({{"index", t.index}, {"coef", to_decimal(t.coef)}});
    j["terms"] = std::move(terms);
    j["constant"] = to_decimal(e.constant());
    return j;
}

Expansion expansion_from_json(const ordered_json& j) {
    const Basis basis = parse_basis(j.at("basis").get<std::string>());
    std::vector<std::pair<long, BigInt>> raw;
    for (const auto& t : j.at("terms")) {
        raw.emplace_back(t.at("index").get<long>(), parse_decimal(t.at("coef").get<std::string>()));
    }
    BigInt constant = parse_decimal(j.at("constant").get<std::string>());
    if (basis == Basis::QNumber) {
        return Expansion::make_q(j.at("q_base").get<int>(), raw, constant, j.at("denominator").get<long>());
    }
    return Expansion::make(basis, raw, constant);
}

ordered_json report_to_json(const SweepReport& r) {
    ordered_json failures = ordered_json::array();
    for (const auto& f : r.failures) {
        failures.push_back({{"identity", f.identity}, {"params", f.params}, {"expected", f.expected}, {"actual", f.actual}});
    }
    ordered_json j;
    j["checked"] = r.checked;
    j["failures"] = std::move(failures);
    j["elapsed_ms"] = r.elapsed_ms;
    return j;
}

SweepReport report_from_json(const ordered_json& j) {
    SweepReport r;
    r.checked = j.at("checked").get<std::uint64_t>();
    for (const auto& f : j.at("failures")) {
        r.failures.push_back({f.at("identity").get<std::string>(), f.at("params").get<std::string>(),
                              f.at("expected").get<std::string>(), f.at("actual").get<std::string>()});
    }
    r.elapsed_ms = j.at("elapsed_ms").get<double>();
    return r;
}

}  // namespace knotpoly
