#include "knotpoly/laurent.hpp"

#include "knotpoly/errors.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>

namespace knotpoly {

namespace {

bool by_descending_exp(const LaurentPoly::Term& a, const LaurentPoly::Term& b) {
    return a.first > b.first;
}

// Two-pointer merge of descending term lists, sign applied to rhs.
std::vector<LaurentPoly::Term> merge_terms(const std::vector<LaurentPoly::Term>& a,
                                           const std::vector<LaurentPoly::Term>& b, int sign) {
    std::vector<LaurentPoly::Term> out;
    out.reserve(a.size() + b.size());
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() || j != b.end()) {
        if (j == b.end() || (i != a.end() && i->first > j->first)) {
            out.push_back(*i++);
        } else if (i == a.end() || j->first > i->first) {
            out.emplace_back(j->first, sign > 0 ? j->second : BigInt(-j->second));
            ++j;
        } else {
            BigInt c = sign > 0 ? BigInt(i->second + j->second) : BigInt(i->second - j->second);
            if (c != 0) out.emplace_back(i->first, std::move(c));
            ++i;
            ++j;
        }
    }
    return out;
}

}  // namespace

LaurentPoly::LaurentPoly(long constant) {
    if (constant != 0) terms_.emplace_back(HalfExp{0}, BigInt(constant));
}

LaurentPoly::LaurentPoly(std::vector<Term> terms) {
    std::stable_sort(terms.begin(), terms.end(), by_descending_exp);
    for (auto& t : terms) {
        if (!terms_.empty() && terms_.back().first == t.first) {
            terms_.back().second += t.second;
        } else {
            if (!terms_.empty() && terms_.back().second == 0) terms_.pop_back();
            terms_.push_back(std::move(t));
        }
    }
    if (!terms_.empty() && terms_.back().second == 0) terms_.pop_back();
}

LaurentPoly LaurentPoly::monomial(const BigInt& c, HalfExp e) {
    if (c == 0) return {};
    return LaurentPoly(sorted_tag{}, {Term{e, c}});
}

LaurentPoly LaurentPoly::from_poly(const Poly& p) {
    std::vector<Term> v;
    const auto& cs = p.coeffs();
    for (std::size_t i = cs.size(); i-- > 0;) {
        if (cs[i] != 0) v.emplace_back(HalfExp::whole(static_cast<std::int64_t>(i)), cs[i]);
    }
    return LaurentPoly(sorted_tag{}, std::move(v));
}

HalfExp LaurentPoly::top() const {
    if (is_zero()) throw invalid_input("top exponent of the zero polynomial");
    return terms_.front().first;
}

HalfExp LaurentPoly::bottom() const {
    if (is_zero()) throw invalid_input("bottom exponent of the zero polynomial");
    return terms_.back().first;
}

const BigInt& LaurentPoly::leading() const {
    if (is_zero()) throw invalid_input("leading coefficient of the zero polynomial");
    return terms_.front().second;
}

BigInt LaurentPoly::coeff(HalfExp e) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), Term{e, BigInt(0)}, by_descending_exp);
    return (it != terms_.end() && it->first == e) ? it->second : BigInt(0);
}

BigInt LaurentPoly::coefficient_sum() const {
    BigInt s = 0;
    for (const auto& [e, c] : terms_) s += c;
    return s;
}

LaurentPoly LaurentPoly::reflected() const {
    std::vector<Term> v;
    v.reserve(terms_.size());
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) v.emplace_back(-it->first, it->second);
    return LaurentPoly(sorted_tag{}, std::move(v));
}

LaurentPoly LaurentPoly::shifted(HalfExp e) const {
    auto v = terms_;
    for (auto& t : v) t.first = t.first + e;
    return LaurentPoly(sorted_tag{}, std::move(v));
}

Poly LaurentPoly::to_poly() const {
    if (is_zero()) return {};
    if (bottom().twice < 0) throw invalid_input("negative exponent in conversion to Poly");
    std::vector<BigInt> v(static_cast<std::size_t>(top().twice / 2) + 1);
    for (const auto& [e, c] : terms_) {
        if (!e.is_integral()) throw invalid_input("half-integer exponent in conversion to Poly");
        v[static_cast<std::size_t>(e.twice / 2)] = c;
    }
    return Poly(std::move(v));
}

LaurentPoly LaurentPoly::operator-() const {
    auto v = terms_;
    for (auto& t : v) t.second = -t.second;
    return LaurentPoly(sorted_tag{}, std::move(v));
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& b) {
    terms_ = merge_terms(terms_, b.terms_, +1);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& b) {
    terms_ = merge_terms(terms_, b.terms_, -1);
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& b) {
    *this = *this * b;
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    const std::int64_t hi = a.top().twice + b.top().twice;
    const std::int64_t lo = a.bottom().twice + b.bottom().twice;
    const auto span = static_cast<std::uint64_t>(hi - lo);
    const std::uint64_t work = static_cast<std::uint64_t>(a.size()) * b.size();

    std::vector<LaurentPoly::Term> out;
    if (span <= 4 * work + 64) {
        std::vector<BigInt> acc(span + 1);
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                auto slot = static_cast<std::size_t>(hi - (ea.twice + eb.twice));
                mpz_addmul(acc[slot].get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
            }
        }
        for (std::size_t i = 0; i < acc.size(); ++i) {
            if (acc[i] != 0) out.emplace_back(HalfExp{hi - static_cast<std::int64_t>(i)}, std::move(acc[i]));
        }
    } else {
        std::map<std::int64_t, BigInt, std::greater<>> acc;
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                auto& slot = acc[ea.twice + eb.twice];
                mpz_addmul(slot.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
            }
        }
        for (auto& [e, c] : acc) {
            if (c != 0) out.emplace_back(HalfExp{e}, std::move(c));
        }
    }
    return LaurentPoly(LaurentPoly::sorted_tag{}, std::move(out));
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.terms_.size() == b.terms_.size() &&
           std::equal(a.terms_.begin(), a.terms_.end(), b.terms_.begin(),
                      [](const auto& x, const auto& y) { return x.first == y.first && x.second == y.second; });
}

LaurentPoly exact_divide(const LaurentPoly& a, const LaurentPoly& b) {
    if (b.is_zero()) throw invalid_input("division by the zero polynomial");
    if (a.is_zero()) return {};

    const std::int64_t lowest = a.bottom().twice - b.bottom().twice;
    const std::int64_t b_top = b.top().twice;
    const BigInt& b_lead = b.leading();

    std::map<std::int64_t, BigInt, std::greater<>> rem;
    for (const auto& [e, c] : a.terms()) rem.emplace(e.twice, c);

    std::vector<LaurentPoly::Term> quotient;
    while (!rem.empty()) {
        auto head = rem.begin();
        const std::int64_t qe = head->first - b_top;
        if (qe < lowest || !mpz_divisible_p(head->second.get_mpz_t(), b_lead.get_mpz_t())) {
            throw not_divisible("exact division left a nonzero remainder");
        }
        BigInt qc;
        mpz_divexact(qc.get_mpz_t(), head->second.get_mpz_t(), b_lead.get_mpz_t());
        for (const auto& [eb, cb] : b.terms()) {
            auto [it, inserted] = rem.try_emplace(qe + eb.twice);
            mpz_submul(it->second.get_mpz_t(), qc.get_mpz_t(), cb.get_mpz_t());
            if (it->second == 0) rem.erase(it);
        }
        quotient.emplace_back(HalfExp{qe}, std::move(qc));
    }
    return LaurentPoly(std::move(quotient));
}

LaurentPoly compose(const Poly& p, const LaurentPoly& arg) {
    LaurentPoly acc;
    const auto& cs = p.coeffs();
    for (std::size_t i = cs.size(); i-- > 0;) {
        acc = acc * arg;
        if (cs[i] != 0) acc += LaurentPoly::monomial(cs[i], HalfExp{0});
    }
    return acc;
}

LaurentPoly perfect_sqrt(const LaurentPoly& p) {
    if (p.is_zero()) throw invalid_input("square root of the zero polynomial");
    const std::int64_t top = p.top().twice;
    const std::int64_t bottom = p.bottom().twice;
    if (top % 2 != 0 || bottom % 2 != 0 || p.leading() < 0 ||
        !mpz_perfect_square_p(p.leading().get_mpz_t())) {
        throw not_perfect_square("leading or trailing term is not a square");
    }
    BigInt root_lead;
    mpz_sqrt(root_lead.get_mpz_t(), p.leading().get_mpz_t());
    const std::int64_t root_top = top / 2;
    const std::int64_t root_bottom = bottom / 2;

    LaurentPoly root = LaurentPoly::monomial(root_lead, HalfExp{root_top});
    LaurentPoly rem = p - root * root;
    const BigInt twice_lead = 2 * root_lead;
    while (!rem.is_zero()) {
        const std::int64_t e = rem.top().twice - root_top;
        if (e < root_bottom || !mpz_divisible_p(rem.leading().get_mpz_t(), twice_lead.get_mpz_t())) {
            throw not_perfect_square("no Laurent polynomial squares to the input");
        }
        BigInt c;
        mpz_divexact(c.get_mpz_t(), rem.leading().get_mpz_t(), twice_lead.get_mpz_t());
        LaurentPoly term = LaurentPoly::monomial(c, HalfExp{e});
        rem -= (root + root + term) * term;
        root += term;
    }
    return root;
}

bool is_palindromic(const LaurentPoly& p) { return p == p.reflected(); }

double evaluate(const LaurentPoly& p, double t) {
    if (t == 0.0) throw domain_error("evaluation at t = 0");
    bool has_half = std::any_of(p.terms().begin(), p.terms().end(),
                                [](const auto& term) { return !term.first.is_integral(); });
    if (has_half && t < 0.0) throw domain_error("half-integer exponent at negative t");
    long double acc = 0.0L;
    for (const auto& [e, c] : p.terms()) {
        long double power = e.is_integral() ? std::pow(static_cast<long double>(t), e.twice / 2)
                                            : std::pow(static_cast<long double>(t), e.twice / 2.0L);
        acc += static_cast<long double>(c.get_d()) * power;
    }
    return static_cast<double>(acc);
}

BigRational evaluate(const LaurentPoly& p, const BigRational& t) {
    if (t == 0) throw domain_error("evaluation at t = 0");
    bool has_half = std::any_of(p.terms().begin(), p.terms().end(),
                                [](const auto& term) { return !term.first.is_integral(); });
    BigRational base = t;
    bool base_is_root = false;
    if (has_half) {
        if (t < 0 || !mpz_perfect_square_p(t.get_num_mpz_t()) || !mpz_perfect_square_p(t.get_den_mpz_t())) {
            throw domain_error("exact evaluation with half exponents needs a rational square t");
        }
        BigInt rn, rd;
        mpz_sqrt(rn.get_mpz_t(), t.get_num_mpz_t());
        mpz_sqrt(rd.get_mpz_t(), t.get_den_mpz_t());
        base = BigRational(rn, rd);
        base_is_root = true;
    }
    BigRational acc = 0;
    for (const auto& [e, c] : p.terms()) {
        std::int64_t k = base_is_root ? e.twice : e.twice / 2;
        auto mag = static_cast<unsigned long>(k < 0 ? -k : k);
        BigInt num, den;
        mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), mag);
        mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), mag);
        BigRational power = k < 0 ? BigRational(den, num) : BigRational(num, den);
        power.canonicalize();
        acc += BigRational(c) * power;
    }
    return acc;
}

LaurentPoly y_variable() { return LaurentPoly::t_half_pow(1) + LaurentPoly::t_half_pow(-1); }

LaurentPoly x_variable() { return LaurentPoly::t_pow(1) + LaurentPoly::t_pow(-1); }

}  // namespace knotpoly
