#include "knotpoly/poly.hpp"

#include "knotpoly/errors.hpp"

#include <algorithm>
#include <cctype>

namespace knotpoly {

BigInt parse_decimal(const std::string& text) {
    std::size_t i = (!text.empty() && (text[0] == '-' || text[0] == '+')) ? 1 : 0;
    if (i == text.size() ||
        !std::all_of(text.begin() + static_cast<long>(i), text.end(),
                     [](unsigned char c) { return std::isdigit(c) != 0; })) {
        throw invalid_input("not a decimal integer: '" + text + "'");
    }
    return BigInt(text[0] == '+' ? text.substr(1) : text, 10);
}

Poly::Poly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

Poly::Poly(std::initializer_list<long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs) coeffs_.emplace_back(c);
    normalize();
}

Poly Poly::constant(const BigInt& c) { return Poly(std::vector<BigInt>{c}); }

Poly Poly::monomial(const BigInt& c, std::size_t degree) {
    std::vector<BigInt> v(degree + 1);
    v[degree] = c;
    return Poly(std::move(v));
}

void Poly::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt Poly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigInt(0); }

const BigInt& Poly::leading() const {
    if (is_zero()) throw invalid_input("leading coefficient of the zero polynomial");
    return coeffs_.back();
}

long double Poly::evaluate(long double x) const {
    long double acc = 0.0L;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * x + static_cast<long double>(it->get_d());
    }
    return acc;
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

Poly operator+(const Poly& a, const Poly& b) {
    std::vector<BigInt> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] += b.coeffs_[i];
    return Poly(std::move(v));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigInt> v(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            mpz_addmul(v[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
        }
    }
    return Poly(std::move(v));
}

Poly operator*(const BigInt& c, const Poly& p) {
    Poly r = p;
    for (auto& v : r.coeffs_) v *= c;
    r.normalize();
    return r;
}

Poly Poly::shift_up() const {
    if (is_zero()) return {};
    std::vector<BigInt> v;
    v.reserve(coeffs_.size() + 1);
    v.emplace_back(0);
    v.insert(v.end(), coeffs_.begin(), coeffs_.end());
    return Poly(std::move(v));
}

}  // namespace knotpoly
