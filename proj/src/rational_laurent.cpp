#include "knotpoly/rational_laurent.hpp"

#include "knotpoly/errors.hpp"

namespace knotpoly {

RationalLaurent::RationalLaurent(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw invalid_input("rational Laurent polynomial with zero denominator");
}

RationalLaurent::RationalLaurent(LaurentPoly value) : num_(std::move(value)), den_(1) {}

LaurentPoly RationalLaurent::finalize() const { return exact_divide(num_, den_); }

RationalLaurent operator+(const RationalLaurent& a, const RationalLaurent& b) {
    if (a.den_ == b.den_) return {a.num_ + b.num_, a.den_};
    return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}

RationalLaurent operator-(const RationalLaurent& a, const RationalLaurent& b) {
    if (a.den_ == b.den_) return {a.num_ - b.num_, a.den_};
    return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
}

RationalLaurent operator*(const RationalLaurent& a, const RationalLaurent& b) {
    return {a.num_ * b.num_, a.den_ * b.den_};
}

RationalLaurent operator/(const RationalLaurent& a, const RationalLaurent& b) {
    return {a.num_ * b.den_, a.den_ * b.num_};
}

}  // namespace knotpoly
