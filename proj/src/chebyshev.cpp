#include "knotpoly/chebyshev.hpp"

#include "knotpoly/alexander.hpp"
#include "knotpoly/errors.hpp"
#include "knotpoly/qcalc.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <string>

namespace knotpoly {

namespace {

// Grows P_{k+1} = x P_k - P_{k-1} on demand. Readers share the lock; the
// table only ever appends, so returned copies are stable.
class RecurrenceTable {
public:
    RecurrenceTable(Poly p0, Poly p1) : seq_{std::move(p0), std::move(p1)} {}

    Poly get(long n) {
        const auto idx = static_cast<std::size_t>(n);
        {
            std::shared_lock lock(mu_);
            if (idx < seq_.size()) return seq_[idx];
        }
        std::unique_lock lock(mu_);
        while (seq_.size() <= idx) {
            const std::size_t k = seq_.size();
            seq_.push_back(seq_[k - 1].shift_up() - seq_[k - 2]);
        }
        return seq_[idx];
    }

private:
    std::shared_mutex mu_;
    std::vector<Poly> seq_;
};

RecurrenceTable& first_kind() {
    static RecurrenceTable table(Poly{2}, Poly{0, 1});
    return table;
}

RecurrenceTable& second_kind() {
    static RecurrenceTable table(Poly{1}, Poly{0, 1});
    return table;
}

void require_index(long n) {
    if (n < 0) throw invalid_input("Chebyshev index must be non-negative, got " + std::to_string(n));
}

}  // namespace

Poly cheb_T(long n) {
    require_index(n);
    return first_kind().get(n);
}

Poly cheb_V(long n) {
    require_index(n);
    return second_kind().get(n);
}

Poly chebyshev(ChebKind kind, long n) { return kind == ChebKind::FirstKind ? cheb_T(n) : cheb_V(n); }

std::string_view basis_name(Basis b) {
    switch (b) {
        case Basis::ChebT: return "T";
        case Basis::ChebV: return "V";
        case Basis::AlexanderK2: return "delta2";
        case Basis::QNumber: return "q";
    }
    return "?";
}

Basis parse_basis(std::string_view name) {
    for (Basis b : {Basis::ChebT, Basis::ChebV, Basis::AlexanderK2, Basis::QNumber}) {
        if (basis_name(b) == name) return b;
    }
    throw invalid_input("unknown basis '" + std::string(name) + "'");
}

Expansion Expansion::make(Basis basis, const std::vector<std::pair<long, BigInt>>& raw, BigInt constant) {
    std::map<long, BigInt, std::greater<>> combined;
    for (const auto& [index, coef] : raw) {
        if (index < 0) continue;
        combined[index] += coef;
    }
    Expansion e;
    e.basis_ = basis;
    for (auto& [index, coef] : combined) {
        if (coef != 0) e.terms_.push_back(Term{index, std::move(coef)});
    }
    e.constant_ = std::move(constant);
    return e;
}

Expansion Expansion::make_q(int s, const std::vector<std::pair<long, BigInt>>& raw, BigInt constant,
                            long denominator) {
    if (s < 1) throw invalid_base("q base exponent must be positive");
    if (denominator < 1) throw invalid_input("q-number denominator must be positive");
    Expansion e = make(Basis::QNumber, raw, std::move(constant));
    e.q_base_ = s;
    e.denominator_ = denominator;
    return e;
}

LaurentPoly expansion_eval(const Expansion& e) {
    LaurentPoly sum(std::vector<LaurentPoly::Term>{{HalfExp{0}, e.constant()}});
    const LaurentPoly x = x_variable();
    for (const auto& term : e.terms()) {
        LaurentPoly element;
        switch (e.basis()) {
            case Basis::ChebT: element = compose(cheb_T(term.index), x); break;
            case Basis::ChebV: element = compose(cheb_V(term.index), x); break;
            case Basis::AlexanderK2: element = alexander_laurent(TorusKnotId(term.index, 2)); break;
            case Basis::QNumber: element = q_number(term.index, QBase(e.q_base())); break;
        }
        sum += LaurentPoly::monomial(term.coef, HalfExp{0}) * element;
    }
    if (e.basis() == Basis::QNumber && e.denominator() != 1) {
        return exact_divide(sum, q_number(e.denominator(), QBase(e.q_base())));
    }
    return sum;
}

}  // namespace knotpoly
