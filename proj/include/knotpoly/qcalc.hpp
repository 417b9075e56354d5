#pragma once

#include "knotpoly/laurent.hpp"
#include "knotpoly/rational_laurent.hpp"

namespace knotpoly {

/// q = t^{s/2}.
class QBase {
public:
    /// Throws invalid_base for s < 1.
    explicit QBase(long s);
    long s() const { return s_; }
    /// q + q^{-1}.
    LaurentPoly q_plus_inverse() const;

private:
    long s_;
};

/// [n]_q = (q^n - q^{-n})/(q - q^{-1}) = Σ_{i<n} q^{n-1-2i}; [0]_q = 0.
LaurentPoly q_number(long n, const QBase& base);

/**
 * The fractional bracket [x/d]_{q}, q = t^{s/2}, as the pair
 * [x]_{q'} / [d]_{q'} with q' = t^{(s/d)/2}. Throws invalid_base unless d | s.
 */
RationalLaurent q_bracket_ratio(long x, long d, const QBase& base);

}  // namespace knotpoly
