#pragma once

#include <gmpxx.h>

#include <string>

namespace knotpoly {

using BigInt = mpz_class;
using BigRational = mpq_class;

inline std::string to_decimal(const BigInt& v) { return v.get_str(10); }

/// Parses a base-10 integer with optional leading sign; throws invalid_input on junk.
BigInt parse_decimal(const std::string& text);

}  // namespace knotpoly
