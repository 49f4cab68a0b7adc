#ifndef CSFKIT_RATIONAL_HPP
#define CSFKIT_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace csfkit {

/// Exact rationals over arbitrary-precision integers.  GMP keeps values in
/// lowest terms with a positive denominator, which is exactly the contract
/// the rest of the library assumes.
using Rational = mpq_class;

inline Rational rat(std::int64_t num, std::int64_t den = 1) {
    if (den == 0) throw std::invalid_argument("rat: zero denominator");
    Rational q(static_cast<long>(num), static_cast<long>(den));
    q.canonicalize();
    return q;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

/// "num/den", denominator always present ("3/1", "-5/2").
inline std::string to_fraction_string(const Rational& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

/// Pretty form for tables: integers without the "/1".
inline std::string to_compact_string(const Rational& q) {
    if (is_integer(q)) return q.get_num().get_str();
    return to_fraction_string(q);
}

}  // namespace csfkit

#endif
