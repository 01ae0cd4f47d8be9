#pragma once

#include <gmpxx.h>
#include <string>

#include "hilb2/errors.hpp"

namespace hilb2 {

/// Exact rational scalar.  All arithmetic in the library is exact; no
/// floating point is used anywhere.
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p", "-p" or "p/q" into a canonical rational.
inline Rational parse_rational(const std::string& s) {
    mpq_class q;
    if (q.set_str(s, 10) != 0)
        throw parse_error("invalid rational literal: '" + s + "'");
    if (q.get_den() == 0)
        throw parse_error("zero denominator in rational literal: '" + s + "'");
    q.canonicalize();
    return q;
}

/// Canonical "p/q" or "p" form; inverse of parse_rational.
inline std::string rational_str(const Rational& q) {
    return q.get_str();
}

} // namespace hilb2
