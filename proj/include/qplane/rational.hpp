#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace qplane {

/// Exact rational number. All core arithmetic in the library is built on
/// these; no floating point appears anywhere.
using Rational = mpq_class;

inline std::string to_string(const Rational& r) { return r.get_str(); }

/// Parses "p" or "p/q" with optional sign. Throws on malformed input.
inline Rational rational_from_string(const std::string& s) {
    Rational r;
    if (r.set_str(s, 10) != 0)
        throw std::invalid_argument("bad rational literal: '" + s + "'");
    r.canonicalize();
    return r;
}

}  // namespace qplane
