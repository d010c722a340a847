#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace chowkit {

using Integer = mpz_class;
using Rational = mpq_class;

inline std::string to_string(const Rational& q) { return q.get_str(); }

/// Parses "a" or "a/b" with an optional sign; the result is canonicalized.
Rational parse_rational(std::string_view text);

}  // namespace chowkit
