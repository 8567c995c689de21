#pragma once

#include <gmpxx.h>

#include <string>

namespace zc {

using Rational = mpq_class;

/// Parses "p", "-p", or "p/q" with arbitrary-precision integers.
/// Decimal notation is rejected on purpose: parameters such as c must be
/// exact so that results (and cache keys) are reproducible across precisions.
Rational parse_rational(const std::string& text);

/// Renders canonically as "p" or "p/q".
std::string format_rational(const Rational& value);

}  // namespace zc
