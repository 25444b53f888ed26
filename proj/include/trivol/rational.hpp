#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace trivol {

/// Exact rational scalar. All arithmetic is exact; no rounding ever occurs.
using Scalar = mpq_class;

/// Parses "p", "p/q", or a finite decimal such as "-1.25", exactly.
/// Throws std::invalid_argument on malformed input or a zero denominator.
Scalar parse_scalar(std::string_view text);

/// Canonical "p/q" rendering; the denominator is always present ("5/1").
std::string fraction_string(const Scalar& x);

double to_double(const Scalar& x);

/// Floating rendition with 17 significant digits.
std::string double_string(const Scalar& x);

}  // namespace trivol
