#pragma once

#include <string>
#include <string_view>

#include <gmpxx.h>

namespace qseries {

/// Exact rational coefficient. GMP keeps every value in lowest terms with a
/// positive denominator, and zero as 0/1.
using Rat = mpq_class;

/// Parses "p", "-p" or "p/q" (q != 0). Throws Error(InvalidArgument).
Rat parse_rat(std::string_view text);

/// Always "p/q", including integers ("3/1") and zero ("0/1").
std::string to_fraction_string(const Rat& value);

/// "p" for integers, "p/q" otherwise.
std::string to_display_string(const Rat& value);

}  // namespace qseries
