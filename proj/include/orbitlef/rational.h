#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "orbitlef/error.h"

namespace orbitlef {

// Exact arbitrary-precision rational, canonical form maintained by GMP.
using Rat = mpq_class;

// Renders "p/q", or just "p" when the denominator is 1.
std::string rat_str(const Rat& r);

// Parses "p", "-p", "p/q" (optional sign on p). Throws ParseError on anything else.
Rat parse_rat(const std::string& text);

// Parses a comma-separated list of rationals, e.g. "1,-1/2,0".
std::vector<Rat> parse_rat_list(const std::string& text);

} // namespace orbitlef
