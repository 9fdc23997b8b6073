#pragma once

#include "nilorb/ratfunc.hpp"

#include <string>

namespace nilorb {

/// Descending-degree human form, e.g. "q^4 + 3q^2 + 2q". Non-integer
/// coefficients are parenthesised: "(1/2)q^2 - (1/2)q".
std::string to_pretty(const PolyQ& p);
/// "num" when the denominator is 1, otherwise "(num)/(den)".
std::string to_pretty(const RationalFunction& f);

} // namespace nilorb
