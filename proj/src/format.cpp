#include "nilorb/format.hpp"

#include <sstream>

namespace nilorb {

std::string to_pretty(const PolyQ& p)
{
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = p.degree(); k >= 0; --k) {
        BigRat c = p.coeff(k);
        if (c == 0) continue;
        const bool negative = c < 0;
        if (negative) c = -c;
        if (first) {
            if (negative) os << '-';
        } else {
            os << (negative ? " - " : " + ");
        }
        first = false;
        const bool unit = (c == 1);
        if (k == 0 || !unit) {
            if (is_integer(c))
                os << c.get_str();
            else if (k == 0)
                os << c.get_str();
            else
                os << '(' << c.get_str() << ')';
        }
        if (k >= 1) os << 'q';
        if (k >= 2) os << '^' << k;
    }
    return os.str();
}

std::string to_pretty(const RationalFunction& f)
{
    if (f.is_polynomial()) return to_pretty(f.num());
    return "(" + to_pretty(f.num()) + ")/(" + to_pretty(f.den()) + ")";
}

} // namespace nilorb
