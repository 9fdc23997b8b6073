#pragma once

#include <gmpxx.h>

#include <string>

namespace nilorb {

using BigInt = mpz_class;
using BigRat = mpq_class;

inline BigRat make_rat(long num, long den = 1)
{
    BigRat r(num, den);
    r.canonicalize();
    return r;
}

inline std::string to_string(const BigInt& v) { return v.get_str(); }
inline std::string to_string(const BigRat& v) { return v.get_str(); }

inline bool is_integer(const BigRat& v) { return v.get_den() == 1; }

} // namespace nilorb
