#pragma once

#include "nilorb/ratfunc.hpp"

#include <vector>

namespace nilorb {

/// Power series in X with Q(q) coefficients, truncated at an inclusive order N.
///
/// Binary operations require both operands to share N; a mismatch is a caller
/// error and throws rather than silently truncating.
class XSeries {
public:
    /// The zero series of order N.
    explicit XSeries(int order);
    explicit XSeries(std::vector<RationalFunction> coeffs);

    static XSeries one(int order);
    /// 1 + c X (truncated).
    static XSeries binomial(int order, const RationalFunction& c);

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const RationalFunction& operator[](int n) const { return coeffs_.at(static_cast<std::size_t>(n)); }
    RationalFunction& operator[](int n) { return coeffs_.at(static_cast<std::size_t>(n)); }
    const std::vector<RationalFunction>& coeffs() const { return coeffs_; }

    XSeries& operator+=(const XSeries& rhs);
    XSeries& operator-=(const XSeries& rhs);
    friend XSeries operator+(XSeries a, const XSeries& b) { return a += b; }
    friend XSeries operator-(XSeries a, const XSeries& b) { return a -= b; }
    friend XSeries operator*(const XSeries& a, const XSeries& b);
    friend bool operator==(const XSeries& a, const XSeries& b) = default;

    XSeries scaled(const RationalFunction& c) const;

private:
    std::vector<RationalFunction> coeffs_;
};

XSeries xs_mul(const XSeries& a, const XSeries& b);
/// Multiplicative inverse; requires a nonzero constant term.
XSeries xs_inv(const XSeries& a);
/// Formal logarithm of a series with constant term 1.
XSeries xs_log(const XSeries& a);
/// Formal exponential of a series with constant term 0.
XSeries xs_exp(const XSeries& a);
/// a^e = exp(e log a) for a with constant term 1 and e in Q(q).
XSeries xs_pow(const XSeries& a, const RationalFunction& e);
/// Joint substitution X -> X^d, q -> q^d, keeping the order of a.
XSeries xs_adams(const XSeries& a, int d);

/// Logarithm by composing the alternating series sum (-1)^{i-1} u^i / i with
/// u = a - 1. Cubic in N; kept as a cross-check for xs_log.
XSeries xs_log_alternating(const XSeries& a);

} // namespace nilorb
