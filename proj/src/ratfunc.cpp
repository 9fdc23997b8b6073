#include "nilorb/ratfunc.hpp"

#include "nilorb/errors.hpp"

namespace nilorb {

RationalFunction::RationalFunction(PolyQ num) : num_(std::move(num)), den_{1} {}

RationalFunction::RationalFunction(PolyQ num, PolyQ den)
{
    if (den.is_zero()) throw ArithmeticError("zero denominator");
    if (num.is_zero()) {
        den_ = PolyQ{1};
        return;
    }
    const PolyQ g = gcd(num, den);
    if (g.is_one()) {
        num_ = std::move(num);
        den_ = std::move(den);
    } else {
        num_ = exact_divide(num, g);
        den_ = exact_divide(den, g);
    }
    normalize_unit();
}

void RationalFunction::normalize_unit()
{
    if (den_.leading() == 1) return;
    const BigRat inv = 1 / den_.leading();
    num_ *= inv;
    den_ *= inv;
}

const PolyQ& RationalFunction::as_polynomial() const
{
    NILORB_ASSERT(is_polynomial(), "non-polynomial result");
    return num_;
}

RationalFunction RationalFunction::operator-() const
{
    return RationalFunction(-num_, den_, Canonical{});
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& rhs)
{
    if (rhs.is_zero()) return *this;
    if (is_zero()) return *this = rhs;
    if (den_ == rhs.den_) {
        return *this = RationalFunction(num_ + rhs.num_, den_);
    }
    // With both operands reduced, any common factor of the new numerator and
    // denominator already divides g = gcd(b, d).
    const PolyQ g = gcd(den_, rhs.den_);
    if (g.is_one()) {
        PolyQ n = num_ * rhs.den_ + rhs.num_ * den_;
        PolyQ d = den_ * rhs.den_;
        if (n.is_zero()) return *this = RationalFunction();
        *this = RationalFunction(std::move(n), std::move(d), Canonical{});
        normalize_unit();
        return *this;
    }
    const PolyQ b1 = exact_divide(den_, g);
    const PolyQ d1 = exact_divide(rhs.den_, g);
    PolyQ n = num_ * d1 + rhs.num_ * b1;
    if (n.is_zero()) return *this = RationalFunction();
    const PolyQ h = gcd(n, g);
    PolyQ d = b1 * rhs.den_;
    if (!h.is_one()) {
        n = exact_divide(n, h);
        d = exact_divide(d, h);
    }
    *this = RationalFunction(std::move(n), std::move(d), Canonical{});
    normalize_unit();
    return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& rhs)
{
    return *this += -rhs;
}

RationalFunction& RationalFunction::operator*=(const RationalFunction& rhs)
{
    if (is_zero() || rhs.is_zero()) return *this = RationalFunction();
    // Cross-cancel: gcd(a, d) and gcd(c, b) are the only possible common factors.
    PolyQ a = num_, b = den_, c = rhs.num_, d = rhs.den_;
    const PolyQ g1 = d.is_one() ? PolyQ{1} : gcd(a, d);
    const PolyQ g2 = b.is_one() ? PolyQ{1} : gcd(c, b);
    if (!g1.is_one()) {
        a = exact_divide(a, g1);
        d = exact_divide(d, g1);
    }
    if (!g2.is_one()) {
        c = exact_divide(c, g2);
        b = exact_divide(b, g2);
    }
    *this = RationalFunction(a * c, b * d, Canonical{});
    normalize_unit();
    return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& rhs)
{
    return *this *= rhs.inverse();
}

RationalFunction RationalFunction::inverse() const
{
    if (is_zero()) throw ArithmeticError("inverse of zero");
    RationalFunction r(den_, num_, Canonical{});
    r.normalize_unit();
    return r;
}

RationalFunction RationalFunction::scaled(const BigRat& c) const
{
    if (c == 0) return RationalFunction();
    return RationalFunction(num_ * c, den_, Canonical{});
}

RationalFunction RationalFunction::adams(int d) const
{
    // q -> q^d is an injective ring map on Q[q], so coprimality is preserved.
    return RationalFunction(num_.adams(d), den_.adams(d), Canonical{});
}

BigRat RationalFunction::evaluate(const BigRat& q0) const
{
    const BigRat d = den_.evaluate(q0);
    if (d == 0) throw ArithmeticError("pole");
    return num_.evaluate(q0) / d;
}

} // namespace nilorb
