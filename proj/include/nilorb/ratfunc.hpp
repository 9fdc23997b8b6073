#pragma once

#include "nilorb/poly.hpp"

namespace nilorb {

/// Element of Q(q) held in canonical form: numerator and denominator are
/// coprime and the denominator is monic. Two values are equal iff their
/// canonical forms match componentwise.
class RationalFunction {
public:
    RationalFunction() : den_{1} {}
    RationalFunction(PolyQ num); // NOLINT(google-explicit-constructor)
    RationalFunction(PolyQ num, PolyQ den);
    RationalFunction(long c) : RationalFunction(PolyQ::constant(c)) {} // NOLINT

    const PolyQ& num() const { return num_; }
    const PolyQ& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_one(); }
    /// The numerator, provided the denominator is 1.
    const PolyQ& as_polynomial() const;

    RationalFunction operator-() const;
    RationalFunction& operator+=(const RationalFunction& rhs);
    RationalFunction& operator-=(const RationalFunction& rhs);
    RationalFunction& operator*=(const RationalFunction& rhs);
    RationalFunction& operator/=(const RationalFunction& rhs);

    friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
    friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
    friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
    friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
    friend bool operator==(const RationalFunction& a, const RationalFunction& b) = default;

    RationalFunction inverse() const;
    RationalFunction scaled(const BigRat& c) const;
    /// Substitution q -> q^d applied to numerator and denominator.
    RationalFunction adams(int d) const;
    /// Exact value at q0; throws ArithmeticError("pole") if the denominator vanishes.
    BigRat evaluate(const BigRat& q0) const;

private:
    struct Canonical {};
    RationalFunction(PolyQ num, PolyQ den, Canonical) : num_(std::move(num)), den_(std::move(den)) {}
    void normalize_unit();

    PolyQ num_;
    PolyQ den_;
};

} // namespace nilorb
