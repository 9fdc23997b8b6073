#pragma once

#include "nilorb/bigint.hpp"

#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace nilorb {

/// Dense univariate polynomial in q with exact rational coefficients.
///
/// Coefficients are stored in ascending degree and the representation never
/// carries trailing zeros, so structural equality is polynomial equality.
/// The zero polynomial is the empty sequence and reports degree -1.
class PolyQ {
public:
    PolyQ() = default;
    explicit PolyQ(std::vector<BigRat> coeffs);
    PolyQ(std::initializer_list<long> coeffs);

    static PolyQ constant(const BigRat& c);
    static PolyQ monomial(const BigRat& c, int degree);
    /// q^k - 1, the building block of every denominator in the pipeline.
    static PolyQ q_power_minus_one(int k);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const;
    bool is_constant() const { return coeffs_.size() <= 1; }
    /// Coefficient of q^i; zero outside the stored range.
    BigRat coeff(int i) const;
    const BigRat& leading() const { return coeffs_.back(); }
    std::span<const BigRat> coeffs() const { return coeffs_; }
    /// Largest k with q^k dividing this polynomial (0 for the zero polynomial).
    int valuation() const;
    bool is_integral() const;

    PolyQ operator-() const;
    PolyQ& operator+=(const PolyQ& rhs);
    PolyQ& operator-=(const PolyQ& rhs);
    PolyQ& operator*=(const PolyQ& rhs);
    PolyQ& operator*=(const BigRat& c);

    friend PolyQ operator+(PolyQ a, const PolyQ& b) { return a += b; }
    friend PolyQ operator-(PolyQ a, const PolyQ& b) { return a -= b; }
    friend PolyQ operator*(const PolyQ& a, const PolyQ& b);
    friend PolyQ operator*(PolyQ a, const BigRat& c) { return a *= c; }
    friend PolyQ operator*(const BigRat& c, PolyQ a) { return a *= c; }
    friend bool operator==(const PolyQ& a, const PolyQ& b) = default;

    /// Multiply by q^k (k >= 0).
    PolyQ shifted(int k) const;
    /// Divide by q^k; requires k <= valuation().
    PolyQ unshifted(int k) const;
    /// Substitution q -> q^d.
    PolyQ adams(int d) const;
    BigRat evaluate(const BigRat& q0) const;
    /// Scale so the leading coefficient is 1 (zero stays zero).
    PolyQ monic() const;

private:
    void trim();

    std::vector<BigRat> coeffs_;
};

/// Quotient and remainder of Euclidean division; throws on b == 0.
std::pair<PolyQ, PolyQ> divmod(const PolyQ& a, const PolyQ& b);
/// a / b, throwing ArithmeticError("inexact division") unless b divides a.
PolyQ exact_divide(const PolyQ& a, const PolyQ& b);
/// Monic greatest common divisor; gcd(0, 0) = 0.
PolyQ gcd(const PolyQ& a, const PolyQ& b);
/// Rational c carrying the sign of the leading coefficient such that a / c
/// has coprime integer coefficients and a positive leading coefficient.
/// content(0) = 0.
BigRat content(const PolyQ& a);
PolyQ pow(const PolyQ& a, unsigned e);

} // namespace nilorb
