#pragma once

#include "nilorb/ratfunc.hpp"

#include <vector>

namespace nilorb {

/// Truncated power series in q with an optional Laurent shift:
///   q^offset * (c_0 + c_1 q + ... + c_order q^order) + O(q^(offset + order + 1)).
/// The offset is never positive; a series with offset 0 is "polynomial-clean".
class TruncatedQSeries {
public:
    TruncatedQSeries(std::vector<BigRat> coeffs, int offset = 0);

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    int offset() const { return offset_; }
    bool is_clean() const { return offset_ == 0; }
    const std::vector<BigRat>& coeffs() const { return coeffs_; }
    /// Coefficient of q^k in absolute exponent terms (k may be negative).
    BigRat at(int k) const;

    friend TruncatedQSeries operator+(const TruncatedQSeries& a, const TruncatedQSeries& b);
    friend TruncatedQSeries operator*(const TruncatedQSeries& a, const TruncatedQSeries& b);
    friend bool operator==(const TruncatedQSeries& a, const TruncatedQSeries& b) = default;

private:
    void normalize();

    std::vector<BigRat> coeffs_;
    int offset_ = 0;
};

/// Expansion of f around q = 0 to `order` terms beyond its lowest exponent.
/// Powers of q dividing the denominator become a negative offset.
TruncatedQSeries rf_expand(const RationalFunction& f, int order);

} // namespace nilorb
