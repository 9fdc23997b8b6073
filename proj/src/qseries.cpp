#include "nilorb/qseries.hpp"

#include "nilorb/errors.hpp"

#include <algorithm>

namespace nilorb {

TruncatedQSeries::TruncatedQSeries(std::vector<BigRat> coeffs, int offset)
    : coeffs_(std::move(coeffs)), offset_(offset)
{
    if (coeffs_.empty()) throw ArithmeticError("truncated series needs at least one coefficient");
    if (offset_ > 0) {
        coeffs_.insert(coeffs_.begin(), static_cast<std::size_t>(offset_), BigRat(0));
        offset_ = 0;
    }
    normalize();
}

void TruncatedQSeries::normalize()
{
    // Absorb leading zeros into the offset while it is negative.
    std::size_t drop = 0;
    while (offset_ + static_cast<int>(drop) < 0 && drop + 1 < coeffs_.size() && coeffs_[drop] == 0) ++drop;
    if (drop) {
        coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(drop));
        offset_ += static_cast<int>(drop);
    }
}

BigRat TruncatedQSeries::at(int k) const
{
    const int i = k - offset_;
    if (i < 0) return 0;
    if (i > order()) throw ArithmeticError("coefficient beyond truncation order");
    return coeffs_[static_cast<std::size_t>(i)];
}

TruncatedQSeries operator+(const TruncatedQSeries& a, const TruncatedQSeries& b)
{
    const int lo = std::min(a.offset_, b.offset_);
    const int hi = std::min(a.offset_ + a.order(), b.offset_ + b.order());
    std::vector<BigRat> c(static_cast<std::size_t>(hi - lo + 1));
    for (int k = lo; k <= hi; ++k) c[static_cast<std::size_t>(k - lo)] = a.at(k) + b.at(k);
    return TruncatedQSeries(std::move(c), lo);
}

TruncatedQSeries operator*(const TruncatedQSeries& a, const TruncatedQSeries& b)
{
    const int order = std::min(a.order(), b.order());
    std::vector<BigRat> c(static_cast<std::size_t>(order) + 1);
    for (int i = 0; i <= order; ++i) {
        if (a.coeffs_[static_cast<std::size_t>(i)] == 0) continue;
        for (int j = 0; i + j <= order; ++j)
            c[static_cast<std::size_t>(i + j)] += a.coeffs_[static_cast<std::size_t>(i)] * b.coeffs_[static_cast<std::size_t>(j)];
    }
    return TruncatedQSeries(std::move(c), a.offset_ + b.offset_);
}

TruncatedQSeries rf_expand(const RationalFunction& f, int order)
{
    if (order < 0) throw ArithmeticError("negative truncation order");
    const int shift = f.den().valuation();
    const PolyQ den = f.den().unshifted(shift);
    const auto dc = den.coeffs();
    const BigRat inv0 = 1 / dc[0];
    const auto n = static_cast<std::size_t>(order) + 1;

    // 1 / den by the recurrence den * inv = 1.
    std::vector<BigRat> inv(n);
    for (std::size_t k = 0; k < n; ++k) {
        BigRat acc = (k == 0) ? BigRat(1) : BigRat(0);
        for (std::size_t j = 1; j <= k && j < dc.size(); ++j) acc -= dc[j] * inv[k - j];
        inv[k] = acc * inv0;
    }
    std::vector<BigRat> out(n);
    const auto nc = f.num().coeffs();
    for (std::size_t i = 0; i < nc.size() && i < n; ++i) {
        if (nc[i] == 0) continue;
        for (std::size_t j = 0; i + j < n; ++j) out[i + j] += nc[i] * inv[j];
    }
    return TruncatedQSeries(std::move(out), -shift);
}

} // namespace nilorb
