#include "nilorb/series.hpp"

#include "nilorb/errors.hpp"

namespace nilorb {

namespace {

void require_same_order(const XSeries& a, const XSeries& b)
{
    if (a.order() != b.order()) throw ArithmeticError("X-series truncation orders differ");
}

void require_unit_constant(const XSeries& a, const char* op)
{
    if (!(a[0] == RationalFunction(1))) throw ArithmeticError(std::string(op) + " needs constant term 1");
}

} // namespace

XSeries::XSeries(int order)
{
    if (order < 0) throw ArithmeticError("negative truncation order");
    coeffs_.resize(static_cast<std::size_t>(order) + 1);
}

XSeries::XSeries(std::vector<RationalFunction> coeffs) : coeffs_(std::move(coeffs))
{
    if (coeffs_.empty()) throw ArithmeticError("X-series needs at least one coefficient");
}

XSeries XSeries::one(int order)
{
    XSeries s(order);
    s.coeffs_[0] = RationalFunction(1);
    return s;
}

XSeries XSeries::binomial(int order, const RationalFunction& c)
{
    XSeries s = one(order);
    if (order >= 1) s.coeffs_[1] = c;
    return s;
}

XSeries& XSeries::operator+=(const XSeries& rhs)
{
    require_same_order(*this, rhs);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    return *this;
}

XSeries& XSeries::operator-=(const XSeries& rhs)
{
    require_same_order(*this, rhs);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    return *this;
}

XSeries operator*(const XSeries& a, const XSeries& b)
{
    require_same_order(a, b);
    const int n = a.order();
    XSeries out(n);
    for (int i = 0; i <= n; ++i) {
        if (a[i].is_zero()) continue;
        for (int j = 0; i + j <= n; ++j) {
            if (b[j].is_zero()) continue;
            out[i + j] += a[i] * b[j];
        }
    }
    return out;
}

XSeries XSeries::scaled(const RationalFunction& c) const
{
    XSeries out(order());
    for (int i = 0; i <= order(); ++i) out[i] = (*this)[i] * c;
    return out;
}

XSeries xs_mul(const XSeries& a, const XSeries& b)
{
    return a * b;
}

XSeries xs_inv(const XSeries& a)
{
    if (a[0].is_zero()) throw ArithmeticError("inverse of a series with zero constant term");
    const int n = a.order();
    const RationalFunction inv0 = a[0].inverse();
    XSeries out(n);
    out[0] = inv0;
    for (int k = 1; k <= n; ++k) {
        RationalFunction acc;
        for (int j = 1; j <= k; ++j)
            if (!a[j].is_zero()) acc += a[j] * out[k - j];
        out[k] = -(acc * inv0);
    }
    return out;
}

XSeries xs_log(const XSeries& a)
{
    require_unit_constant(a, "log");
    // From a * h' = a': n h_n = n a_n - sum_{k=1}^{n-1} k h_k a_{n-k}.
    const int n = a.order();
    XSeries h(n);
    for (int m = 1; m <= n; ++m) {
        RationalFunction acc = a[m].scaled(m);
        for (int k = 1; k < m; ++k)
            if (!h[k].is_zero() && !a[m - k].is_zero()) acc -= (h[k] * a[m - k]).scaled(k);
        h[m] = acc.scaled(BigRat(1, m));
    }
    return h;
}

XSeries xs_exp(const XSeries& a)
{
    if (!a[0].is_zero()) throw ArithmeticError("exp needs constant term 0");
    // From b' = a' b: n b_n = sum_{k=1}^{n} k a_k b_{n-k}.
    const int n = a.order();
    XSeries b = XSeries::one(n);
    for (int m = 1; m <= n; ++m) {
        RationalFunction acc;
        for (int k = 1; k <= m; ++k)
            if (!a[k].is_zero() && !b[m - k].is_zero()) acc += (a[k] * b[m - k]).scaled(k);
        b[m] = acc.scaled(BigRat(1, m));
    }
    return b;
}

XSeries xs_pow(const XSeries& a, const RationalFunction& e)
{
    require_unit_constant(a, "pow");
    if (e.is_zero()) return XSeries::one(a.order());
    return xs_exp(xs_log(a).scaled(e));
}

XSeries xs_adams(const XSeries& a, int d)
{
    if (d < 1) throw ArithmeticError("adams degree must be positive");
    const int n = a.order();
    XSeries out(n);
    for (int k = 0; k * d <= n; ++k) out[k * d] = a[k].adams(d);
    return out;
}

XSeries xs_log_alternating(const XSeries& a)
{
    require_unit_constant(a, "log");
    const int n = a.order();
    XSeries u = a;
    u[0] = RationalFunction();
    XSeries power = u;
    XSeries out(n);
    for (int i = 1; i <= n; ++i) {
        const BigRat w(i % 2 ? 1 : -1, i);
        for (int k = 0; k <= n; ++k) out[k] += power[k].scaled(w);
        power = power * u;
    }
    return out;
}

} // namespace nilorb
