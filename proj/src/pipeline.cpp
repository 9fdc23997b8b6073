#include "nilorb/pipeline.hpp"

#include "nilorb/errors.hpp"
#include "nilorb/format.hpp"
#include "nilorb/partitions.hpp"
#include "nilorb/qseries.hpp"

#include <algorithm>

namespace nilorb {

namespace {

std::string location(Kind kind, int g, int n)
{
    return std::string(1, kind_letter(kind)) + "_" + std::to_string(g) + "(" + std::to_string(n) + ",q)";
}

void require_positive(int value, const char* name)
{
    if (value < 1) throw UsageError(std::string(name) + " must be a positive integer");
}

// Dense table t[x][k] of integers: coefficient of X^x q^k.
using Grid = std::vector<std::vector<BigInt>>;

Grid unit_grid(int x_order, int q_order)
{
    Grid t(static_cast<std::size_t>(x_order) + 1, std::vector<BigInt>(static_cast<std::size_t>(q_order) + 1, 0));
    t[0][0] = 1;
    return t;
}

// t *= (1 - q^m X^n), in place.
void multiply_binomial(Grid& t, int n, int m)
{
    const int xo = static_cast<int>(t.size()) - 1;
    const int qo = static_cast<int>(t[0].size()) - 1;
    for (int x = xo; x >= n; --x)
        for (int k = qo; k >= m; --k) t[x][k] -= t[x - n][k - m];
}

// t *= 1 / (1 - q^m X^n), in place.
void divide_binomial(Grid& t, int n, int m)
{
    const int xo = static_cast<int>(t.size()) - 1;
    const int qo = static_cast<int>(t[0].size()) - 1;
    for (int x = n; x <= xo; ++x)
        for (int k = m; k <= qo; ++k) t[x][k] += t[x - n][k - m];
}

// Expands the X-coefficients of P in Z[[q]] and compares them with `rhs`.
VerificationReport compare_with_p(const XSeries& p, const Grid& rhs, VerificationReport report)
{
    report.passed = true;
    for (int x = 0; x <= report.x_order && report.passed; ++x) {
        const TruncatedQSeries lhs = rf_expand(p[x], report.q_order);
        NILORB_ASSERT(lhs.is_clean(), "P coefficient has a pole at q = 0");
        for (int k = 0; k <= report.q_order; ++k) {
            const BigRat l = lhs.at(k);
            if (l != BigRat(rhs[x][k])) {
                report.passed = false;
                report.mismatch = Mismatch{x, k, l.get_str(), rhs[x][k].get_str()};
                break;
            }
        }
    }
    return report;
}

} // namespace

char kind_letter(Kind k)
{
    switch (k) {
    case Kind::A: return 'A';
    case Kind::I: return 'I';
    case Kind::M: return 'M';
    case Kind::H: return 'H';
    }
    return '?';
}

Kind parse_kind(const std::string& s)
{
    if (s == "A") return Kind::A;
    if (s == "I") return Kind::I;
    if (s == "M") return Kind::M;
    if (s == "H") return Kind::H;
    throw UsageError("unknown kind '" + s + "' (expected A, I, M or H)");
}

std::vector<BigInt> CountingPolynomial::integer_coefficients() const
{
    std::vector<BigInt> out;
    for (const auto& c : poly().coeffs()) {
        NILORB_ASSERT(is_integer(c), "non-integral coefficients in " + location(kind, g, n));
        out.push_back(c.get_num());
    }
    return out;
}

XSeries build_P(int g, int order)
{
    require_positive(g, "g");
    if (order < 0) throw UsageError("truncation order must be nonnegative");
    XSeries p = XSeries::one(order);
    for (int n = 1; n <= order; ++n) {
        RationalFunction c;
        for (const auto& lambda : enumerate_partitions(n)) c += p_coefficient(lambda, g);
        p[n] = std::move(c);
    }
    return p;
}

Pipeline::Pipeline(int g) : g_(g)
{
    require_positive(g, "g");
}

void Pipeline::ensure_order(int order)
{
    if (order <= order_) return;
    // log P up to X^n depends only on P up to X^n, so cached H values stay valid.
    p_ = build_P(g_, order);
    log_p_ = xs_log(*p_);
    order_ = order;
}

XSeries Pipeline::P(int order)
{
    ensure_order(order);
    if (order == order_) return *p_;
    return XSeries(std::vector<RationalFunction>(p_->coeffs().begin(), p_->coeffs().begin() + order + 1));
}

void Pipeline::reserve(int order)
{
    ensure_order(order);
}

const RationalFunction& Pipeline::H(int n)
{
    return H_adams(n, 1);
}

const RationalFunction& Pipeline::H_adams(int n, int d)
{
    require_positive(n, "n");
    require_positive(d, "d");
    auto key = std::make_pair(n, d);
    if (auto it = h_adams_.find(key); it != h_adams_.end()) return it->second;
    ensure_order(n);
    RationalFunction value = (d == 1) ? (*log_p_)[n] : H_adams(n, 1).adams(d);
    return h_adams_.emplace(key, std::move(value)).first->second;
}

const CountingPolynomial& Pipeline::A(int n)
{
    require_positive(n, "n");
    if (auto it = a_.find(n); it != a_.end()) return it->second;
    RationalFunction sum;
    for (int d : divisors(n)) {
        const int mu = mobius(d);
        if (mu) sum += H_adams(n / d, d).scaled(BigRat(mu, d));
    }
    sum *= RationalFunction(PolyQ{-1, 1});
    const std::string where = location(Kind::A, g_, n);
    NILORB_ASSERT(sum.is_polynomial(), "non-polynomial result for " + where);
    NILORB_ASSERT(sum.num().is_integral(), "non-integral coefficients in " + where);
    const long bound = static_cast<long>(g_ - 1) * n * n;
    NILORB_ASSERT(sum.num().degree() <= bound, "degree bound violated by " + where);
    return a_.emplace(n, CountingPolynomial{Kind::A, g_, n, std::move(sum)}).first->second;
}

const CountingPolynomial& Pipeline::I(int n)
{
    require_positive(n, "n");
    if (auto it = i_.find(n); it != i_.end()) return it->second;
    RationalFunction sum;
    for (int d : divisors(n)) {
        RationalFunction inner;
        for (int r : divisors(d)) {
            const int mu = mobius(d / r);
            if (mu) inner += A(n / d).value.adams(r).scaled(mu);
        }
        sum += inner.scaled(BigRat(1, d));
    }
    NILORB_ASSERT(sum.is_polynomial(), "non-polynomial result for " + location(Kind::I, g_, n));
    return i_.emplace(n, CountingPolynomial{Kind::I, g_, n, std::move(sum)}).first->second;
}

XSeries Pipeline::m_series_via_product(int order)
{
    if (order < 0) throw UsageError("truncation order must be nonnegative");
    const XSeries base = P(order);
    // Factors with d > order are 1 + O(X^{d}) and cannot reach X^order.
    XSeries m = XSeries::one(order);
    for (int d = 1; d <= order; ++d) m = m * xs_pow(xs_adams(base, d), RationalFunction(irr_count(d)));
    return m;
}

XSeries Pipeline::m_series_via_indecomposables(int order)
{
    if (order < 0) throw UsageError("truncation order must be nonnegative");
    // log prod (1 - X^n)^{-I_n} = sum_n I_n sum_k X^{nk} / k.
    XSeries log_m(order);
    for (int n = 1; n <= order; ++n) {
        const RationalFunction& in = I(n).value;
        for (int k = 1; n * k <= order; ++k) log_m[n * k] += in.scaled(BigRat(1, k));
    }
    return xs_exp(log_m);
}

std::vector<CountingPolynomial> Pipeline::M(int order)
{
    require_positive(order, "N");
    reserve(order);
    const VerificationReport report = verify_m_routes(*this, order);
    if (!report.passed) {
        const auto& mm = *report.mismatch;
        throw InternalAssertion("M routes disagree at X^" + std::to_string(mm.x_degree) + ": " + mm.lhs + " vs " +
                                mm.rhs);
    }
    const XSeries m = m_series_via_indecomposables(order);
    std::vector<CountingPolynomial> out;
    for (int n = 0; n <= order; ++n) {
        NILORB_ASSERT(m[n].is_polynomial(), "non-polynomial result for " + location(Kind::M, g_, n));
        out.push_back(CountingPolynomial{Kind::M, g_, n, m[n]});
    }
    return out;
}

RationalFunction Pipeline::H_from_A(int n)
{
    require_positive(n, "n");
    RationalFunction sum;
    for (int d : divisors(n)) {
        RationalFunction term = A(n / d).value.adams(d) / RationalFunction(PolyQ::q_power_minus_one(d));
        sum += term.scaled(BigRat(1, d));
    }
    return sum;
}

VerificationReport verify_m_routes(Pipeline& pipeline, int order)
{
    VerificationReport report{"thm5-routes", pipeline.g(), order, 0, true, std::nullopt};
    const XSeries route1 = pipeline.m_series_via_product(order);
    const XSeries route2 = pipeline.m_series_via_indecomposables(order);
    for (int n = 0; n <= order; ++n) {
        if (!(route1[n] == route2[n])) {
            report.passed = false;
            report.mismatch = Mismatch{n, -1, to_pretty(route1[n]), to_pretty(route2[n])};
            break;
        }
    }
    return report;
}

VerificationReport verify_kwi(Pipeline& pipeline, int x_order, int q_order, std::optional<KwiPerturbation> perturbation)
{
    require_positive(x_order, "N");
    require_positive(q_order, "Q");
    pipeline.reserve(x_order);
    Grid rhs = unit_grid(x_order, q_order);
    for (int n = 1; n <= x_order; ++n) {
        std::vector<BigInt> a = pipeline.A(n).integer_coefficients();
        if (perturbation && perturbation->n == n) {
            const auto s = static_cast<std::size_t>(perturbation->s);
            if (a.size() <= s) a.resize(s + 1, 0);
            a[s] += perturbation->delta;
        }
        for (int s = 0; s < static_cast<int>(a.size()); ++s) {
            const BigInt& exponent = a[static_cast<std::size_t>(s)];
            NILORB_ASSERT(exponent.fits_slong_p(), "exponent a_{n,s} too large for repeated multiplication");
            const long e = exponent.get_si();
            // Factors with s + i > Q are 1 + O(q^{Q+1}).
            for (int i = 0; s + i <= q_order; ++i) {
                for (long rep = 0; rep < e; ++rep) multiply_binomial(rhs, n, s + i);
                for (long rep = 0; rep < -e; ++rep) divide_binomial(rhs, n, s + i);
            }
        }
    }
    VerificationReport report{"kwi", pipeline.g(), x_order, q_order, false, std::nullopt};
    return compare_with_p(pipeline.P(x_order), rhs, report);
}

VerificationReport verify_g1_product(int x_order, int q_order)
{
    require_positive(x_order, "N");
    require_positive(q_order, "Q");
    Grid rhs = unit_grid(x_order, q_order);
    for (int n = 1; n <= x_order; ++n)
        for (int i = 0; i <= q_order; ++i) multiply_binomial(rhs, n, i);
    VerificationReport report{"g1-product", 1, x_order, q_order, false, std::nullopt};
    return compare_with_p(build_P(1, x_order), rhs, report);
}

ConjectureReport conjecture_scan(Pipeline& pipeline, int n_max)
{
    if (pipeline.g() < 2) throw UsageError("conjecture scan needs g >= 2");
    require_positive(n_max, "Nmax");
    ConjectureReport report{pipeline.g(), n_max, {}, {}};
    pipeline.reserve(n_max);
    for (int n = 1; n <= n_max; ++n) {
        const CountingPolynomial& a = pipeline.A(n);
        report.polynomials.push_back(a);
        const auto coeffs = a.integer_coefficients();
        for (std::size_t s = 0; s < coeffs.size(); ++s)
            if (coeffs[s] < 0) report.negatives.push_back({n, static_cast<int>(s), coeffs[s]});
    }
    return report;
}

} // namespace nilorb
