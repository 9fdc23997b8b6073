#pragma once

#include "nilorb/series.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace nilorb {

enum class Kind { A, I, M, H };

char kind_letter(Kind k);
Kind parse_kind(const std::string& s);

/// A counting function for fixed (kind, g, n). For A, I and M the value is a
/// polynomial in q; for H it is a general element of Q(q).
struct CountingPolynomial {
    Kind kind = Kind::A;
    int g = 0;
    int n = 0;
    RationalFunction value;

    const PolyQ& poly() const { return value.as_polynomial(); }
    /// Integer coefficients a_{n,s}, s = 0..deg; only meaningful for kind A.
    std::vector<BigInt> integer_coefficients() const;
};

struct Mismatch {
    int x_degree = 0;
    int q_degree = -1; // -1 when the comparison is of whole q-coefficients
    std::string lhs;
    std::string rhs;
};

struct VerificationReport {
    std::string identity;
    int g = 0;
    int x_order = 0;
    int q_order = 0; // 0 when the identity is compared in Q(q)
    bool passed = false;
    std::optional<Mismatch> mismatch;
};

/// Deliberate change to one a_{n,s} exponent, used as a negative control.
struct KwiPerturbation {
    int n = 0;
    int s = 0;
    long delta = 0;
};

struct NegativeCoefficient {
    int n = 0;
    int s = 0;
    BigInt value;
};

struct ConjectureReport {
    int g = 0;
    int n_max = 0;
    std::vector<CountingPolynomial> polynomials;
    std::vector<NegativeCoefficient> negatives;
};

/// 1 + sum over nonempty partitions of p_coefficient(lambda, g) X^{|lambda|}.
XSeries build_P(int g, int order);

/// Derives the counting functions for a fixed tuple length g, caching the
/// series P, its logarithm, and the q -> q^d transports the Moebius sums ask
/// for. Not thread-safe; finished values may be shared freely.
class Pipeline {
public:
    explicit Pipeline(int g);

    int g() const { return g_; }

    /// P truncated at `order`.
    XSeries P(int order);
    /// Precompute P and log P up to X^order so later requests do not rebuild.
    void reserve(int order);
    /// H_g(n, q): coefficient of X^n in log P.
    const RationalFunction& H(int n);
    /// H_g(n, q^d).
    const RationalFunction& H_adams(int n, int d);

    const CountingPolynomial& A(int n);
    const CountingPolynomial& I(int n);
    /// M_g(0..order, q), the constant term included; both routes must agree.
    std::vector<CountingPolynomial> M(int order);

    /// Route 1: prod_{d <= N} P(X^d, q^d)^{phi_d(q)}.
    XSeries m_series_via_product(int order);
    /// Route 2: prod_n (1 - X^n)^{-I_g(n, q)}.
    XSeries m_series_via_indecomposables(int order);

    /// H rebuilt from A by inverting the Moebius sum:
    /// H(n, q) = sum_{d|n} (1/d) A(n/d, q^d) / (q^d - 1).
    RationalFunction H_from_A(int n);

private:
    void ensure_order(int order);

    int g_;
    int order_ = -1;
    std::optional<XSeries> p_;
    std::optional<XSeries> log_p_;
    std::map<std::pair<int, int>, RationalFunction> h_adams_;
    std::map<int, CountingPolynomial> a_;
    std::map<int, CountingPolynomial> i_;
};

/// Both routes to the M series compared coefficientwise in Q(q).
VerificationReport verify_m_routes(Pipeline& pipeline, int order);

/// P(X, q) = prod_n prod_s prod_i (1 - q^{s+i} X^n)^{a_{n,s}} compared in
/// Z[[X, q]] modulo X^{x_order + 1} and q^{q_order + 1}.
VerificationReport verify_kwi(Pipeline& pipeline, int x_order, int q_order,
                              std::optional<KwiPerturbation> perturbation = std::nullopt);

/// The g = 1 product formula P = prod_n prod_i (1 - q^i X^n), independent of A.
VerificationReport verify_g1_product(int x_order, int q_order);

ConjectureReport conjecture_scan(Pipeline& pipeline, int n_max);

} // namespace nilorb
