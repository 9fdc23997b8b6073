#include "nilorb/errors.hpp"
#include "nilorb/format.hpp"
#include "nilorb/partitions.hpp"
#include "nilorb/pipeline.hpp"
#include "nilorb/qseries.hpp"
#include "reference.hpp"

#include <doctest.h>

using namespace nilorb;

namespace {

const RationalFunction kOneOverQMinus1(PolyQ{1}, PolyQ{-1, 1});

// The six A_2 polynomials as printed, ascending coefficients.
const std::vector<std::vector<long>> kA2 = {
    {1},
    {0, 2},
    {0, 2, 3, 0, 1},
    {0, 2, 4, 7, 2, 4, 1, 1, 0, 1},
    {0, 2, 7, 14, 16, 13, 13, 8, 7, 4, 4, 2, 2, 1, 1, 0, 1},
    {0, 2, 8, 25, 40, 52, 48, 53, 40, 39, 29, 28, 17, 19, 11, 10, 7, 7, 3, 4, 2, 2, 1, 1, 0, 1},
};

PolyQ poly(const std::vector<long>& c)
{
    std::vector<BigRat> r(c.begin(), c.end());
    return PolyQ(std::move(r));
}

} // namespace

TEST_SUITE("pipeline") {

TEST_CASE("build_P low coefficients")
{
    for (int g = 1; g <= 4; ++g) {
        const XSeries p = build_P(g, 3);
        CHECK(p[0] == RationalFunction(1));
        CHECK(p[1] == kOneOverQMinus1);
    }
    CHECK(build_P(2, 0) == XSeries::one(0));
    CHECK_THROWS_AS(build_P(0, 2), UsageError);
}

TEST_CASE("build_P at g = 1 matches the infinite product at X^2")
{
    // X^2 of prod_n prod_i (1 - q^i X^n): -1/(1-q) + q/((1-q)(1-q^2)), reduced by hand.
    const RationalFunction expected(PolyQ{-1, 1, 1}, PolyQ{-1, 1} * PolyQ{-1, 1} * PolyQ{1, 1});
    const XSeries p = build_P(1, 2);
    CHECK(p[2] == p_coefficient(Partition({2}), 1) + p_coefficient(Partition({1, 1}), 1));
    CHECK(p[2] == expected);
    // Product side in Z[[q]]: -1 per q^k from the n = 2 factors, plus one per
    // pair 0 <= i < j with i + j = k from the n = 1 factors.
    const int order = 8;
    std::vector<BigRat> lhs = rf_expand(p[2], order).coeffs();
    for (int k = 0; k <= order; ++k) {
        CHECK(lhs[static_cast<std::size_t>(k)] == BigRat(-1 + (k + 1) / 2));
    }
}

TEST_CASE("H values")
{
    for (int g = 1; g <= 3; ++g) {
        Pipeline pipeline(g);
        CHECK(pipeline.H(1) == kOneOverQMinus1);
    }
    Pipeline two(2);
    // Back-substituting A_2(2,q) = 2q through the Moebius formula.
    const RationalFunction h22 = RationalFunction(PolyQ{0, 2}) / RationalFunction(PolyQ{-1, 1}) +
                                 two.H(1).adams(2).scaled(BigRat(1, 2));
    CHECK(two.H(2) == h22);
    XSeries hs(5);
    for (int n = 1; n <= 5; ++n) hs[n] = two.H(n);
    CHECK(xs_exp(hs) == two.P(5));
}

TEST_CASE("A_2 reproduces the six printed polynomials")
{
    Pipeline pipeline(2);
    for (int n = 1; n <= 6; ++n) {
        CAPTURE(n);
        CHECK(pipeline.A(n).poly() == poly(kA2[static_cast<std::size_t>(n - 1)]));
    }
    CHECK(to_pretty(pipeline.A(4).value) == "q^9 + q^7 + q^6 + 4q^5 + 2q^4 + 7q^3 + 4q^2 + 2q");
}

TEST_CASE("A_1 is identically 1")
{
    Pipeline pipeline(1);
    for (int n = 1; n <= 10; ++n) CHECK(pipeline.A(n).poly() == PolyQ{1});
}

TEST_CASE("I examples")
{
    Pipeline pipeline(2);
    CHECK(pipeline.I(1).poly() == PolyQ{1});
    CHECK(pipeline.I(2).poly() == PolyQ{0, 2});
    CHECK(pipeline.I(3).poly() == PolyQ{0, 2, 3, 0, 1});
}

TEST_CASE("M examples")
{
    for (int g = 1; g <= 3; ++g) {
        Pipeline pipeline(g);
        CHECK(pipeline.M(1)[1].poly() == PolyQ{1});
    }
    Pipeline pipeline(2);
    const auto m = pipeline.M(3);
    CHECK(m[0].poly() == PolyQ{1});
    CHECK(m[2].poly() == PolyQ{1, 2});
    CHECK(m[3].poly() == PolyQ{1, 4, 3, 0, 1});
    CHECK(m[3].poly() == pipeline.I(3).poly() + PolyQ{1, 2});
}

TEST_CASE("M_1(n, q) is the constant p(n)")
{
    const auto p = reference::partition_numbers(8);
    Pipeline pipeline(1);
    const auto m = pipeline.M(8);
    for (int n = 1; n <= 8; ++n) CHECK(m[static_cast<std::size_t>(n)].poly() == PolyQ::constant(p[static_cast<std::size_t>(n)]));
}

TEST_CASE("both routes to M agree for g = 1, 2, 3 up to N = 6")
{
    for (int g = 1; g <= 3; ++g) {
        Pipeline pipeline(g);
        const auto report = verify_m_routes(pipeline, 6);
        CHECK(report.passed);
        CHECK_FALSE(report.mismatch.has_value());
    }
}

TEST_CASE("A is integral with degree at most (g-1)n^2")
{
    for (int g = 1; g <= 3; ++g) {
        Pipeline pipeline(g);
        for (int n = 1; n <= 6; ++n) {
            const auto& a = pipeline.A(n);
            CHECK(a.poly().is_integral());
            CHECK(a.poly().degree() <= (g - 1) * n * n);
        }
    }
}

TEST_CASE("Moebius round trip: H rebuilt from A")
{
    for (int g = 1; g <= 3; ++g) {
        Pipeline pipeline(g);
        for (int n = 1; n <= 6; ++n) CHECK(pipeline.H_from_A(n) == pipeline.H(n));
    }
}

TEST_CASE("positivity and nesting at prime powers")
{
    for (int g = 1; g <= 3; ++g) {
        Pipeline pipeline(g);
        const auto m = pipeline.M(4);
        for (int n = 1; n <= 4; ++n)
            for (int q : {2, 3, 4}) {
                const BigRat a = pipeline.A(n).value.evaluate(q);
                const BigRat i = pipeline.I(n).value.evaluate(q);
                const BigRat mm = m[static_cast<std::size_t>(n)].value.evaluate(q);
                CHECK(is_integer(a));
                CHECK(is_integer(i));
                CHECK(is_integer(mm));
                CHECK(a > 0);
                CHECK(a <= i);
                CHECK(i <= mm);
            }
    }
}

TEST_CASE("product identity with a_{n,s} exponents")
{
    Pipeline g1(1);
    CHECK(verify_kwi(g1, 4, 10).passed);
    Pipeline g2(2);
    CHECK(verify_kwi(g2, 3, 12).passed);
    CHECK(verify_kwi(g2, 4, 12).passed);
    Pipeline g3(3);
    CHECK(verify_kwi(g3, 3, 10).passed);
}

TEST_CASE("perturbed exponents fail with a located mismatch")
{
    Pipeline pipeline(2);
    const auto up = verify_kwi(pipeline, 3, 12, KwiPerturbation{2, 1, 1});
    CHECK_FALSE(up.passed);
    REQUIRE(up.mismatch.has_value());
    CHECK(up.mismatch->x_degree == 2);
    CHECK(up.mismatch->q_degree == 1);
    // A negative exponent exercises the geometric-series branch.
    const auto down = verify_kwi(pipeline, 3, 12, KwiPerturbation{3, 3, -1});
    CHECK_FALSE(down.passed);
    REQUIRE(down.mismatch.has_value());
    CHECK(down.mismatch->x_degree == 3);
    CHECK(down.mismatch->q_degree == 3);
}

TEST_CASE("g = 1 product formula")
{
    CHECK(verify_g1_product(6, 10).passed);
    CHECK(verify_g1_product(1, 1).passed);
}

TEST_CASE("conjecture scan")
{
    Pipeline two(2);
    const auto report = conjecture_scan(two, 6);
    CHECK(report.negatives.empty());
    CHECK(report.polynomials.size() == 6);
    Pipeline three(3);
    CHECK(conjecture_scan(three, 3).polynomials.size() == 3);
    Pipeline one(1);
    CHECK_THROWS_AS(conjecture_scan(one, 3), UsageError);
}

TEST_CASE("argument validation")
{
    CHECK_THROWS_AS(Pipeline(0), UsageError);
    Pipeline pipeline(2);
    CHECK_THROWS_AS(pipeline.A(0), UsageError);
    CHECK_THROWS_AS(pipeline.M(0), UsageError);
    CHECK_THROWS_AS(parse_kind("Z"), UsageError);
}

} // TEST_SUITE
