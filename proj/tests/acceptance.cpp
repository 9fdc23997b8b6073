// Acceptance runner: one [PASS]/[FAIL] line per criterion, nonzero exit if any fail.
// All comparisons are exact; the only tolerances are the wall-clock bounds below.

#include "nilorb/cli.hpp"
#include "nilorb/oracle.hpp"
#include "nilorb/partitions.hpp"
#include "nilorb/pipeline.hpp"
#include "nilorb/series.hpp"

#include "reference.hpp"

#include <json.hpp>

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

using namespace nilorb;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void expect(bool cond, const std::string& what)
    {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

struct CliResult {
    int code;
    std::string out;
};

CliResult cli_run(const std::vector<std::string>& args)
{
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str()};
}

int failures = 0;

// bound_s <= 0 means no time bound.
void criterion(int k, const std::string& title, double bound_s, const std::function<void(Outcome&)>& body)
{
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        body(o);
    } catch (const std::exception& e) {
        o.ok = false;
        o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (o.ok && bound_s > 0 && secs > bound_s) {
        o.ok = false;
        o.detail = "exceeded time bound of " + std::to_string(bound_s) + " s";
    }
    std::ostringstream timing;
    timing.precision(2);
    timing << std::fixed << secs << " s";
    if (bound_s > 0) timing << " / bound " << bound_s << " s";
    std::cout << (o.ok ? "[PASS]" : "[FAIL]") << " criterion " << k << ": " << title << " (" << timing.str() << ")";
    if (!o.ok) std::cout << " -- " << o.detail;
    std::cout << std::endl;
    failures += !o.ok;
}

const char* const kPublishedA2[] = {
    "1",
    "2q",
    "q^4 + 3q^2 + 2q",
    "q^9 + q^7 + q^6 + 4q^5 + 2q^4 + 7q^3 + 4q^2 + 2q",
    "q^16 + q^14 + q^13 + 2q^12 + 2q^11 + 4q^10 + 4q^9 + 7q^8 + 8q^7 + 13q^6 + 13q^5 + 16q^4 + 14q^3 + 7q^2 + 2q",
    "q^25 + q^23 + q^22 + 2q^21 + 2q^20 + 4q^19 + 3q^18 + 7q^17 + 7q^16 + 10q^15 + 11q^14 + 19q^13 + 17q^12 + "
    "28q^11 + 29q^10 + 39q^9 + 40q^8 + 53q^7 + 48q^6 + 52q^5 + 40q^4 + 25q^3 + 8q^2 + 2q",
};

std::string str(long v) { return std::to_string(v); }

BigInt ipow(long base, long e)
{
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(e));
    return r;
}

RationalFunction random_rf(std::mt19937& rng)
{
    return RationalFunction(reference::random_poly(rng, 3), reference::random_nonzero_poly(rng, 2));
}

XSeries random_series(std::mt19937& rng, int order, int constant)
{
    XSeries s(order);
    s[0] = RationalFunction(constant);
    for (int n = 1; n <= order; ++n) s[n] = random_rf(rng);
    return s;
}

// Sum over multiplicities: sum min(i, j) m_i(lambda) m_j(mu).
long inner_by_multiplicities(const Partition& lambda, const Partition& mu)
{
    long total = 0;
    for (const auto& [i, mi] : lambda.exponential_form())
        for (const auto& [j, nj] : mu.exponential_form()) total += static_cast<long>(std::min(i, j)) * mi * nj;
    return total;
}

// Sum over columns: sum lambda'_i mu'_i, with conjugates built from the Young diagram.
long inner_by_columns(const Partition& lambda, const Partition& mu)
{
    auto columns = [](const Partition& p) {
        std::vector<long> c;
        for (int part : p.parts())
            for (int i = 0; i < part; ++i) {
                if (static_cast<std::size_t>(i) >= c.size()) c.push_back(0);
                ++c[static_cast<std::size_t>(i)];
            }
        return c;
    };
    const auto a = columns(lambda), b = columns(mu);
    long total = 0;
    for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) total += a[i] * b[i];
    return total;
}

} // namespace

int main()
{
    criterion(1, "golden reproduction of A_2(k,q), k = 1..6", 60, [](Outcome& o) {
        for (int k = 1; k <= 6; ++k) {
            const auto r = cli_run({"compute", "--kind", "A", "--g", "2", "--n", str(k), "--format", "pretty"});
            o.expect(r.code == 0, "compute exit code " + str(r.code) + " at k=" + str(k));
            o.expect(r.out == std::string(kPublishedA2[k - 1]) + "\n", "A_2(" + str(k) + ",q) = " + r.out);
        }
    });

    criterion(2, "g = 1: A_1(n,q) = 1 for n <= 10, M_1(n,q) = p(n) for n <= 8", 30, [](Outcome& o) {
        Pipeline p(1);
        for (int n = 1; n <= 10; ++n) o.expect(p.A(n).value == RationalFunction(1), "A_1(" + str(n) + ") != 1");
        const auto partitions = reference::partition_numbers(8);
        const auto m = p.M(8);
        for (int n = 0; n <= 8; ++n)
            o.expect(m[static_cast<std::size_t>(n)].value == RationalFunction(partitions[static_cast<std::size_t>(n)]),
                     "M_1(" + str(n) + ") != p(n)");
    });

    criterion(3, "identity verification (routes g=1..3 N=6, kwi, g1-product, negative control)", 300,
              [](Outcome& o) {
                  for (int g = 1; g <= 3; ++g)
                      o.expect(cli_run({"verify", "thm5-routes", "--g", str(g), "--N", "6"}).code == 0,
                               "thm5-routes g=" + str(g));
                  o.expect(cli_run({"verify", "kwi", "--g", "2", "--N", "4", "--Q", "12"}).code == 0, "kwi");
                  o.expect(cli_run({"verify", "g1-product", "--N", "6", "--Q", "10"}).code == 0, "g1-product");
                  const auto neg =
                      cli_run({"verify", "kwi", "--g", "2", "--N", "4", "--Q", "12", "--perturb", "3,2,1"});
                  o.expect(neg.code == 1, "perturbed kwi did not fail");
                  const auto report = nlohmann::json::parse(neg.out).at("reports").at(0);
                  o.expect(report.contains("mismatch") && report.at("mismatch").at("x_degree") == 3 &&
                               report.at("mismatch").at("q_degree").get<int>() >= 0,
                           "perturbed kwi mismatch not located at X^3");
              });

    criterion(4, "A_g(n,q) integral with degree <= (g-1)n^2 for g <= 3, n <= 6", 0, [](Outcome& o) {
        for (int g = 1; g <= 3; ++g) {
            Pipeline p(g);
            for (int n = 1; n <= 6; ++n) {
                const auto& a = p.A(n);
                const std::string at = "g=" + str(g) + " n=" + str(n);
                o.expect(a.value.is_polynomial(), "A not a polynomial at " + at);
                o.expect(a.poly().is_integral(), "A not integral at " + at);
                o.expect(a.poly().degree() <= (g - 1) * n * n, "degree bound violated at " + at);
            }
        }
    });

    criterion(5, "orbit counts: Burnside = explicit orbits = pipeline; I/A classification", 300, [](Outcome& o) {
        struct Row {
            int g, n, q;
            long expected_m; // 0: take the pipeline value
        };
        for (const Row& r : {Row{2, 2, 2, 5}, Row{2, 2, 3, 7}, Row{2, 3, 2, 37}, Row{3, 2, 2, 0}}) {
            const std::string at = "(" + str(r.g) + "," + str(r.n) + "," + str(r.q) + ")";
            const FiniteField f(r.q);
            Pipeline p(r.g);
            const BigRat pipeline_m = p.M(r.n)[static_cast<std::size_t>(r.n)].value.evaluate(r.q);
            const BigInt burnside = oracle::burnside_M(r.g, r.n, f);
            const auto orbits = oracle::enumerate_orbits(r.g, r.n, f).size();
            o.expect(BigRat(burnside) == pipeline_m, "Burnside != pipeline at " + at);
            o.expect(burnside == static_cast<unsigned long>(orbits), "Burnside != orbit count at " + at);
            if (r.expected_m) o.expect(burnside == r.expected_m, "M != " + str(r.expected_m) + " at " + at);
        }
        const FiniteField f2(2);
        auto c = oracle::bruteforce_counts(2, 2, f2);
        o.expect(c.I == 4 && c.A == 4, "(I,A) != (4,4) at (2,2,2)");
        o.expect(Pipeline(2).A(2).value.evaluate(2) == 4, "2q at q=2 != 4");
        c = oracle::bruteforce_counts(2, 3, f2);
        o.expect(c.I == 32 && c.A == 32, "(I,A) != (32,32) at (2,3,2)");
        o.expect(Pipeline(2).A(3).value.evaluate(2) == 32, "A_2(3,2) != 32");
    });

    criterion(6, "nilpotent totals and nilpotent-commutant counts against closed forms", 120, [](Outcome& o) {
        for (int q : {2, 3}) {
            const FiniteField f(q);
            for (int n = 1; n <= 3; ++n)
                o.expect(oracle::enumerate_nilpotent(n, f).size() == ipow(q, n * n - n),
                         "nilpotent total n=" + str(n) + " q=" + str(q));
            for (const Partition& lambda :
                 {Partition({1}), Partition({2}), Partition({1, 1}), Partition({2, 1}), Partition({3})})
                for (int a = 0; a < q; ++a) {
                    const oracle::FieldPoly f_lin{f.neg(static_cast<FiniteField::Elem>(a)), 1};
                    const auto r = oracle::count_nilpotent_commutant(lambda, f_lin, f);
                    const BigInt expected = ipow(q, inner_product(lambda, lambda) - lambda.length());
                    o.expect(r.enumerated == expected && r.formula == expected,
                             "nilcount " + lambda.to_string() + " q=" + str(q));
                }
        }
        const FiniteField f2(2);
        for (const Partition& lambda : {Partition({1}), Partition({2})}) {
            const auto r = oracle::count_nilpotent_commutant(lambda, {1, 1, 1}, f2);
            const BigInt expected = ipow(2, 2 * (inner_product(lambda, lambda) - lambda.length()));
            o.expect(r.enumerated == expected && r.formula == expected, "nilcount x^2+x+1 " + lambda.to_string());
        }
    });

    criterion(7, "conjecture scan: g=2 Nmax=6 has no negative coefficients; Nmax=8 completes", 600, [](Outcome& o) {
        const auto r6 = cli_run({"conjecture-scan", "--g", "2", "--Nmax", "6"});
        o.expect(r6.code == 0, "scan Nmax=6 exit " + str(r6.code));
        o.expect(nlohmann::json::parse(r6.out).at("negatives").empty(), "negative coefficient found for n <= 6");
        const auto r8 = cli_run({"conjecture-scan", "--g", "2", "--Nmax", "8", "--format", "pretty"});
        o.expect(r8.code == 0, "scan Nmax=8 exit " + str(r8.code));
        std::cout << "    Nmax=8 report: " << r8.out.substr(r8.out.find("negative coefficients")) << std::flush;
    });

    criterion(8, "property suites: exp/log, Adams laws, inner products, H -> A -> H", 0, [](Outcome& o) {
        std::mt19937 rng(20260101);
        constexpr int kOrder = 5;
        for (int trial = 0; trial < 20; ++trial) {
            const XSeries a = random_series(rng, kOrder, 1), b = random_series(rng, kOrder, 1);
            const XSeries z = random_series(rng, kOrder, 0);
            o.expect(xs_exp(xs_log(a)) == a, "exp(log a) != a");
            o.expect(xs_log(xs_exp(z)) == z, "log(exp z) != z");
            o.expect(xs_log(a * b) == xs_log(a) + xs_log(b), "log(ab) != log a + log b");
            o.expect(xs_log(a) == xs_log_alternating(a), "log recurrence != alternating sum");
            for (int d : {1, 2, 3})
                for (int e : {1, 2}) {
                    o.expect(xs_adams(xs_adams(a, d), e) == xs_adams(a, d * e), "Adams composition");
                    o.expect(xs_adams(a * b, d) == xs_adams(a, d) * xs_adams(b, d), "Adams multiplicative");
                    o.expect(xs_adams(a + b, d) == xs_adams(a, d) + xs_adams(b, d), "Adams additive");
                }
        }
        for (int w1 = 0; w1 <= 8; ++w1)
            for (int w2 = 0; w2 <= 8; ++w2)
                for (const auto& lambda : enumerate_partitions(w1))
                    for (const auto& mu : enumerate_partitions(w2)) {
                        const long ip = inner_product(lambda, mu);
                        o.expect(ip == inner_by_multiplicities(lambda, mu) && ip == inner_by_columns(lambda, mu),
                                 "inner product " + lambda.to_string() + "," + mu.to_string());
                    }
        for (int g = 1; g <= 3; ++g) {
            Pipeline p(g);
            for (int n = 1; n <= 6; ++n)
                o.expect(p.H_from_A(n) == p.H(n), "H -> A -> H at g=" + str(g) + " n=" + str(n));
        }
    });

    std::cout << (failures ? "acceptance: FAILED (" + str(failures) + " criteria)" : "acceptance: all 8 criteria passed")
              << std::endl;
    return failures ? 1 : 0;
}
