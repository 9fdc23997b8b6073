#pragma once

// Test-only reference computations. Each one takes a route independent of
// the library code it is used to check.

#include "nilorb/bigint.hpp"
#include "nilorb/field.hpp"
#include "nilorb/poly.hpp"

#include <cstdint>
#include <random>
#include <set>
#include <vector>

namespace reference {

// Partition numbers from Euler's pentagonal recurrence.
inline std::vector<long> partition_numbers(int n_max)
{
    std::vector<long> p(static_cast<std::size_t>(n_max) + 1, 0);
    p[0] = 1;
    for (int n = 1; n <= n_max; ++n) {
        long acc = 0;
        for (int k = 1;; ++k) {
            const int g1 = k * (3 * k - 1) / 2;
            const int g2 = k * (3 * k + 1) / 2;
            if (g1 > n) break;
            const long sign = (k % 2) ? 1 : -1;
            acc += sign * p[static_cast<std::size_t>(n - g1)];
            if (g2 <= n) acc += sign * p[static_cast<std::size_t>(n - g2)];
        }
        p[static_cast<std::size_t>(n)] = acc;
    }
    return p;
}

// Monic irreducible polynomials of degree d over F_q, x excluded: q^d minus the
// number of distinct products of two monic polynomials of positive degree.
inline long irreducible_count(const nilorb::FiniteField& f, int d)
{
    using Poly = std::vector<int>;
    const int q = f.q();
    auto all_monic = [&](int deg) {
        std::vector<Poly> out;
        long count = 1;
        for (int i = 0; i < deg; ++i) count *= q;
        for (long code = 0; code < count; ++code) {
            Poly p(static_cast<std::size_t>(deg) + 1);
            long rest = code;
            for (int i = 0; i < deg; ++i) {
                p[static_cast<std::size_t>(i)] = static_cast<int>(rest % q);
                rest /= q;
            }
            p.back() = 1;
            out.push_back(p);
        }
        return out;
    };
    std::set<Poly> reducible;
    for (int a = 1; a < d; ++a)
        for (const auto& u : all_monic(a))
            for (const auto& v : all_monic(d - a)) {
                Poly w(static_cast<std::size_t>(d) + 1, 0);
                for (std::size_t i = 0; i < u.size(); ++i)
                    for (std::size_t j = 0; j < v.size(); ++j)
                        w[i + j] = f.add(static_cast<nilorb::FiniteField::Elem>(w[i + j]),
                                         f.mul(static_cast<nilorb::FiniteField::Elem>(u[i]),
                                               static_cast<nilorb::FiniteField::Elem>(v[j])));
                reducible.insert(w);
            }
    long total = 1;
    for (int i = 0; i < d; ++i) total *= q;
    long irreducible = total - static_cast<long>(reducible.size());
    if (d == 1) irreducible -= 1; // x itself
    return irreducible;
}

// Truncated power-series product, used to expand rational functions given as
// products of known geometric series.
inline std::vector<nilorb::BigRat> series_mul(const std::vector<nilorb::BigRat>& a, const std::vector<nilorb::BigRat>& b)
{
    std::vector<nilorb::BigRat> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; i + j < a.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

// 1 / (1 - c q) truncated at order Q.
inline std::vector<nilorb::BigRat> geometric(const nilorb::BigRat& c, int order)
{
    std::vector<nilorb::BigRat> out(static_cast<std::size_t>(order) + 1);
    nilorb::BigRat power = 1;
    for (auto& x : out) {
        x = power;
        power *= c;
    }
    return out;
}

inline nilorb::PolyQ random_poly(std::mt19937& rng, int max_degree, bool allow_fractions = true)
{
    std::uniform_int_distribution<int> deg(0, max_degree);
    std::uniform_int_distribution<int> num(-5, 5);
    std::uniform_int_distribution<int> den(1, allow_fractions ? 3 : 1);
    std::vector<nilorb::BigRat> c(static_cast<std::size_t>(deg(rng)) + 1);
    for (auto& x : c) {
        x = nilorb::BigRat(num(rng), den(rng));
        x.canonicalize();
    }
    return nilorb::PolyQ(std::move(c));
}

inline nilorb::PolyQ random_nonzero_poly(std::mt19937& rng, int max_degree)
{
    for (;;) {
        auto p = random_poly(rng, max_degree);
        if (!p.is_zero()) return p;
    }
}

} // namespace reference
