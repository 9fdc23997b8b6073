#include "nilorb/partitions.hpp"

#include "nilorb/errors.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace nilorb {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts))
{
    for (int p : parts_)
        if (p <= 0) throw UsageError("partition parts must be positive");
    std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

int Partition::weight() const
{
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::map<int, int> Partition::exponential_form() const
{
    std::map<int, int> m;
    for (int p : parts_) ++m[p];
    return m;
}

std::string Partition::to_string() const
{
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
    os << ')';
    return os.str();
}

std::vector<Partition> enumerate_partitions(int n)
{
    if (n < 0) throw UsageError("cannot partition a negative integer");
    std::vector<Partition> out;
    if (n == 0) {
        out.emplace_back();
        return out;
    }
    std::vector<int> cur{n};
    for (;;) {
        out.emplace_back(cur);
        // Find the rightmost part greater than 1, decrement it, and refill
        // the tail greedily with parts no larger than the decremented value.
        int ones = 0;
        while (!cur.empty() && cur.back() == 1) {
            cur.pop_back();
            ++ones;
        }
        if (cur.empty()) break;
        int k = --cur.back();
        int rest = ones + 1;
        while (rest > 0) {
            int part = std::min(k, rest);
            cur.push_back(part);
            rest -= part;
        }
    }
    return out;
}

Partition conjugate(const Partition& lambda)
{
    const auto& parts = lambda.parts();
    if (parts.empty()) return {};
    std::vector<int> out(static_cast<std::size_t>(parts.front()), 0);
    for (int p : parts)
        for (int i = 0; i < p; ++i) ++out[static_cast<std::size_t>(i)];
    return Partition(std::move(out));
}

long inner_product(const Partition& lambda, const Partition& mu)
{
    const auto lc = conjugate(lambda).parts();
    const auto mc = conjugate(mu).parts();
    long via_conjugates = 0;
    for (std::size_t i = 0; i < std::min(lc.size(), mc.size()); ++i) via_conjugates += static_cast<long>(lc[i]) * mc[i];

    long via_multiplicities = 0;
    for (auto [i, mi] : lambda.exponential_form())
        for (auto [j, nj] : mu.exponential_form()) via_multiplicities += static_cast<long>(std::min(i, j)) * mi * nj;

    NILORB_ASSERT(via_conjugates == via_multiplicities,
                  "inner product routes disagree for " + lambda.to_string() + ", " + mu.to_string());
    return via_conjugates;
}

PolyQ varphi(int r)
{
    if (r < 0) throw UsageError("varphi index must be nonnegative");
    PolyQ out{1};
    for (int s = 1; s <= r; ++s) out *= -PolyQ::q_power_minus_one(s);
    return out;
}

PolyQ b_lambda(const Partition& lambda)
{
    PolyQ out{1};
    for (auto [part, mult] : lambda.exponential_form()) out *= varphi(mult);
    return out;
}

RationalFunction p_coefficient(const Partition& lambda, int g)
{
    if (g < 1) throw UsageError("g must be positive");
    if (lambda.weight() < 1) throw UsageError("p_coefficient needs a nonempty partition");
    const long ip = inner_product(lambda, lambda);
    const long num_exp = static_cast<long>(g) * (ip - lambda.length());

    // q^{<l,l>} b_l(1/q): each factor (1 - q^{-s}) takes q^s from the budget
    // and becomes q^s - 1; what is left of the budget stays as a q-power.
    long budget = ip;
    PolyQ den{1};
    for (auto [part, mult] : lambda.exponential_form()) {
        for (int s = 1; s <= mult; ++s) {
            den *= PolyQ::q_power_minus_one(s);
            budget -= s;
        }
    }
    NILORB_ASSERT(budget >= 0, "negative residual q-power in p_coefficient");
    const long cancel = std::min(num_exp, budget);
    return RationalFunction(PolyQ::monomial(1, static_cast<int>(num_exp - cancel)),
                            den.shifted(static_cast<int>(budget - cancel)));
}

int mobius(int n)
{
    if (n < 1) throw UsageError("mobius argument must be positive");
    int result = 1;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        n /= p;
        if (n % p == 0) return 0;
        result = -result;
    }
    if (n > 1) result = -result;
    return result;
}

std::vector<int> divisors(int n)
{
    if (n < 1) throw UsageError("divisors of a nonpositive integer");
    std::vector<int> out;
    for (int d = 1; d <= n; ++d)
        if (n % d == 0) out.push_back(d);
    return out;
}

PolyQ irr_count(int d)
{
    if (d < 1) throw UsageError("irreducible-count degree must be positive");
    PolyQ sum;
    for (int e : divisors(d)) {
        const int mu = mobius(e);
        if (mu) sum += PolyQ::q_power_minus_one(d / e) * BigRat(mu);
    }
    return sum * BigRat(1, d);
}

} // namespace nilorb
