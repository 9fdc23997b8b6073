#pragma once

#include "nilorb/poly.hpp"
#include "nilorb/ratfunc.hpp"

#include <map>
#include <string>
#include <vector>

namespace nilorb {

/// Integer partition: weakly decreasing positive parts. The empty partition
/// stands for the unique partition of 0.
class Partition {
public:
    Partition() = default;
    /// Parts are sorted into weakly decreasing order; nonpositive parts throw.
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int weight() const;
    int length() const { return static_cast<int>(parts_.size()); }
    /// Multiplicity table i -> n_i (only nonzero entries).
    std::map<int, int> exponential_form() const;
    std::string to_string() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
};

/// All partitions of n in reverse-lexicographic order: (n) first, (1^n) last.
std::vector<Partition> enumerate_partitions(int n);

Partition conjugate(const Partition& lambda);

/// <lambda, mu> = sum_i lambda'_i mu'_i. Computed both from the conjugates and
/// from the min-weighted multiplicity sum; disagreement raises InternalAssertion.
long inner_product(const Partition& lambda, const Partition& mu);

/// (1-q)(1-q^2)...(1-q^r), with varphi_0 = 1.
PolyQ varphi(int r);

/// Product of varphi(n_i) over the multiplicities of lambda.
PolyQ b_lambda(const Partition& lambda);

/// q^{g(<l,l> - l(l))} / (q^{<l,l>} b_l(1/q)), cleared of negative powers.
RationalFunction p_coefficient(const Partition& lambda, int g);

int mobius(int n);
std::vector<int> divisors(int n);

/// Number of monic irreducible polynomials of degree d over F_q other than x,
/// as a polynomial in q: (1/d) sum_{e|d} mu(e) (q^{d/e} - 1).
PolyQ irr_count(int d);

} // namespace nilorb
