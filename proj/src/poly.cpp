#include "nilorb/poly.hpp"

#include "nilorb/errors.hpp"

#include <algorithm>
#include <cstdlib>

namespace nilorb {

namespace {

using PolyZ = std::vector<BigInt>;

void trim_z(PolyZ& a)
{
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// Primitive integer polynomial with positive leading coefficient.
PolyZ primitive_z(const PolyQ& a)
{
    const BigRat c = content(a);
    PolyZ out;
    out.reserve(a.coeffs().size());
    for (const auto& x : a.coeffs()) {
        BigRat y = x / c;
        out.push_back(y.get_num());
    }
    return out;
}

BigInt max_norm(const PolyZ& a)
{
    BigInt m = 0;
    for (const auto& x : a) {
        BigInt ax = abs(x);
        if (ax > m) m = ax;
    }
    return m;
}

BigInt eval_z(const PolyZ& a, const BigInt& x)
{
    BigInt acc = 0;
    for (auto it = a.rbegin(); it != a.rend(); ++it) acc = acc * x + *it;
    return acc;
}

// True iff b divides a over Z[q] (b primitive, so divisibility over Q agrees).
bool divides_z(const PolyZ& b, PolyZ a)
{
    if (b.empty()) return a.empty();
    const std::size_t db = b.size() - 1;
    while (!a.empty() && a.size() - 1 >= db) {
        const std::size_t shift = a.size() - 1 - db;
        if (!mpz_divisible_p(a.back().get_mpz_t(), b.back().get_mpz_t())) return false;
        BigInt f = a.back() / b.back();
        for (std::size_t i = 0; i <= db; ++i) a[shift + i] -= f * b[i];
        trim_z(a);
    }
    return a.empty();
}

PolyQ from_z(const PolyZ& a)
{
    std::vector<BigRat> c(a.begin(), a.end());
    return PolyQ(std::move(c));
}

// Heuristic gcd: evaluate at a large integer, take the integer gcd, and read
// the candidate back off its balanced base-xi digits. Any candidate that
// divides both inputs is the gcd of the primitive parts.
bool gcd_heuristic(const PolyZ& a, const PolyZ& b, PolyZ& out)
{
    BigInt xi = 2 * std::min(max_norm(a), max_norm(b)) + 29;
    for (int attempt = 0; attempt < 6; ++attempt) {
        const BigInt alpha = eval_z(a, xi);
        const BigInt beta = eval_z(b, xi);
        BigInt gamma;
        mpz_gcd(gamma.get_mpz_t(), alpha.get_mpz_t(), beta.get_mpz_t());
        if (gamma != 0) {
            PolyZ cand;
            const BigInt half = xi / 2;
            while (gamma != 0) {
                BigInt digit = gamma % xi;
                if (digit < 0) digit += xi;
                if (digit > half) digit -= xi;
                cand.push_back(digit);
                gamma = (gamma - digit) / xi;
            }
            trim_z(cand);
            if (!cand.empty()) {
                BigInt g = 0;
                for (const auto& x : cand) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
                if (cand.back() < 0) g = -g;
                for (auto& x : cand) x /= g;
                if (divides_z(cand, a) && divides_z(cand, b)) {
                    out = std::move(cand);
                    return true;
                }
            }
        }
        xi = xi * 73794 / 27011;
    }
    return false;
}

PolyQ gcd_euclid(PolyQ a, PolyQ b)
{
    while (!b.is_zero()) {
        PolyQ r = divmod(a, b).second;
        a = std::move(b);
        b = r.monic();
    }
    return a.monic();
}

} // namespace

PolyQ::PolyQ(std::vector<BigRat> coeffs) : coeffs_(std::move(coeffs))
{
    trim();
}

PolyQ::PolyQ(std::initializer_list<long> coeffs)
{
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs) coeffs_.emplace_back(c);
    trim();
}

PolyQ PolyQ::constant(const BigRat& c)
{
    return PolyQ(std::vector<BigRat>{c});
}

PolyQ PolyQ::monomial(const BigRat& c, int degree)
{
    if (degree < 0) throw ArithmeticError("negative monomial degree");
    std::vector<BigRat> v(static_cast<std::size_t>(degree) + 1);
    v.back() = c;
    return PolyQ(std::move(v));
}

PolyQ PolyQ::q_power_minus_one(int k)
{
    PolyQ p = monomial(1, k);
    p.coeffs_[0] -= 1;
    p.trim();
    return p;
}

bool PolyQ::is_one() const
{
    return coeffs_.size() == 1 && coeffs_[0] == 1;
}

BigRat PolyQ::coeff(int i) const
{
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
    return coeffs_[static_cast<std::size_t>(i)];
}

int PolyQ::valuation() const
{
    int k = 0;
    while (k < static_cast<int>(coeffs_.size()) && coeffs_[static_cast<std::size_t>(k)] == 0) ++k;
    return is_zero() ? 0 : k;
}

bool PolyQ::is_integral() const
{
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const BigRat& c) { return is_integer(c); });
}

PolyQ PolyQ::operator-() const
{
    PolyQ r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

PolyQ& PolyQ::operator+=(const PolyQ& rhs)
{
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
}

PolyQ& PolyQ::operator-=(const PolyQ& rhs)
{
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
}

PolyQ& PolyQ::operator*=(const PolyQ& rhs)
{
    *this = *this * rhs;
    return *this;
}

PolyQ& PolyQ::operator*=(const BigRat& c)
{
    if (c == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& x : coeffs_) x *= c;
    return *this;
}

PolyQ operator*(const PolyQ& a, const PolyQ& b)
{
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigRat> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return PolyQ(std::move(out));
}

PolyQ PolyQ::shifted(int k) const
{
    if (is_zero() || k == 0) return *this;
    std::vector<BigRat> v(static_cast<std::size_t>(k));
    v.insert(v.end(), coeffs_.begin(), coeffs_.end());
    return PolyQ(std::move(v));
}

PolyQ PolyQ::unshifted(int k) const
{
    if (k > valuation() && !is_zero()) throw ArithmeticError("inexact division");
    if (is_zero() || k == 0) return *this;
    return PolyQ(std::vector<BigRat>(coeffs_.begin() + k, coeffs_.end()));
}

PolyQ PolyQ::adams(int d) const
{
    if (d < 1) throw ArithmeticError("adams degree must be positive");
    if (d == 1 || is_zero()) return *this;
    std::vector<BigRat> v(static_cast<std::size_t>(degree() * d) + 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i * static_cast<std::size_t>(d)] = coeffs_[i];
    return PolyQ(std::move(v));
}

BigRat PolyQ::evaluate(const BigRat& q0) const
{
    BigRat acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * q0 + *it;
    return acc;
}

PolyQ PolyQ::monic() const
{
    if (is_zero() || leading() == 1) return *this;
    BigRat inv = 1 / leading();
    return *this * inv;
}

void PolyQ::trim()
{
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::pair<PolyQ, PolyQ> divmod(const PolyQ& a, const PolyQ& b)
{
    if (b.is_zero()) throw ArithmeticError("division by zero polynomial");
    if (a.degree() < b.degree()) return {PolyQ{}, a};
    std::vector<BigRat> rem(a.coeffs().begin(), a.coeffs().end());
    std::vector<BigRat> quo(static_cast<std::size_t>(a.degree() - b.degree()) + 1);
    const auto bc = b.coeffs();
    const std::size_t db = bc.size() - 1;
    const BigRat inv_lead = 1 / b.leading();
    for (std::size_t top = rem.size(); top-- > db;) {
        if (rem[top] == 0) continue;
        BigRat f = rem[top] * inv_lead;
        const std::size_t shift = top - db;
        quo[shift] = f;
        for (std::size_t i = 0; i <= db; ++i) rem[shift + i] -= f * bc[i];
    }
    rem.resize(db);
    return {PolyQ(std::move(quo)), PolyQ(std::move(rem))};
}

PolyQ exact_divide(const PolyQ& a, const PolyQ& b)
{
    auto [quo, rem] = divmod(a, b);
    if (!rem.is_zero()) throw ArithmeticError("inexact division");
    return quo;
}

BigRat content(const PolyQ& a)
{
    if (a.is_zero()) return 0;
    BigInt num = 0;
    BigInt den = 1;
    for (const auto& c : a.coeffs()) {
        mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), c.get_num_mpz_t());
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    }
    BigRat c(num, den);
    c.canonicalize();
    if (a.leading() < 0) c = -c;
    return c;
}

PolyQ gcd(const PolyQ& a, const PolyQ& b)
{
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    if (a.is_constant() || b.is_constant()) return PolyQ{1};
    // Strip common powers of q first; most pipeline denominators carry them.
    const int va = a.valuation();
    const int vb = b.valuation();
    const int v = std::min(va, vb);
    const PolyQ ar = a.unshifted(va);
    const PolyQ br = b.unshifted(vb);
    PolyQ core;
    if (ar.is_constant() || br.is_constant()) {
        core = PolyQ{1};
    } else {
        PolyZ g;
        if (gcd_heuristic(primitive_z(ar), primitive_z(br), g)) {
            core = from_z(g).monic();
        } else {
            core = gcd_euclid(ar, br);
        }
    }
    return core.shifted(v);
}

PolyQ pow(const PolyQ& a, unsigned e)
{
    PolyQ result{1};
    PolyQ base = a;
    while (e) {
        if (e & 1u) result *= base;
        e >>= 1u;
        if (e) base *= base;
    }
    return result;
}

} // namespace nilorb
