#include "nilorb/field.hpp"

#include "nilorb/errors.hpp"

#include <algorithm>
#include <string>

namespace nilorb {

namespace {

std::vector<int> digits(int value, int p, int e)
{
    std::vector<int> d(static_cast<std::size_t>(e));
    for (int i = 0; i < e; ++i) {
        d[static_cast<std::size_t>(i)] = value % p;
        value /= p;
    }
    return d;
}

int undigits(const std::vector<int>& d, int p)
{
    int v = 0;
    for (auto it = d.rbegin(); it != d.rend(); ++it) v = v * p + *it;
    return v;
}

bool has_root(const std::vector<int>& poly, int p)
{
    for (int x = 0; x < p; ++x) {
        int acc = 0;
        for (auto it = poly.rbegin(); it != poly.rend(); ++it) acc = (acc * x + *it) % p;
        if (acc == 0) return true;
    }
    return false;
}

} // namespace

FiniteField::FiniteField(int q) : q_(q)
{
    switch (q) {
    case 2: case 3: case 5: case 7:
        p_ = q;
        e_ = 1;
        modulus_ = {0, 1};
        break;
    case 4:
        p_ = 2;
        e_ = 2;
        modulus_ = {1, 1, 1};
        break;
    case 8:
        p_ = 2;
        e_ = 3;
        modulus_ = {1, 1, 0, 1};
        break;
    case 9:
        p_ = 3;
        e_ = 2;
        modulus_ = {1, 0, 1};
        break;
    default:
        throw UsageError("unsupported field size q = " + std::to_string(q) + " (expected 2, 3, 4, 5, 7, 8 or 9)");
    }
    // Degree 2 and 3 polynomials are irreducible iff they have no root.
    if (e_ > 1) NILORB_ASSERT(!has_root(modulus_, p_), "field modulus is reducible");

    const auto qs = static_cast<std::size_t>(q_);
    add_.resize(qs * qs);
    mul_.resize(qs * qs);
    neg_.resize(qs);
    inv_.assign(qs, 0);
    for (int a = 0; a < q_; ++a) {
        const auto da = digits(a, p_, e_);
        for (int b = 0; b < q_; ++b) {
            const auto db = digits(b, p_, e_);
            std::vector<int> sum(static_cast<std::size_t>(e_));
            for (int i = 0; i < e_; ++i) sum[static_cast<std::size_t>(i)] = (da[static_cast<std::size_t>(i)] + db[static_cast<std::size_t>(i)]) % p_;
            add_[static_cast<std::size_t>(a * q_ + b)] = static_cast<Elem>(undigits(sum, p_));

            std::vector<int> prod(static_cast<std::size_t>(2 * e_ - 1), 0);
            for (int i = 0; i < e_; ++i)
                for (int j = 0; j < e_; ++j)
                    prod[static_cast<std::size_t>(i + j)] += da[static_cast<std::size_t>(i)] * db[static_cast<std::size_t>(j)];
            for (int k = 2 * e_ - 2; k >= e_; --k) {
                const int c = prod[static_cast<std::size_t>(k)] % p_;
                prod[static_cast<std::size_t>(k)] = 0;
                if (!c) continue;
                // x^e = -(m_0 + ... + m_{e-1} x^{e-1})
                for (int i = 0; i < e_; ++i)
                    prod[static_cast<std::size_t>(k - e_ + i)] += (p_ - 1) * c * modulus_[static_cast<std::size_t>(i)];
            }
            prod.resize(static_cast<std::size_t>(e_));
            for (auto& c : prod) c %= p_;
            mul_[static_cast<std::size_t>(a * q_ + b)] = static_cast<Elem>(undigits(prod, p_));
        }
    }
    for (int a = 0; a < q_; ++a) {
        for (int b = 0; b < q_; ++b) {
            if (add(static_cast<Elem>(a), static_cast<Elem>(b)) == 0) neg_[static_cast<std::size_t>(a)] = static_cast<Elem>(b);
            if (mul(static_cast<Elem>(a), static_cast<Elem>(b)) == 1) inv_[static_cast<std::size_t>(a)] = static_cast<Elem>(b);
        }
    }
    NILORB_ASSERT(axioms_hold(), "field tables fail the field axioms for q = " + std::to_string(q));
}

FiniteField::Elem FiniteField::inv(Elem a) const
{
    if (a == 0) throw ArithmeticError("inverse of zero field element");
    return inv_[a];
}

bool FiniteField::axioms_hold() const
{
    for (int a = 0; a < q_; ++a) {
        const auto ea = static_cast<Elem>(a);
        if (add(ea, 0) != ea || mul(ea, 1) != ea || add(ea, neg(ea)) != 0) return false;
        if (a != 0 && mul(ea, inv_[ea]) != 1) return false;
        for (int b = 0; b < q_; ++b) {
            const auto eb = static_cast<Elem>(b);
            if (add(ea, eb) != add(eb, ea) || mul(ea, eb) != mul(eb, ea)) return false;
            for (int c = 0; c < q_; ++c) {
                const auto ec = static_cast<Elem>(c);
                if (add(add(ea, eb), ec) != add(ea, add(eb, ec))) return false;
                if (mul(mul(ea, eb), ec) != mul(ea, mul(eb, ec))) return false;
                if (mul(ea, add(eb, ec)) != add(mul(ea, eb), mul(ea, ec))) return false;
            }
        }
    }
    return true;
}

FqMatrix::FqMatrix(int order) : n(order)
{
    if (order < 1 || order > kMaxOrder) throw UsageError("matrix order must be in 1.." + std::to_string(kMaxOrder));
}

FqMatrix FqMatrix::identity(int order)
{
    FqMatrix m(order);
    for (int i = 0; i < order; ++i) m(i, i) = 1;
    return m;
}

bool FqMatrix::is_zero() const
{
    return std::all_of(e.begin(), e.end(), [](auto x) { return x == 0; });
}

FqMatrix mat_mul(const FiniteField& f, const FqMatrix& a, const FqMatrix& b)
{
    FqMatrix out(a.n);
    for (int r = 0; r < a.n; ++r)
        for (int k = 0; k < a.n; ++k) {
            const auto ark = a(r, k);
            if (!ark) continue;
            for (int c = 0; c < a.n; ++c) out(r, c) = f.add(out(r, c), f.mul(ark, b(k, c)));
        }
    return out;
}

FqMatrix mat_add(const FiniteField& f, const FqMatrix& a, const FqMatrix& b)
{
    FqMatrix out(a.n);
    for (int i = 0; i < a.n * a.n; ++i) out.e[static_cast<std::size_t>(i)] = f.add(a.e[static_cast<std::size_t>(i)], b.e[static_cast<std::size_t>(i)]);
    return out;
}

FqMatrix mat_scale(const FiniteField& f, FiniteField::Elem c, const FqMatrix& a)
{
    FqMatrix out(a.n);
    for (int i = 0; i < a.n * a.n; ++i) out.e[static_cast<std::size_t>(i)] = f.mul(c, a.e[static_cast<std::size_t>(i)]);
    return out;
}

int span_rank(const FiniteField& f, const std::vector<std::vector<FiniteField::Elem>>& vectors)
{
    // Incremental echelon basis keyed by pivot column.
    std::vector<std::vector<FiniteField::Elem>> basis;
    std::vector<std::size_t> pivots;
    for (auto v : vectors) {
        for (std::size_t b = 0; b < basis.size(); ++b) {
            const auto c = v[pivots[b]];
            if (!c) continue;
            const auto factor = f.neg(c);
            for (std::size_t i = 0; i < v.size(); ++i) v[i] = f.add(v[i], f.mul(factor, basis[b][i]));
        }
        const auto it = std::find_if(v.begin(), v.end(), [](auto x) { return x != 0; });
        if (it == v.end()) continue;
        const auto piv = static_cast<std::size_t>(it - v.begin());
        const auto inv = f.inv(v[piv]);
        for (auto& x : v) x = f.mul(inv, x);
        // Keep the basis reduced in the new pivot column.
        for (std::size_t b = 0; b < basis.size(); ++b) {
            const auto c = basis[b][piv];
            if (!c) continue;
            const auto factor = f.neg(c);
            for (std::size_t i = 0; i < v.size(); ++i) basis[b][i] = f.add(basis[b][i], f.mul(factor, v[i]));
        }
        basis.push_back(std::move(v));
        pivots.push_back(piv);
    }
    return static_cast<int>(basis.size());
}

int mat_rank(const FiniteField& f, const FqMatrix& a)
{
    std::vector<std::vector<FiniteField::Elem>> rows;
    for (int r = 0; r < a.n; ++r) {
        std::vector<FiniteField::Elem> row(static_cast<std::size_t>(a.n));
        for (int c = 0; c < a.n; ++c) row[static_cast<std::size_t>(c)] = a(r, c);
        rows.push_back(std::move(row));
    }
    return span_rank(f, rows);
}

bool is_invertible(const FiniteField& f, const FqMatrix& a)
{
    return mat_rank(f, a) == a.n;
}

FqMatrix mat_inverse(const FiniteField& f, const FqMatrix& a)
{
    const int n = a.n;
    FqMatrix m = a;
    FqMatrix inv = FqMatrix::identity(n);
    for (int col = 0; col < n; ++col) {
        int piv = col;
        while (piv < n && m(piv, col) == 0) ++piv;
        if (piv == n) throw ArithmeticError("singular matrix");
        if (piv != col)
            for (int c = 0; c < n; ++c) {
                std::swap(m(piv, c), m(col, c));
                std::swap(inv(piv, c), inv(col, c));
            }
        const auto s = f.inv(m(col, col));
        for (int c = 0; c < n; ++c) {
            m(col, c) = f.mul(s, m(col, c));
            inv(col, c) = f.mul(s, inv(col, c));
        }
        for (int r = 0; r < n; ++r) {
            if (r == col || m(r, col) == 0) continue;
            const auto factor = f.neg(m(r, col));
            for (int c = 0; c < n; ++c) {
                m(r, c) = f.add(m(r, c), f.mul(factor, m(col, c)));
                inv(r, c) = f.add(inv(r, c), f.mul(factor, inv(col, c)));
            }
        }
    }
    return inv;
}

bool is_nilpotent(const FiniteField& f, const FqMatrix& a)
{
    FqMatrix power = a;
    for (int i = 1; i < a.n; ++i) {
        if (power.is_zero()) return true;
        power = mat_mul(f, power, a);
    }
    return power.is_zero();
}

FqMatrix conjugate_by(const FiniteField& f, const FqMatrix& t_inv, const FqMatrix& m, const FqMatrix& t)
{
    return mat_mul(f, mat_mul(f, t_inv, m), t);
}

} // namespace nilorb
