#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <vector>

namespace nilorb {

/// Finite field with at most 9 elements, held as addition and multiplication
/// tables. Element i encodes the polynomial sum_j d_j x^j in the base-p digits
/// d_j of i, reduced modulo a fixed irreducible (x^2+x+1 for F_4, x^3+x+1 for
/// F_8, x^2+1 for F_9). Element order is the index order.
class FiniteField {
public:
    using Elem = std::uint8_t;

    /// Throws UsageError unless q is a prime power <= 9.
    explicit FiniteField(int q);

    int q() const { return q_; }
    int characteristic() const { return p_; }
    int degree() const { return e_; }
    /// Modulus coefficients over F_p, ascending, monic; {0, 1} for prime fields.
    const std::vector<int>& modulus() const { return modulus_; }

    Elem add(Elem a, Elem b) const { return add_[a * q_ + b]; }
    Elem mul(Elem a, Elem b) const { return mul_[a * q_ + b]; }
    Elem neg(Elem a) const { return neg_[a]; }
    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
    /// Throws ArithmeticError for a == 0.
    Elem inv(Elem a) const;

    /// Exhaustive check of the field axioms on the tables.
    bool axioms_hold() const;

private:
    int q_ = 0;
    int p_ = 0;
    int e_ = 0;
    std::vector<int> modulus_;
    std::vector<Elem> add_;
    std::vector<Elem> mul_;
    std::vector<Elem> neg_;
    std::vector<Elem> inv_;
};

/// Square matrix over a FiniteField of order at most kMaxOrder, row-major.
/// Unused trailing entries are zero so the defaulted ordering is the
/// lexicographic order on row-major entries.
struct FqMatrix {
    static constexpr int kMaxOrder = 4;

    int n = 0;
    std::array<FiniteField::Elem, kMaxOrder * kMaxOrder> e{};

    FqMatrix() = default;
    explicit FqMatrix(int order);

    FiniteField::Elem operator()(int r, int c) const { return e[static_cast<std::size_t>(r * n + c)]; }
    FiniteField::Elem& operator()(int r, int c) { return e[static_cast<std::size_t>(r * n + c)]; }

    static FqMatrix identity(int order);
    bool is_zero() const;

    friend auto operator<=>(const FqMatrix&, const FqMatrix&) = default;
    friend bool operator==(const FqMatrix&, const FqMatrix&) = default;
};

using FqMatrixTuple = std::vector<FqMatrix>;

FqMatrix mat_mul(const FiniteField& f, const FqMatrix& a, const FqMatrix& b);
FqMatrix mat_add(const FiniteField& f, const FqMatrix& a, const FqMatrix& b);
FqMatrix mat_scale(const FiniteField& f, FiniteField::Elem c, const FqMatrix& a);
int mat_rank(const FiniteField& f, const FqMatrix& a);
bool is_invertible(const FiniteField& f, const FqMatrix& a);
/// Throws ArithmeticError for a singular matrix.
FqMatrix mat_inverse(const FiniteField& f, const FqMatrix& a);
/// M^n == 0.
bool is_nilpotent(const FiniteField& f, const FqMatrix& a);
/// t^{-1} m t given t^{-1}.
FqMatrix conjugate_by(const FiniteField& f, const FqMatrix& t_inv, const FqMatrix& m, const FqMatrix& t);

/// Rank of a set of vectors in F^len (each given as `len` entries).
int span_rank(const FiniteField& f, const std::vector<std::vector<FiniteField::Elem>>& vectors);

} // namespace nilorb
