#include "nilorb/oracle.hpp"

#include "nilorb/errors.hpp"

#include <algorithm>
#include <string>

namespace nilorb::oracle {

namespace {

constexpr std::uint64_t kMaxAlgebraElements = 1u << 14;
constexpr std::uint64_t kMaxCommutantElements = 1u << 20;

std::uint64_t ipow(std::uint64_t base, int exp)
{
    std::uint64_t r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

std::string params(int n, int q)
{
    return "n=" + std::to_string(n) + ", q=" + std::to_string(q);
}

void matrix_guard(int n, int q)
{
    if (n < 1) throw UsageError("matrix order must be positive");
    const bool ok = n == 1 || (n <= 3 && q <= 3) || (n <= 2 && q <= 9);
    if (!ok) throw UsageError("size guard exceeded for matrix enumeration (" + params(n, q) + ")");
}

void orbit_guard(int g, int n, int q)
{
    if (g < 1 || g > 3) throw UsageError("size guard exceeded: orbit enumeration needs 1 <= g <= 3");
    const bool ok = n == 1 || (n == 2 && (q == 2 || q == 3)) || (n == 3 && q == 2);
    if (!ok) throw UsageError("size guard exceeded for orbit enumeration (" + params(n, q) + ")");
}

// Row-major entries read as base-q digits, most significant first, so the
// code order is the lexicographic order.
std::uint64_t encode(const FqMatrix& m, int q)
{
    std::uint64_t code = 0;
    for (int i = 0; i < m.n * m.n; ++i) code = code * static_cast<std::uint64_t>(q) + m.e[static_cast<std::size_t>(i)];
    return code;
}

FqMatrix decode(std::uint64_t code, int n, int q)
{
    FqMatrix m(n);
    for (int i = n * n - 1; i >= 0; --i) {
        m.e[static_cast<std::size_t>(i)] = static_cast<FiniteField::Elem>(code % static_cast<std::uint64_t>(q));
        code /= static_cast<std::uint64_t>(q);
    }
    return m;
}

template <typename Pred>
std::vector<FqMatrix> enumerate_matrices(int n, const FiniteField& field, Pred keep)
{
    matrix_guard(n, field.q());
    std::vector<FqMatrix> out;
    const std::uint64_t total = ipow(static_cast<std::uint64_t>(field.q()), n * n);
    for (std::uint64_t code = 0; code < total; ++code) {
        FqMatrix m = decode(code, n, field.q());
        if (keep(m)) out.push_back(m);
    }
    return out;
}

bool commute(const FiniteField& f, const FqMatrix& a, const FqMatrix& b)
{
    return mat_mul(f, a, b) == mat_mul(f, b, a);
}

// Calls visit(E) for every element of the span of `basis`.
template <typename Visit>
void for_each_combination(const FiniteField& f, const std::vector<FqMatrix>& basis, int n, Visit visit)
{
    const int k = static_cast<int>(basis.size());
    std::vector<FiniteField::Elem> coeffs(static_cast<std::size_t>(k), 0);
    for (;;) {
        FqMatrix e(n);
        for (int i = 0; i < k; ++i)
            if (coeffs[static_cast<std::size_t>(i)]) e = mat_add(f, e, mat_scale(f, coeffs[static_cast<std::size_t>(i)], basis[static_cast<std::size_t>(i)]));
        visit(e);
        int pos = 0;
        while (pos < k && ++coeffs[static_cast<std::size_t>(pos)] == f.q()) coeffs[static_cast<std::size_t>(pos++)] = 0;
        if (pos == k) break;
    }
}

// Remainder of a modulo monic b over the field.
FieldPoly poly_mod(const FiniteField& f, FieldPoly a, const FieldPoly& b)
{
    const std::size_t db = b.size() - 1;
    while (a.size() > db) {
        const auto lead = a.back();
        const std::size_t shift = a.size() - 1 - db;
        for (std::size_t i = 0; i <= db; ++i) a[shift + i] = f.sub(a[shift + i], f.mul(lead, b[i]));
        a.pop_back();
    }
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

} // namespace

BigInt gl_order(int n, int q)
{
    BigInt order = 1;
    BigInt qn;
    mpz_ui_pow_ui(qn.get_mpz_t(), static_cast<unsigned long>(q), static_cast<unsigned long>(n));
    BigInt qi = 1;
    for (int i = 0; i < n; ++i) {
        order *= qn - qi;
        qi *= q;
    }
    return order;
}

std::vector<FqMatrix> enumerate_nilpotent(int n, const FiniteField& field)
{
    auto out = enumerate_matrices(n, field, [&](const FqMatrix& m) { return is_nilpotent(field, m); });
    const std::uint64_t expected = ipow(static_cast<std::uint64_t>(field.q()), n * n - n);
    NILORB_ASSERT(out.size() == expected, "nilpotent count differs from q^{n^2-n} at " + params(n, field.q()));
    return out;
}

std::vector<FqMatrix> enumerate_GL(int n, const FiniteField& field)
{
    auto out = enumerate_matrices(n, field, [&](const FqMatrix& m) { return is_invertible(field, m); });
    NILORB_ASSERT(BigInt(static_cast<unsigned long>(out.size())) == gl_order(n, field.q()),
                  "GL order mismatch at " + params(n, field.q()));
    return out;
}

BigInt burnside_M(int g, int n, const FiniteField& field)
{
    orbit_guard(g, n, field.q());
    const auto nil = enumerate_nilpotent(n, field);
    const auto group = enumerate_GL(n, field);
    BigInt total = 0;
    for (const auto& t : group) {
        const auto fixed = std::count_if(nil.begin(), nil.end(), [&](const FqMatrix& m) { return commute(field, t, m); });
        BigInt term;
        mpz_ui_pow_ui(term.get_mpz_t(), static_cast<unsigned long>(fixed), static_cast<unsigned long>(g));
        total += term;
    }
    const BigInt order(static_cast<unsigned long>(group.size()));
    NILORB_ASSERT(total % order == 0, "Burnside sum not divisible by |GL|");
    return total / order;
}

std::vector<FqMatrix> commutant_basis(const FiniteField& field, const FqMatrixTuple& tuple)
{
    if (tuple.empty()) throw UsageError("empty matrix tuple");
    const int n = tuple.front().n;
    const int vars = n * n;
    // Rows: entries of E M - M E, linear in the unknown entries E(a, b) -> column a*n + b.
    std::vector<std::vector<FiniteField::Elem>> rows;
    for (const auto& m : tuple) {
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) {
                std::vector<FiniteField::Elem> row(static_cast<std::size_t>(vars), 0);
                for (int k = 0; k < n; ++k) {
                    auto& x = row[static_cast<std::size_t>(r * n + k)];
                    x = field.add(x, m(k, c));
                    auto& y = row[static_cast<std::size_t>(k * n + c)];
                    y = field.sub(y, m(r, k));
                }
                rows.push_back(std::move(row));
            }
    }
    // Reduced row echelon form.
    std::vector<int> pivot_of_col(static_cast<std::size_t>(vars), -1);
    int rank = 0;
    for (int col = 0; col < vars && rank < static_cast<int>(rows.size()); ++col) {
        int piv = rank;
        while (piv < static_cast<int>(rows.size()) && rows[static_cast<std::size_t>(piv)][static_cast<std::size_t>(col)] == 0) ++piv;
        if (piv == static_cast<int>(rows.size())) continue;
        std::swap(rows[static_cast<std::size_t>(piv)], rows[static_cast<std::size_t>(rank)]);
        auto& prow = rows[static_cast<std::size_t>(rank)];
        const auto s = field.inv(prow[static_cast<std::size_t>(col)]);
        for (auto& x : prow) x = field.mul(s, x);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (static_cast<int>(r) == rank || rows[r][static_cast<std::size_t>(col)] == 0) continue;
            const auto factor = field.neg(rows[r][static_cast<std::size_t>(col)]);
            for (int c = 0; c < vars; ++c) rows[r][static_cast<std::size_t>(c)] = field.add(rows[r][static_cast<std::size_t>(c)], field.mul(factor, prow[static_cast<std::size_t>(c)]));
        }
        pivot_of_col[static_cast<std::size_t>(col)] = rank++;
    }
    // One basis vector per free column.
    std::vector<FqMatrix> basis;
    for (int free = 0; free < vars; ++free) {
        if (pivot_of_col[static_cast<std::size_t>(free)] >= 0) continue;
        FqMatrix e(n);
        e.e[static_cast<std::size_t>(free)] = 1;
        for (int col = 0; col < vars; ++col) {
            const int pr = pivot_of_col[static_cast<std::size_t>(col)];
            if (pr < 0) continue;
            e.e[static_cast<std::size_t>(col)] = field.neg(rows[static_cast<std::size_t>(pr)][static_cast<std::size_t>(free)]);
        }
        basis.push_back(e);
    }
    for (const auto& e : basis)
        for (const auto& m : tuple) NILORB_ASSERT(commute(field, e, m), "commutant basis element fails to commute");
    return basis;
}

EndomorphismProfile analyze_endomorphisms(const FiniteField& field, const FqMatrixTuple& tuple)
{
    const auto basis = commutant_basis(field, tuple);
    const int n = tuple.front().n;
    EndomorphismProfile prof;
    prof.dimension = static_cast<int>(basis.size());
    const std::uint64_t size = ipow(static_cast<std::uint64_t>(field.q()), prof.dimension);
    if (size > kMaxAlgebraElements) throw UsageError("size guard exceeded: endomorphism algebra too large to enumerate");

    // Inverses of commuting invertible matrices commute again, so the units
    // of End are exactly its invertible elements.
    std::vector<std::vector<FiniteField::Elem>> non_units;
    for_each_combination(field, basis, n, [&](const FqMatrix& e) {
        if (is_invertible(field, e)) return;
        non_units.emplace_back(e.e.begin(), e.e.begin() + n * n);
    });
    prof.non_units = non_units.size();
    // The non-units are closed under addition iff they fill their own span.
    const int span = span_rank(field, non_units);
    prof.local = ipow(static_cast<std::uint64_t>(field.q()), span) == prof.non_units;
    prof.residue_degree = prof.local ? prof.dimension - span : 0;
    return prof;
}

const char* to_string(OrbitClass c)
{
    switch (c) {
    case OrbitClass::Decomposable: return "decomposable";
    case OrbitClass::Indecomposable: return "indecomposable";
    case OrbitClass::AbsolutelyIndecomposable: return "absolutely indecomposable";
    }
    return "?";
}

std::vector<OrbitRecord> enumerate_orbits(int g, int n, const FiniteField& field)
{
    orbit_guard(g, n, field.q());
    const int q = field.q();
    const auto nil = enumerate_nilpotent(n, field);
    const auto group = enumerate_GL(n, field);
    const std::size_t nn = nil.size();

    std::vector<int> index_of_code(ipow(static_cast<std::uint64_t>(q), n * n), -1);
    for (std::size_t i = 0; i < nn; ++i) index_of_code[encode(nil[i], q)] = static_cast<int>(i);

    // conj[t * nn + m] = index of T^{-1} N_m T.
    std::vector<std::uint32_t> conj(group.size() * nn);
    for (std::size_t t = 0; t < group.size(); ++t) {
        const FqMatrix t_inv = mat_inverse(field, group[t]);
        for (std::size_t m = 0; m < nn; ++m) {
            const int idx = index_of_code[encode(conjugate_by(field, t_inv, nil[m], group[t]), q)];
            NILORB_ASSERT(idx >= 0, "conjugate of a nilpotent matrix is not nilpotent");
            conj[t * nn + m] = static_cast<std::uint32_t>(idx);
        }
    }

    const std::uint64_t total = ipow(nn, g);
    std::vector<bool> visited(total, false);
    std::vector<OrbitRecord> orbits;
    const BigInt order = gl_order(n, q);
    std::vector<std::size_t> digits(static_cast<std::size_t>(g));
    std::vector<std::uint64_t> members;
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        if (visited[idx]) continue;
        // Every smaller tuple was already absorbed into an earlier orbit, so idx
        // is the lexicographic minimum of its orbit.
        std::uint64_t rest = idx;
        for (int i = g - 1; i >= 0; --i) {
            digits[static_cast<std::size_t>(i)] = rest % nn;
            rest /= nn;
        }
        members.clear();
        for (std::size_t t = 0; t < group.size(); ++t) {
            std::uint64_t image = 0;
            for (int i = 0; i < g; ++i) image = image * nn + conj[t * nn + digits[static_cast<std::size_t>(i)]];
            members.push_back(image);
        }
        std::sort(members.begin(), members.end());
        members.erase(std::unique(members.begin(), members.end()), members.end());
        for (auto m : members) visited[m] = true;

        OrbitRecord rec;
        for (int i = 0; i < g; ++i) rec.representative.push_back(nil[digits[static_cast<std::size_t>(i)]]);
        rec.size = members.size();
        rec.endomorphisms = analyze_endomorphisms(field, rec.representative);
        // Orbit-stabilizer: the stabilizer is the unit group of End.
        const BigInt units = BigInt(static_cast<unsigned long>(ipow(static_cast<std::uint64_t>(q), rec.endomorphisms.dimension))) -
                             BigInt(static_cast<unsigned long>(rec.endomorphisms.non_units));
        NILORB_ASSERT(BigInt(static_cast<unsigned long>(rec.size)) * units == order, "orbit-stabilizer check failed");
        orbits.push_back(std::move(rec));
    }
    return orbits;
}

OrbitClass classify_orbit(const OrbitRecord& rec)
{
    const auto& prof = rec.endomorphisms;
    if (!prof.local) return OrbitClass::Decomposable;
    return prof.residue_degree == 1 ? OrbitClass::AbsolutelyIndecomposable : OrbitClass::Indecomposable;
}

OrbitClass classify_tuple(const FiniteField& field, const FqMatrixTuple& tuple)
{
    OrbitRecord rec;
    rec.representative = tuple;
    rec.endomorphisms = analyze_endomorphisms(field, tuple);
    return classify_orbit(rec);
}

OrbitCounts bruteforce_counts(int g, int n, const FiniteField& field)
{
    OrbitCounts counts{0, 0, 0};
    for (const auto& rec : enumerate_orbits(g, n, field)) {
        counts.M += 1;
        const auto cls = classify_orbit(rec);
        if (cls != OrbitClass::Decomposable) counts.I += 1;
        if (cls == OrbitClass::AbsolutelyIndecomposable) counts.A += 1;
    }
    return counts;
}

bool is_monic_irreducible(const FiniteField& field, const FieldPoly& f)
{
    if (f.size() < 2 || f.back() != 1) return false;
    const int d = static_cast<int>(f.size()) - 1;
    // Try every monic divisor candidate of degree 1..d/2.
    for (int k = 1; 2 * k <= d; ++k) {
        const std::uint64_t count = ipow(static_cast<std::uint64_t>(field.q()), k);
        for (std::uint64_t code = 0; code < count; ++code) {
            FieldPoly g(static_cast<std::size_t>(k) + 1);
            std::uint64_t rest = code;
            for (int i = 0; i < k; ++i) {
                g[static_cast<std::size_t>(i)] = static_cast<FiniteField::Elem>(rest % static_cast<std::uint64_t>(field.q()));
                rest /= static_cast<std::uint64_t>(field.q());
            }
            g.back() = 1;
            if (poly_mod(field, f, g).empty()) return false;
        }
    }
    return true;
}

FqMatrix companion_matrix(const FiniteField& field, const FieldPoly& f)
{
    const int d = static_cast<int>(f.size()) - 1;
    if (d < 1 || f.back() != 1) throw UsageError("companion matrix needs a monic polynomial of positive degree");
    FqMatrix c(d);
    for (int i = 0; i + 1 < d; ++i) c(i, i + 1) = 1;
    for (int j = 0; j < d; ++j) c(d - 1, j) = field.neg(f[static_cast<std::size_t>(j)]);
    return c;
}

FqMatrix jordan_matrix(const FiniteField& field, const Partition& lambda, const FieldPoly& f)
{
    const FqMatrix c = companion_matrix(field, f);
    const int d = c.n;
    const int order = d * lambda.weight();
    if (order < 1 || order > FqMatrix::kMaxOrder)
        throw UsageError("size guard exceeded: J_lambda(f) must have order at most " + std::to_string(FqMatrix::kMaxOrder));
    FqMatrix j(order);
    int offset = 0;
    for (int part : lambda.parts()) {
        for (int b = 0; b < part; ++b) {
            const int base = offset + b * d;
            for (int r = 0; r < d; ++r)
                for (int s = 0; s < d; ++s) j(base + r, base + s) = c(r, s);
            if (b + 1 < part)
                for (int r = 0; r < d; ++r) j(base + r, base + d + r) = 1;
        }
        offset += part * d;
    }
    return j;
}

NilCommutantCount count_nilpotent_commutant(const Partition& lambda, const FieldPoly& f, const FiniteField& field)
{
    if (!is_monic_irreducible(field, f)) throw UsageError("f must be monic irreducible over F_" + std::to_string(field.q()));
    const int d = static_cast<int>(f.size()) - 1;
    const int order = d * lambda.weight();
    if (order > (field.q() <= 3 ? 4 : 2))
        throw UsageError("size guard exceeded for nilpotent-commutant count (" + params(order, field.q()) + ")");
    const FqMatrix j = jordan_matrix(field, lambda, f);
    const auto basis = commutant_basis(field, {j});
    const int k = static_cast<int>(basis.size());
    if (ipow(static_cast<std::uint64_t>(field.q()), k) > kMaxCommutantElements)
        throw UsageError("size guard exceeded: commutant too large to enumerate");

    NilCommutantCount out;
    out.commutant_dimension = k;
    std::uint64_t count = 0;
    for_each_combination(field, basis, order, [&](const FqMatrix& e) {
        if (is_nilpotent(field, e)) ++count;
    });
    out.enumerated = BigInt(static_cast<unsigned long>(count));
    const long exponent = static_cast<long>(d) * (inner_product(lambda, lambda) - lambda.length());
    mpz_ui_pow_ui(out.formula.get_mpz_t(), static_cast<unsigned long>(field.q()), static_cast<unsigned long>(exponent));
    return out;
}

} // namespace nilorb::oracle
