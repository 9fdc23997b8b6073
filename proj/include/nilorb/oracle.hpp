#pragma once

#include "nilorb/bigint.hpp"
#include "nilorb/field.hpp"
#include "nilorb/partitions.hpp"

#include <cstdint>
#include <vector>

namespace nilorb {

/// Brute-force counts over small finite fields, used to cross-check the
/// pipeline. Every entry point enforces a size guard and throws UsageError
/// beyond it; none of this is meant to scale.
namespace oracle {

/// Nilpotent n x n matrices in lexicographic order; count checked against q^{n^2-n}.
std::vector<FqMatrix> enumerate_nilpotent(int n, const FiniteField& field);
/// GL(n, F_q); count checked against prod_{i<n} (q^n - q^i).
std::vector<FqMatrix> enumerate_GL(int n, const FiniteField& field);
BigInt gl_order(int n, int q);

/// Orbits of nilpotent g-tuples under simultaneous conjugation, via Burnside:
/// (1/|GL|) sum_T (#nilpotents commuting with T)^g.
BigInt burnside_M(int g, int n, const FiniteField& field);

/// Basis of the simultaneous commutant {E : E M_i = M_i E for all i}.
std::vector<FqMatrix> commutant_basis(const FiniteField& field, const FqMatrixTuple& tuple);

/// Structure of the endomorphism algebra of a tuple's representation.
struct EndomorphismProfile {
    int dimension = 0;             // k: End has q^k elements
    std::uint64_t non_units = 0;   // singular elements of End
    bool local = false;            // non-units closed under addition
    int residue_degree = 0;        // s with End/rad = F_{q^s}; 0 unless local
};

EndomorphismProfile analyze_endomorphisms(const FiniteField& field, const FqMatrixTuple& tuple);

struct OrbitRecord {
    FqMatrixTuple representative; // lexicographically minimal member
    std::uint64_t size = 0;
    EndomorphismProfile endomorphisms;
};

enum class OrbitClass { Decomposable, Indecomposable, AbsolutelyIndecomposable };

const char* to_string(OrbitClass c);

/// All orbits, each with its canonical representative and endomorphism profile.
std::vector<OrbitRecord> enumerate_orbits(int g, int n, const FiniteField& field);

/// Indecomposable iff End is local; absolutely so iff End/rad is F_q itself.
OrbitClass classify_orbit(const OrbitRecord& rec);
OrbitClass classify_tuple(const FiniteField& field, const FqMatrixTuple& tuple);

struct OrbitCounts {
    BigInt M; // all orbits
    BigInt I; // indecomposable
    BigInt A; // absolutely indecomposable
};

OrbitCounts bruteforce_counts(int g, int n, const FiniteField& field);

/// Monic polynomial over the field, coefficients ascending (last entry 1).
using FieldPoly = std::vector<FiniteField::Elem>;

bool is_monic_irreducible(const FiniteField& field, const FieldPoly& f);
/// Companion matrix of f (ones on the superdiagonal, -a_0..-a_{d-1} in the last row).
FqMatrix companion_matrix(const FiniteField& field, const FieldPoly& f);
/// Block direct sum of Jordan block matrices J_{lambda_i}(f).
FqMatrix jordan_matrix(const FiniteField& field, const Partition& lambda, const FieldPoly& f);

struct NilCommutantCount {
    BigInt enumerated;      // nilpotent elements of the commutant, by enumeration
    BigInt formula;         // q^{d(<l,l> - l(l))}
    int commutant_dimension = 0;
};

/// Counts nilpotent matrices commuting with J_lambda(f) by enumerating the
/// commutant, alongside the closed form.
NilCommutantCount count_nilpotent_commutant(const Partition& lambda, const FieldPoly& f, const FiniteField& field);

} // namespace oracle
} // namespace nilorb
