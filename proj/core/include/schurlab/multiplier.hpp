#pragma once

// Schur multiplier, exterior square and exterior center through a free
// nilpotent presentation.
//
// For L of class c with d = n - m minimal generators we present L as a
// quotient of the free nilpotent algebra F of class c + 1 on d generators.
// Since gamma_{c+1}(F) lies in R, gamma_{c+2} of the untruncated free algebra
// lies in [F, R]; truncating at c + 1 therefore changes neither R cap F^2 nor
// [F, R] modulo the truncation, and
//
//     M(L)   = (R cap F^2) / [F, R]
//     L ^ L  = F^2 / [F, R]
//     Z^(L)  = { z : [lift(z), F] in [F, R] }.

#include <cstddef>
#include <optional>
#include <vector>

#include "schurlab/free_nilpotent.hpp"
#include "schurlab/lie_algebra.hpp"

namespace schurlab {

struct Presentation {
    FreeNilpotentAlgebra free;
    /// Basis indices of L used as minimal generators (lowest-index complement of L^2).
    std::vector<std::size_t> generator_basis;
    /// Induced map F -> L on Hall-basis coordinates (dim L x dim F).
    Matrix pi;
    Subspace relations;             // R = ker pi
    Subspace free_derived;          // F^2, the words of degree >= 2
    Subspace relations_commutator;  // [F, R]
    /// lifts[k] is a preimage of the k-th basis vector of L.
    std::vector<SparseVector> lifts;
};

/// Throws NotNilpotent / JacobiViolation for invalid input and ResourceLimit
/// when the free algebra exceeds `cap` words. Requires dim L >= 1.
Presentation present_minimal(const LieAlgebra& algebra, std::size_t cap = kDefaultWordCap);

struct MultiplierWitness {
    std::size_t dim = 0;
    Subspace relations_in_derived;  // R cap F^2
    Subspace relations_commutator;  // [F, R]
};

MultiplierWitness schur_multiplier(const LieAlgebra& algebra, std::size_t cap = kDefaultWordCap);
std::size_t schur_multiplier_dim(const LieAlgebra& algebra, std::size_t cap = kDefaultWordCap);
std::size_t schur_multiplier_dim(const Presentation& presentation);

std::size_t exterior_square_dim(const LieAlgebra& algebra, std::size_t cap = kDefaultWordCap);
std::size_t exterior_square_dim(const Presentation& presentation);

Subspace exterior_center(const LieAlgebra& algebra, std::size_t cap = kDefaultWordCap);
Subspace exterior_center(const Presentation& presentation);

bool is_capable(const LieAlgebra& algebra, std::size_t cap = kDefaultWordCap);

struct GaneaReport {
    std::size_t lhs = 0;        // dim M(L/N)
    std::size_t rhs = 0;        // dim M(L) + dim(N cap L^2)
    bool equal = false;
    bool n_in_exterior_center = false;
    bool consistent = false;    // equal <=> N inside Z^(L)
};

/// Dimension form of the Ganea-type criterion for a 1-dimensional central
/// ideal N. Throws NotOneDimensional / NotCentral.
GaneaReport ganea_dimension_check(const LieAlgebra& algebra, const Subspace& line,
                                  std::size_t cap = kDefaultWordCap);

struct MultiplierReport {
    std::size_t n = 0, m = 0, c = 0, d = 0;
    std::size_t dim_M = 0;
    std::size_t dim_exterior_square = 0;
    Subspace exterior_center;
    bool capable = false;
    // Bounds only exist for non-abelian algebras.
    std::optional<long long> bound_e1;
    std::optional<long long> bound_e2;
    bool attains_e2 = false;
};

MultiplierReport multiplier_report(const LieAlgebra& algebra, std::size_t cap = kDefaultWordCap);

} // namespace schurlab
