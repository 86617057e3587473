#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "schurlab/linalg.hpp"

namespace schurlab {

/// A bracket statement [x_i, x_j] = rhs on 0-based basis indices.
struct BracketRule {
    std::size_t i = 0;
    std::size_t j = 0;
    SparseVector rhs;
};

/// Finite-dimensional Lie algebra over Q given by structure constants.
///
/// Only brackets [x_i, x_j] with i < j are stored; the rest follow from
/// antisymmetry. Construction does not check the Jacobi identity, call
/// validate() for that.
class LieAlgebra {
public:
    LieAlgebra() = default;
    explicit LieAlgebra(std::size_t dim, std::string name = {});

    /// Rules with i > j are flipped by antisymmetry; i == j must have zero rhs.
    /// Later rules for the same pair overwrite earlier ones.
    static LieAlgebra from_rules(std::size_t dim, const std::vector<BracketRule>& rules,
                                 std::string name = {});

    std::size_t dim() const noexcept { return dim_; }
    const std::string& name() const noexcept { return name_; }
    void set_name(std::string name) { name_ = std::move(name); }

    /// [x_i, x_j] for any pair of basis indices.
    SparseVector basis_bracket(std::size_t i, std::size_t j) const;
    /// Stored constants for i < j (no copy).
    const SparseVector& structure(std::size_t i, std::size_t j) const;
    void set_structure(std::size_t i, std::size_t j, SparseVector rhs);

    Vector bracket(const Vector& u, const Vector& v) const;
    SparseVector bracket(const SparseVector& u, const SparseVector& v) const;

    bool is_abelian() const;
    /// All nonzero brackets as rules with i < j, in lexicographic order.
    std::vector<BracketRule> rules() const;

    friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
        return a.dim_ == b.dim_ && a.table_ == b.table_;
    }

private:
    std::size_t index(std::size_t i, std::size_t j) const { return i * dim_ - i * (i + 1) / 2 + (j - i - 1); }

    std::size_t dim_ = 0;
    std::string name_;
    std::vector<SparseVector> table_;
};

using Element = Vector;

struct JacobiFailure {
    std::size_t i, j, k;
    Vector residual;
};

/// Every basis triple i<j<k (lexicographic) whose Jacobiator is nonzero.
std::vector<JacobiFailure> find_jacobi_failures(const LieAlgebra& algebra, bool first_only = false);
/// First failing triple, if any.
std::optional<JacobiFailure> find_jacobi_failure(const LieAlgebra& algebra);
/// Throws JacobiViolation naming the triple and residual.
void validate(const LieAlgebra& algebra);

Vector bracket(const LieAlgebra& algebra, const Element& u, const Element& v);
Subspace bracket_subspaces(const LieAlgebra& algebra, const Subspace& s, const Subspace& t);
Subspace derived_subalgebra(const LieAlgebra& algebra);
Subspace center(const LieAlgebra& algebra);
bool is_ideal(const LieAlgebra& algebra, const Subspace& s);
bool is_central(const LieAlgebra& algebra, const Subspace& s);

struct SeriesReport {
    std::vector<std::size_t> gamma_dims;    // dim gamma_1, gamma_2, ..., ending with 0
    std::vector<Subspace> gamma;            // gamma_1 = L, ..., last nonzero term, then 0
    std::size_t n = 0;
    std::size_t derived_dim = 0;            // m
    std::size_t nilpotency_class = 0;       // c (0 for the zero algebra)
    Subspace center;
    std::size_t center_dim = 0;
    std::size_t min_generators = 0;         // d = n - m
    std::size_t central_complement_dim = 0; // t = dim Z / (Z cap L^2)
};

/// Lower central series and the invariants derived from it. Throws NotNilpotent.
SeriesReport series(const LieAlgebra& algebra);

/// Quotient L/I on the lowest-index complement basis of I.
struct Quotient {
    LieAlgebra algebra;
    Matrix projection;                    // dim(L/I) x dim L
    Matrix section;                       // dim L x dim(L/I), columns are the chosen representatives
    std::vector<std::size_t> complement;  // basis indices of L kept as quotient basis
};

/// Throws NotAnIdeal.
Quotient quotient_by_ideal(const LieAlgebra& algebra, const Subspace& ideal);
LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b);
/// New basis vectors are the columns of p (in old coordinates). Throws SingularMatrix.
LieAlgebra change_basis(const LieAlgebra& algebra, const Matrix& p);

} // namespace schurlab
