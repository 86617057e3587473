#pragma once

// Exact rational linear algebra over Q.
//
// Dense matrices use fraction-free Gauss-Jordan elimination for rref(); the
// large, sparse systems that appear in free-algebra computations go through
// SparseVector and EchelonBasis. Subspace is the single canonical normal form
// for every subobject: rows in reduced row-echelon form, so two subspaces are
// equal exactly when their representations are equal.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace schurlab {

using Scalar = mpq_class;
using Vector = std::vector<Scalar>;

/// Parses "p" or "p/q" (optional sign); throws InputError on malformed text or q == 0.
Scalar parse_scalar(const std::string& text);
std::string to_string(const Scalar& value);
std::string to_string(const Vector& v);

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);
bool is_zero(const Vector& v);

class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols);
    static Matrix identity(std::size_t n);
    /// Builds a matrix from row vectors; all rows must share one length.
    static Matrix from_rows(std::size_t cols, const std::vector<Vector>& rows);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<const Scalar> row(std::size_t r) const {
        return {data_.data() + r * cols_, cols_};
    }
    Vector row_vector(std::size_t r) const;
    Vector column(std::size_t c) const;

    Matrix transpose() const;
    Vector apply(const Vector& v) const;
    Matrix operator*(const Matrix& other) const;

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

struct RrefResult {
    Matrix form;                     // reduced row-echelon form, same shape as the input
    std::size_t rank = 0;
    std::vector<std::size_t> pivots; // pivot column of each of the first `rank` rows
};

RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);

/// Solves m x = b. Returns nullopt when inconsistent; free variables are set to 0.
std::optional<Vector> solve(const Matrix& m, const Vector& b);
/// Throws SingularMatrix for non-invertible (or non-square) input.
Matrix inverse(const Matrix& m);

/// Sorted (index, nonzero value) list.
class SparseVector {
public:
    using Entry = std::pair<std::size_t, Scalar>;

    SparseVector() = default;
    static SparseVector unit(std::size_t i, Scalar value = 1);
    static SparseVector from_dense(const Vector& v);
    /// Sorts, merges duplicates and drops zeros.
    static SparseVector from_terms(std::vector<Entry> terms);

    Vector to_dense(std::size_t n) const;

    bool empty() const noexcept { return entries_.empty(); }
    std::size_t nonzeros() const noexcept { return entries_.size(); }
    const std::vector<Entry>& entries() const noexcept { return entries_; }
    std::size_t leading() const { return entries_.front().first; }
    Scalar coeff(std::size_t i) const;

    /// this += factor * other
    void add_scaled(const SparseVector& other, const Scalar& factor);
    void scale(const Scalar& factor);
    SparseVector operator-() const;

    friend bool operator==(const SparseVector&, const SparseVector&) = default;

private:
    std::vector<Entry> entries_;
};

/// Incrementally built row-echelon basis: every stored row is monic at its
/// pivot column and pivots are distinct. Rows are only head-reduced until
/// to_rows() back-substitutes them into reduced form.
class EchelonBasis {
public:
    explicit EchelonBasis(std::size_t ambient_dim);

    std::size_t ambient_dim() const noexcept { return ambient_; }
    std::size_t rank() const noexcept { return rows_.size(); }

    /// Returns true when v was independent of the rows inserted so far.
    bool insert(SparseVector v);
    /// Canonical remainder of v: zero at every pivot column, congruent to v modulo the span.
    SparseVector reduce(SparseVector v) const;
    bool contains(const SparseVector& v) const { return reduce(v).empty(); }

    /// Reduced row-echelon rows, sorted by pivot column.
    std::vector<SparseVector> to_rows() const;

private:
    void head_reduce(SparseVector& v) const;

    std::size_t ambient_;
    std::vector<SparseVector> rows_;
    std::vector<long> pivot_row_; // per column: index into rows_ or -1
};

class Subspace {
public:
    Subspace() = default;
    static Subspace zero(std::size_t ambient_dim);
    static Subspace full(std::size_t ambient_dim);
    /// Span of the given coordinate axes.
    static Subspace coordinate(std::size_t ambient_dim, const std::vector<std::size_t>& axes);
    static Subspace span(std::size_t ambient_dim, const std::vector<Vector>& vectors);
    static Subspace span(std::size_t ambient_dim, const std::vector<SparseVector>& vectors);
    static Subspace from_echelon(const EchelonBasis& basis);

    std::size_t ambient_dim() const noexcept { return ambient_; }
    std::size_t dim() const noexcept { return rows_.size(); }
    bool is_zero() const noexcept { return rows_.empty(); }

    const std::vector<SparseVector>& rows() const noexcept { return rows_; }
    const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }
    std::vector<std::size_t> nonpivot_columns() const;
    /// Basis as a dense dim x ambient matrix.
    Matrix basis() const;
    std::vector<Vector> basis_vectors() const;

    /// Canonical remainder of v modulo this subspace (zero at pivot columns).
    SparseVector reduce(SparseVector v) const;
    Vector reduce(const Vector& v) const;
    bool contains(const Vector& v) const;
    bool contains(const SparseVector& v) const;
    bool contains(const Subspace& other) const;

    friend bool operator==(const Subspace&, const Subspace&) = default;

private:
    Subspace(std::size_t ambient, std::vector<SparseVector> rows);

    std::size_t ambient_ = 0;
    std::vector<SparseVector> rows_;
    std::vector<std::size_t> pivots_;
};

/// Null space {x : m x = 0}.
Subspace kernel_basis(const Matrix& m);
/// Image of the linear map x -> m x, i.e. the column space of m.
Subspace image(const Matrix& m);
Subspace intersect(const Subspace& a, const Subspace& b);
Subspace sum(const Subspace& a, const Subspace& b);

/// Coordinates on the quotient space big/small (small must lie inside big).
///
/// The quotient basis is the canonical complement: reduce big's rows modulo
/// small and take the RREF of the result. coords(v) returns the coefficients
/// of v + small in that basis; representatives() lists the basis vectors.
class QuotientCoordinates {
public:
    QuotientCoordinates(Subspace big, Subspace small);

    std::size_t dim() const noexcept { return complement_.dim(); }
    Vector coords(const Vector& v) const;
    std::vector<Vector> representatives() const { return complement_.basis_vectors(); }

private:
    Subspace big_;
    Subspace small_;
    Subspace complement_;
};

} // namespace schurlab
