#include "schurlab/linalg.hpp"

#include <algorithm>
#include <cctype>

#include "schurlab/errors.hpp"

namespace schurlab {

Scalar parse_scalar(const std::string& text) {
    std::size_t pos = 0;
    auto digits = [&](std::size_t start) {
        std::size_t p = start;
        while (p < text.size() && std::isdigit(static_cast<unsigned char>(text[p]))) ++p;
        return p;
    };
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) ++pos;
    std::size_t end = digits(pos);
    if (end == pos) throw InputError("malformed rational '" + text + "'");
    if (end < text.size()) {
        if (text[end] != '/') throw InputError("malformed rational '" + text + "'");
        std::size_t den_end = digits(end + 1);
        if (den_end == end + 1 || den_end != text.size())
            throw InputError("malformed rational '" + text + "'");
    }
    std::string body = text[0] == '+' ? text.substr(1) : text;
    mpz_class num, den = 1;
    auto slash = body.find('/');
    num.set_str(body.substr(0, slash), 10);
    if (slash != std::string::npos) den.set_str(body.substr(slash + 1), 10);
    if (den == 0) throw InputError("zero denominator in '" + text + "'");
    Scalar value(num, den);
    value.canonicalize();
    return value;
}

std::string to_string(const Scalar& value) { return value.get_str(); }

std::string to_string(const Vector& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += v[i].get_str();
    }
    return out + ")";
}

Vector zero_vector(std::size_t n) { return Vector(n); }

Vector unit_vector(std::size_t n, std::size_t i) {
    Vector v(n);
    v.at(i) = 1;
    return v;
}

bool is_zero(const Vector& v) {
    return std::all_of(v.begin(), v.end(), [](const Scalar& x) { return sgn(x) == 0; });
}

// ---------------------------------------------------------------- Matrix

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::from_rows(std::size_t cols, const std::vector<Vector>& rows) {
    Matrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw DimensionMismatch("ragged rows in matrix");
        std::copy(rows[r].begin(), rows[r].end(), m.data_.begin() + r * cols);
    }
    return m;
}

Vector Matrix::row_vector(std::size_t r) const {
    auto s = row(r);
    return Vector(s.begin(), s.end());
}

Vector Matrix::column(std::size_t c) const {
    Vector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

Vector Matrix::apply(const Vector& v) const {
    if (v.size() != cols_) throw DimensionMismatch("matrix-vector size mismatch");
    Vector out(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (sgn(v[c]) != 0 && sgn((*this)(r, c)) != 0) out[r] += (*this)(r, c) * v[c];
    return out;
}

Matrix Matrix::operator*(const Matrix& other) const {
    if (cols_ != other.rows_) throw DimensionMismatch("matrix product size mismatch");
    Matrix out(rows_, other.cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Scalar& a = (*this)(r, k);
            if (sgn(a) == 0) continue;
            for (std::size_t c = 0; c < other.cols_; ++c)
                if (sgn(other(k, c)) != 0) out(r, c) += a * other(k, c);
        }
    return out;
}

// ---------------------------------------------------------------- rref

RrefResult rref(const Matrix& m) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();

    // Clear denominators row by row, then run fraction-free Gauss-Jordan:
    // after each pivot step every entry is a minor of the integer matrix, so
    // the division by the previous pivot is exact.
    std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols));
    for (std::size_t r = 0; r < rows; ++r) {
        mpz_class scale = 1;
        for (std::size_t c = 0; c < cols; ++c)
            mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), m(r, c).get_den_mpz_t());
        for (std::size_t c = 0; c < cols; ++c)
            a[r][c] = m(r, c).get_num() * (scale / m(r, c).get_den());
    }

    RrefResult result;
    mpz_class previous = 1;
    mpz_class tmp;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = r;
        while (pivot < rows && a[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(a[pivot], a[r]);
        const mpz_class p = a[r][c];
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r) continue;
            const mpz_class f = a[i][c];
            // Rows below the pivot are zero left of c.
            const std::size_t start = i > r ? c : 0;
            for (std::size_t j = start; j < cols; ++j) {
                tmp = p * a[i][j];
                if (f != 0 && a[r][j] != 0) tmp -= f * a[r][j];
                mpz_divexact(a[i][j].get_mpz_t(), tmp.get_mpz_t(), previous.get_mpz_t());
            }
        }
        previous = p;
        result.pivots.push_back(c);
        ++r;
    }
    result.rank = r;

    result.form = Matrix(rows, cols);
    for (std::size_t i = 0; i < r; ++i) {
        const mpz_class& p = a[i][result.pivots[i]];
        for (std::size_t j = 0; j < cols; ++j) {
            if (a[i][j] == 0) continue;
            Scalar v(a[i][j], p);
            v.canonicalize();
            result.form(i, j) = v;
        }
    }
    return result;
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

std::optional<Vector> solve(const Matrix& m, const Vector& b) {
    if (b.size() != m.rows()) throw DimensionMismatch("solve: right-hand side size mismatch");
    Matrix augmented(m.rows(), m.cols() + 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) augmented(r, c) = m(r, c);
        augmented(r, m.cols()) = b[r];
    }
    auto reduced = rref(augmented);
    Vector x(m.cols());
    for (std::size_t i = 0; i < reduced.rank; ++i) {
        if (reduced.pivots[i] == m.cols()) return std::nullopt;
        x[reduced.pivots[i]] = reduced.form(i, m.cols());
    }
    return x;
}

Matrix inverse(const Matrix& m) {
    const std::size_t n = m.rows();
    if (m.cols() != n) throw SingularMatrix("inverse of a non-square matrix");
    Matrix augmented(n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) augmented(r, c) = m(r, c);
        augmented(r, n + r) = 1;
    }
    auto reduced = rref(augmented);
    if (reduced.rank < n || reduced.pivots[n - 1] != n - 1)
        throw SingularMatrix("matrix is singular");
    Matrix inv(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) inv(r, c) = reduced.form(r, n + c);
    return inv;
}

// ---------------------------------------------------------------- SparseVector

SparseVector SparseVector::unit(std::size_t i, Scalar value) {
    SparseVector v;
    if (sgn(value) != 0) v.entries_.emplace_back(i, std::move(value));
    return v;
}

SparseVector SparseVector::from_dense(const Vector& dense) {
    SparseVector v;
    for (std::size_t i = 0; i < dense.size(); ++i)
        if (sgn(dense[i]) != 0) v.entries_.emplace_back(i, dense[i]);
    return v;
}

SparseVector SparseVector::from_terms(std::vector<Entry> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const Entry& x, const Entry& y) { return x.first < y.first; });
    SparseVector v;
    for (auto& term : terms) {
        if (!v.entries_.empty() && v.entries_.back().first == term.first) {
            v.entries_.back().second += term.second;
        } else {
            if (!v.entries_.empty() && sgn(v.entries_.back().second) == 0) v.entries_.pop_back();
            v.entries_.push_back(std::move(term));
        }
    }
    if (!v.entries_.empty() && sgn(v.entries_.back().second) == 0) v.entries_.pop_back();
    return v;
}

Vector SparseVector::to_dense(std::size_t n) const {
    Vector v(n);
    for (const auto& [i, x] : entries_) {
        if (i >= n) throw DimensionMismatch("sparse index out of range");
        v[i] = x;
    }
    return v;
}

Scalar SparseVector::coeff(std::size_t i) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), i,
                               [](const Entry& e, std::size_t k) { return e.first < k; });
    if (it != entries_.end() && it->first == i) return it->second;
    return 0;
}

void SparseVector::add_scaled(const SparseVector& other, const Scalar& factor) {
    if (sgn(factor) == 0 || other.empty()) return;
    std::vector<Entry> merged;
    merged.reserve(entries_.size() + other.entries_.size());
    auto a = entries_.begin();
    auto b = other.entries_.begin();
    while (a != entries_.end() || b != other.entries_.end()) {
        if (b == other.entries_.end() || (a != entries_.end() && a->first < b->first)) {
            merged.push_back(std::move(*a++));
        } else if (a == entries_.end() || b->first < a->first) {
            merged.emplace_back(b->first, factor * b->second);
            ++b;
        } else {
            Scalar value = a->second + factor * b->second;
            if (sgn(value) != 0) merged.emplace_back(a->first, std::move(value));
            ++a;
            ++b;
        }
    }
    entries_ = std::move(merged);
}

void SparseVector::scale(const Scalar& factor) {
    if (sgn(factor) == 0) {
        entries_.clear();
        return;
    }
    for (auto& e : entries_) e.second *= factor;
}

SparseVector SparseVector::operator-() const {
    SparseVector v = *this;
    for (auto& e : v.entries_) e.second = -e.second;
    return v;
}

// ---------------------------------------------------------------- EchelonBasis

EchelonBasis::EchelonBasis(std::size_t ambient_dim)
    : ambient_(ambient_dim), pivot_row_(ambient_dim, -1) {}

void EchelonBasis::head_reduce(SparseVector& v) const {
    while (!v.empty()) {
        long row = pivot_row_[v.leading()];
        if (row < 0) return;
        Scalar factor = -v.entries().front().second;
        v.add_scaled(rows_[static_cast<std::size_t>(row)], factor);
    }
}

bool EchelonBasis::insert(SparseVector v) {
    if (!v.empty() && v.entries().back().first >= ambient_)
        throw DimensionMismatch("vector exceeds ambient dimension");
    head_reduce(v);
    if (v.empty()) return false;
    Scalar lead = v.entries().front().second;
    if (lead != 1) v.scale(1 / lead);
    pivot_row_[v.leading()] = static_cast<long>(rows_.size());
    rows_.push_back(std::move(v));
    return true;
}

SparseVector EchelonBasis::reduce(SparseVector v) const {
    // Row entries sit at or right of their pivot, so entries left of `pos`
    // are never touched again.
    std::size_t pos = 0;
    while (pos < v.nonzeros()) {
        const auto& [col, value] = v.entries()[pos];
        if (col >= ambient_) throw DimensionMismatch("vector exceeds ambient dimension");
        long row = pivot_row_[col];
        if (row < 0) {
            ++pos;
            continue;
        }
        Scalar factor = -value;
        v.add_scaled(rows_[static_cast<std::size_t>(row)], factor);
    }
    return v;
}

std::vector<SparseVector> EchelonBasis::to_rows() const {
    std::vector<std::size_t> order(rows_.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t x, std::size_t y) { return rows_[x].leading() < rows_[y].leading(); });

    std::vector<SparseVector> reduced(rows_.size());
    std::vector<long> reduced_row(ambient_, -1);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        SparseVector v = rows_[*it];
        std::size_t pos = 1;
        while (pos < v.nonzeros()) {
            const auto& [col, value] = v.entries()[pos];
            long row = reduced_row[col];
            if (row < 0) {
                ++pos;
                continue;
            }
            Scalar factor = -value;
            v.add_scaled(reduced[static_cast<std::size_t>(row)], factor);
        }
        reduced_row[v.leading()] = static_cast<long>(*it);
        reduced[*it] = std::move(v);
    }

    std::vector<SparseVector> out;
    out.reserve(reduced.size());
    for (std::size_t i : order) out.push_back(std::move(reduced[i]));
    return out;
}

// ---------------------------------------------------------------- Subspace

Subspace::Subspace(std::size_t ambient, std::vector<SparseVector> rows)
    : ambient_(ambient), rows_(std::move(rows)) {
    pivots_.reserve(rows_.size());
    for (const auto& row : rows_) pivots_.push_back(row.leading());
}

Subspace Subspace::zero(std::size_t ambient_dim) { return Subspace(ambient_dim, {}); }

Subspace Subspace::full(std::size_t ambient_dim) {
    std::vector<std::size_t> axes(ambient_dim);
    for (std::size_t i = 0; i < ambient_dim; ++i) axes[i] = i;
    return coordinate(ambient_dim, axes);
}

Subspace Subspace::coordinate(std::size_t ambient_dim, const std::vector<std::size_t>& axes) {
    std::vector<std::size_t> sorted = axes;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<SparseVector> rows;
    for (std::size_t axis : sorted) {
        if (axis >= ambient_dim) throw DimensionMismatch("coordinate axis out of range");
        rows.push_back(SparseVector::unit(axis));
    }
    return Subspace(ambient_dim, std::move(rows));
}

Subspace Subspace::span(std::size_t ambient_dim, const std::vector<Vector>& vectors) {
    EchelonBasis basis(ambient_dim);
    for (const auto& v : vectors) {
        if (v.size() != ambient_dim) throw DimensionMismatch("span: vector length mismatch");
        basis.insert(SparseVector::from_dense(v));
    }
    return from_echelon(basis);
}

Subspace Subspace::span(std::size_t ambient_dim, const std::vector<SparseVector>& vectors) {
    EchelonBasis basis(ambient_dim);
    for (const auto& v : vectors) basis.insert(v);
    return from_echelon(basis);
}

Subspace Subspace::from_echelon(const EchelonBasis& basis) {
    return Subspace(basis.ambient_dim(), basis.to_rows());
}

std::vector<std::size_t> Subspace::nonpivot_columns() const {
    std::vector<std::size_t> out;
    std::size_t next = 0;
    for (std::size_t c = 0; c < ambient_; ++c) {
        if (next < pivots_.size() && pivots_[next] == c) {
            ++next;
            continue;
        }
        out.push_back(c);
    }
    return out;
}

Matrix Subspace::basis() const {
    Matrix m(rows_.size(), ambient_);
    for (std::size_t r = 0; r < rows_.size(); ++r)
        for (const auto& [c, x] : rows_[r].entries()) m(r, c) = x;
    return m;
}

std::vector<Vector> Subspace::basis_vectors() const {
    std::vector<Vector> out;
    out.reserve(rows_.size());
    for (const auto& row : rows_) out.push_back(row.to_dense(ambient_));
    return out;
}

SparseVector Subspace::reduce(SparseVector v) const {
    // RREF rows vanish at every other pivot column, so each pivot entry of the
    // original v is cleared by exactly one row.
    std::vector<SparseVector::Entry> terms;
    std::size_t next = 0;
    for (const auto& [col, value] : v.entries()) {
        if (col >= ambient_) throw DimensionMismatch("vector exceeds ambient dimension");
        while (next < pivots_.size() && pivots_[next] < col) ++next;
        if (next < pivots_.size() && pivots_[next] == col) {
            for (const auto& [c, x] : rows_[next].entries()) terms.emplace_back(c, -value * x);
        }
    }
    if (terms.empty()) return v;
    for (auto& e : v.entries()) terms.push_back(e);
    return SparseVector::from_terms(std::move(terms));
}

Vector Subspace::reduce(const Vector& v) const {
    if (v.size() != ambient_) throw DimensionMismatch("reduce: vector length mismatch");
    return reduce(SparseVector::from_dense(v)).to_dense(ambient_);
}

bool Subspace::contains(const Vector& v) const {
    if (v.size() != ambient_) throw DimensionMismatch("contains: vector length mismatch");
    return reduce(SparseVector::from_dense(v)).empty();
}

bool Subspace::contains(const SparseVector& v) const { return reduce(v).empty(); }

bool Subspace::contains(const Subspace& other) const {
    if (other.ambient_ != ambient_) throw DimensionMismatch("subspace ambient dimensions differ");
    if (other.dim() > dim()) return false;
    return std::all_of(other.rows_.begin(), other.rows_.end(),
                       [&](const SparseVector& row) { return contains(row); });
}

Subspace kernel_basis(const Matrix& m) {
    auto reduced = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t p : reduced.pivots) is_pivot[p] = true;
    std::vector<SparseVector> vectors;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        std::vector<SparseVector::Entry> terms;
        terms.emplace_back(f, Scalar(1));
        for (std::size_t i = 0; i < reduced.rank; ++i)
            if (sgn(reduced.form(i, f)) != 0) terms.emplace_back(reduced.pivots[i], -reduced.form(i, f));
        vectors.push_back(SparseVector::from_terms(std::move(terms)));
    }
    return Subspace::span(m.cols(), vectors);
}

Subspace image(const Matrix& m) {
    std::vector<SparseVector> columns;
    for (std::size_t c = 0; c < m.cols(); ++c) columns.push_back(SparseVector::from_dense(m.column(c)));
    return Subspace::span(m.rows(), columns);
}

Subspace intersect(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim()) throw DimensionMismatch("intersect: ambient dimensions differ");
    const std::size_t n = a.ambient_dim();
    // Zassenhaus: echelonize [a | a] over [b | 0]; rows with vanishing left
    // half carry a basis of the intersection in their right half.
    EchelonBasis basis(2 * n);
    auto doubled = [n](const SparseVector& row, bool copy) {
        std::vector<SparseVector::Entry> terms;
        for (const auto& [c, x] : row.entries()) {
            terms.emplace_back(c, x);
            if (copy) terms.emplace_back(c + n, x);
        }
        return SparseVector::from_terms(std::move(terms));
    };
    for (const auto& row : a.rows()) basis.insert(doubled(row, true));
    for (const auto& row : b.rows()) basis.insert(doubled(row, false));
    std::vector<SparseVector> right;
    for (const auto& row : basis.to_rows()) {
        if (row.leading() < n) continue;
        std::vector<SparseVector::Entry> terms;
        for (const auto& [c, x] : row.entries()) terms.emplace_back(c - n, x);
        right.push_back(SparseVector::from_terms(std::move(terms)));
    }
    return Subspace::span(n, right);
}

Subspace sum(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim()) throw DimensionMismatch("sum: ambient dimensions differ");
    std::vector<SparseVector> rows = a.rows();
    rows.insert(rows.end(), b.rows().begin(), b.rows().end());
    return Subspace::span(a.ambient_dim(), rows);
}

// ---------------------------------------------------------------- QuotientCoordinates

QuotientCoordinates::QuotientCoordinates(Subspace big, Subspace small)
    : big_(std::move(big)), small_(std::move(small)) {
    if (!big_.contains(small_)) throw DimensionMismatch("quotient: subspace not contained in the space");
    std::vector<SparseVector> reduced;
    for (const auto& row : big_.rows()) reduced.push_back(small_.reduce(row));
    complement_ = Subspace::span(big_.ambient_dim(), reduced);
}

Vector QuotientCoordinates::coords(const Vector& v) const {
    SparseVector r = small_.reduce(SparseVector::from_dense(v));
    if (!complement_.contains(r)) throw DimensionMismatch("quotient: vector outside the space");
    Vector out(complement_.dim());
    for (std::size_t k = 0; k < complement_.dim(); ++k) out[k] = r.coeff(complement_.pivots()[k]);
    return out;
}

} // namespace schurlab
