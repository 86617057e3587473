#include "schurlab/lie_algebra.hpp"

#include "schurlab/errors.hpp"

namespace schurlab {

LieAlgebra::LieAlgebra(std::size_t dim, std::string name)
    : dim_(dim), name_(std::move(name)), table_(dim * (dim > 0 ? dim - 1 : 0) / 2) {}

LieAlgebra LieAlgebra::from_rules(std::size_t dim, const std::vector<BracketRule>& rules,
                                  std::string name) {
    LieAlgebra algebra(dim, std::move(name));
    for (const auto& rule : rules) {
        if (rule.i >= dim || rule.j >= dim) throw DimensionMismatch("bracket index out of range");
        if (rule.i == rule.j) {
            if (!rule.rhs.empty()) throw InputError("[x,x] must vanish");
            continue;
        }
        if (rule.i < rule.j)
            algebra.set_structure(rule.i, rule.j, rule.rhs);
        else
            algebra.set_structure(rule.j, rule.i, -rule.rhs);
    }
    return algebra;
}

SparseVector LieAlgebra::basis_bracket(std::size_t i, std::size_t j) const {
    if (i == j) return {};
    if (i < j) return table_[index(i, j)];
    return -table_[index(j, i)];
}

const SparseVector& LieAlgebra::structure(std::size_t i, std::size_t j) const {
    if (i >= j || j >= dim_) throw DimensionMismatch("structure() needs i < j < dim");
    return table_[index(i, j)];
}

void LieAlgebra::set_structure(std::size_t i, std::size_t j, SparseVector rhs) {
    if (i >= j || j >= dim_) throw DimensionMismatch("set_structure() needs i < j < dim");
    if (!rhs.empty() && rhs.entries().back().first >= dim_)
        throw DimensionMismatch("bracket value outside the algebra");
    table_[index(i, j)] = std::move(rhs);
}

SparseVector LieAlgebra::bracket(const SparseVector& u, const SparseVector& v) const {
    std::vector<SparseVector::Entry> terms;
    for (const auto& [i, a] : u.entries()) {
        for (const auto& [j, b] : v.entries()) {
            if (i == j) continue;
            const SparseVector& rhs = i < j ? table_[index(i, j)] : table_[index(j, i)];
            if (rhs.empty()) continue;
            Scalar factor = a * b;
            if (i > j) factor = -factor;
            for (const auto& [k, c] : rhs.entries()) terms.emplace_back(k, factor * c);
        }
    }
    return SparseVector::from_terms(std::move(terms));
}

Vector LieAlgebra::bracket(const Vector& u, const Vector& v) const {
    if (u.size() != dim_ || v.size() != dim_) throw DimensionMismatch("bracket: element length mismatch");
    return bracket(SparseVector::from_dense(u), SparseVector::from_dense(v)).to_dense(dim_);
}

bool LieAlgebra::is_abelian() const {
    for (const auto& rhs : table_)
        if (!rhs.empty()) return false;
    return true;
}

std::vector<BracketRule> LieAlgebra::rules() const {
    std::vector<BracketRule> out;
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = i + 1; j < dim_; ++j)
            if (!table_[index(i, j)].empty()) out.push_back({i, j, table_[index(i, j)]});
    return out;
}

// ----------------------------------------------------------------

std::vector<JacobiFailure> find_jacobi_failures(const LieAlgebra& algebra, bool first_only) {
    const std::size_t n = algebra.dim();
    std::vector<JacobiFailure> failures;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const SparseVector xij = algebra.basis_bracket(i, j);
            for (std::size_t k = j + 1; k < n; ++k) {
                SparseVector x_k = SparseVector::unit(k);
                SparseVector x_i = SparseVector::unit(i);
                SparseVector x_j = SparseVector::unit(j);
                SparseVector total = algebra.bracket(xij, x_k);
                total.add_scaled(algebra.bracket(algebra.basis_bracket(j, k), x_i), 1);
                total.add_scaled(algebra.bracket(algebra.basis_bracket(k, i), x_j), 1);
                if (!total.empty()) {
                    failures.push_back({i, j, k, total.to_dense(n)});
                    if (first_only) return failures;
                }
            }
        }
    return failures;
}

std::optional<JacobiFailure> find_jacobi_failure(const LieAlgebra& algebra) {
    auto failures = find_jacobi_failures(algebra, true);
    if (failures.empty()) return std::nullopt;
    return failures.front();
}

void validate(const LieAlgebra& algebra) {
    if (auto failure = find_jacobi_failure(algebra))
        throw JacobiViolation(failure->i, failure->j, failure->k, to_string(failure->residual));
}

Vector bracket(const LieAlgebra& algebra, const Element& u, const Element& v) {
    return algebra.bracket(u, v);
}

Subspace bracket_subspaces(const LieAlgebra& algebra, const Subspace& s, const Subspace& t) {
    if (s.ambient_dim() != algebra.dim() || t.ambient_dim() != algebra.dim())
        throw DimensionMismatch("bracket_subspaces: ambient dimension differs from the algebra");
    EchelonBasis products(algebra.dim());
    for (const auto& a : s.rows())
        for (const auto& b : t.rows()) products.insert(algebra.bracket(a, b));
    return Subspace::from_echelon(products);
}

Subspace derived_subalgebra(const LieAlgebra& algebra) {
    auto all = Subspace::full(algebra.dim());
    return bracket_subspaces(algebra, all, all);
}

Subspace center(const LieAlgebra& algebra) {
    const std::size_t n = algebra.dim();
    // Row (j, k): coefficient of x_k in [z, x_j] as a linear form in z.
    Matrix ad(n * n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const SparseVector value = algebra.basis_bracket(i, j);
            for (const auto& [k, c] : value.entries()) ad(j * n + k, i) = c;
        }
    return kernel_basis(ad);
}

bool is_ideal(const LieAlgebra& algebra, const Subspace& s) {
    return s.contains(bracket_subspaces(algebra, Subspace::full(algebra.dim()), s));
}

bool is_central(const LieAlgebra& algebra, const Subspace& s) {
    return bracket_subspaces(algebra, Subspace::full(algebra.dim()), s).is_zero();
}

SeriesReport series(const LieAlgebra& algebra) {
    const std::size_t n = algebra.dim();
    SeriesReport report;
    report.n = n;
    const Subspace all = Subspace::full(n);
    Subspace current = all;
    report.gamma.push_back(current);
    report.gamma_dims.push_back(current.dim());
    while (!current.is_zero()) {
        Subspace next = bracket_subspaces(algebra, all, current);
        if (next.dim() == current.dim())
            throw NotNilpotent("lower central series stabilizes at dimension " +
                               std::to_string(next.dim()));
        current = std::move(next);
        report.gamma.push_back(current);
        report.gamma_dims.push_back(current.dim());
    }
    report.nilpotency_class = report.gamma_dims.size() - 1;
    report.derived_dim = report.gamma_dims.size() > 1 ? report.gamma_dims[1] : 0;
    report.min_generators = n - report.derived_dim;
    report.center = center(algebra);
    report.center_dim = report.center.dim();
    const Subspace derived = report.gamma.size() > 1 ? report.gamma[1] : Subspace::zero(n);
    report.central_complement_dim = report.center_dim - intersect(report.center, derived).dim();
    return report;
}

Quotient quotient_by_ideal(const LieAlgebra& algebra, const Subspace& ideal) {
    const std::size_t n = algebra.dim();
    if (ideal.ambient_dim() != n) throw DimensionMismatch("quotient: ideal lives in another space");
    if (!is_ideal(algebra, ideal)) throw NotAnIdeal("subspace is not an ideal");

    Quotient q;
    q.complement = ideal.nonpivot_columns();
    const std::size_t k = q.complement.size();
    std::vector<long> position(n, -1);
    for (std::size_t b = 0; b < k; ++b) position[q.complement[b]] = static_cast<long>(b);

    auto project = [&](const SparseVector& v) {
        std::vector<SparseVector::Entry> terms;
        const SparseVector rest = ideal.reduce(v);
        for (const auto& [c, x] : rest.entries())
            terms.emplace_back(static_cast<std::size_t>(position[c]), x);
        return SparseVector::from_terms(std::move(terms));
    };

    q.projection = Matrix(k, n);
    for (std::size_t a = 0; a < n; ++a) {
        const SparseVector image = project(SparseVector::unit(a));
        for (const auto& [b, x] : image.entries()) q.projection(b, a) = x;
    }
    q.section = Matrix(n, k);
    for (std::size_t b = 0; b < k; ++b) q.section(q.complement[b], b) = 1;

    q.algebra = LieAlgebra(k, algebra.name().empty() ? std::string{} : algebra.name() + "/I");
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = a + 1; b < k; ++b)
            q.algebra.set_structure(a, b, project(algebra.basis_bracket(q.complement[a], q.complement[b])));
    return q;
}

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b) {
    const std::size_t offset = a.dim();
    std::string name;
    if (!a.name().empty() && !b.name().empty()) name = a.name() + "+" + b.name();
    LieAlgebra out(a.dim() + b.dim(), std::move(name));
    for (const auto& rule : a.rules()) out.set_structure(rule.i, rule.j, rule.rhs);
    for (const auto& rule : b.rules()) {
        std::vector<SparseVector::Entry> terms;
        for (const auto& [k, c] : rule.rhs.entries()) terms.emplace_back(k + offset, c);
        out.set_structure(rule.i + offset, rule.j + offset, SparseVector::from_terms(std::move(terms)));
    }
    return out;
}

LieAlgebra change_basis(const LieAlgebra& algebra, const Matrix& p) {
    const std::size_t n = algebra.dim();
    if (p.rows() != n || p.cols() != n) throw SingularMatrix("basis change must be n x n");
    const Matrix p_inv = inverse(p);
    std::vector<SparseVector> columns;
    for (std::size_t a = 0; a < n; ++a) columns.push_back(SparseVector::from_dense(p.column(a)));
    LieAlgebra out(n, algebra.name());
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b) {
            Vector old = algebra.bracket(columns[a], columns[b]).to_dense(n);
            out.set_structure(a, b, SparseVector::from_dense(p_inv.apply(old)));
        }
    return out;
}

} // namespace schurlab
