#include "schurlab/multiplier.hpp"

#include <map>

#include "schurlab/bounds.hpp"
#include "schurlab/errors.hpp"
#include "schurlab/log.hpp"

namespace schurlab {

namespace {

std::vector<SparseVector> evaluate_words(const FreeNilpotentAlgebra& free, const LieAlgebra& algebra,
                                         const std::vector<std::size_t>& generator_basis) {
    std::vector<SparseVector> images;
    images.reserve(free.dim());
    for (const auto& word : free.words()) {
        if (word.is_generator())
            images.push_back(SparseVector::unit(generator_basis[word.generator]));
        else
            images.push_back(algebra.bracket(images[word.left], images[word.right]));
    }
    return images;
}

// Kernel of the restriction of pi to the columns [first, end), embedded back.
Subspace restricted_kernel(const Matrix& pi, std::size_t first) {
    Matrix block(pi.rows(), pi.cols() - first);
    for (std::size_t r = 0; r < pi.rows(); ++r)
        for (std::size_t c = first; c < pi.cols(); ++c) block(r, c - first) = pi(r, c);
    std::vector<SparseVector> shifted;
    const Subspace kernel = kernel_basis(block);
    for (const auto& row : kernel.rows()) {
        std::vector<SparseVector::Entry> terms;
        for (const auto& [c, x] : row.entries()) terms.emplace_back(c + first, x);
        shifted.push_back(SparseVector::from_terms(std::move(terms)));
    }
    return Subspace::span(pi.cols(), shifted);
}

} // namespace

Presentation present_minimal(const LieAlgebra& algebra, std::size_t cap) {
    const std::size_t n = algebra.dim();
    if (n == 0) throw InputError("present_minimal needs a nonzero algebra");
    validate(algebra);
    const SeriesReport info = series(algebra);
    const std::size_t c = info.nilpotency_class;
    const std::vector<std::size_t> generator_basis = info.gamma[1].nonpivot_columns();
    const std::size_t d = generator_basis.size();

    log_debug("presenting " + algebra.name() + ": d=" + std::to_string(d) +
              ", free class " + std::to_string(c + 1));
    FreeNilpotentAlgebra free = free_nilpotent_algebra(d, c + 1, cap);
    const std::size_t big = free.dim();

    auto images = evaluate_words(free, algebra, generator_basis);
    Matrix pi(n, big);
    for (std::size_t w = 0; w < big; ++w)
        for (const auto& [k, x] : images[w].entries()) pi(k, w) = x;

    // rref([pi | I]) yields both ker pi and a preimage for every basis vector.
    Matrix augmented(n, big + n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t w = 0; w < big; ++w) augmented(r, w) = pi(r, w);
        augmented(r, big + r) = 1;
    }
    const RrefResult reduced = rref(augmented);
    if (reduced.rank != n || reduced.pivots.back() >= big)
        throw std::logic_error("free presentation map is not surjective");

    std::vector<SparseVector> lifts(n);
    for (std::size_t k = 0; k < n; ++k) {
        std::vector<SparseVector::Entry> terms;
        for (std::size_t i = 0; i < n; ++i)
            if (sgn(reduced.form(i, big + k)) != 0) terms.emplace_back(reduced.pivots[i], reduced.form(i, big + k));
        lifts[k] = SparseVector::from_terms(std::move(terms));
    }

    std::vector<bool> is_pivot(big, false);
    for (std::size_t p : reduced.pivots) is_pivot[p] = true;
    std::vector<SparseVector> kernel_vectors;
    kernel_vectors.reserve(big - n);
    for (std::size_t f = 0; f < big; ++f) {
        if (is_pivot[f]) continue;
        std::vector<SparseVector::Entry> terms;
        terms.emplace_back(f, Scalar(1));
        for (std::size_t i = 0; i < n; ++i)
            if (sgn(reduced.form(i, f)) != 0) terms.emplace_back(reduced.pivots[i], -reduced.form(i, f));
        kernel_vectors.push_back(SparseVector::from_terms(std::move(terms)));
    }
    Subspace relations = Subspace::span(big, kernel_vectors);

    std::vector<std::size_t> derived_axes;
    for (std::size_t w = d; w < big; ++w) derived_axes.push_back(w);
    Subspace free_derived = Subspace::coordinate(big, derived_axes);

    // [F, R] is spanned by [x_i, r] over generators x_i: [[a,b],r] = [a,[b,r]] - [b,[a,r]]
    // and R is an ideal. Rows of R pivoting in the top degree are central in F.
    const std::size_t top = free.degree_offset(c + 1);
    EchelonBasis commutator(big);
    for (const auto& r : relations.rows()) {
        if (r.leading() >= top) continue;
        for (std::size_t i = 0; i < d; ++i)
            commutator.insert(free.algebra().bracket(SparseVector::unit(i), r));
    }
    Subspace relations_commutator = Subspace::from_echelon(commutator);
    log_debug("  dim F=" + std::to_string(big) + ", dim R=" + std::to_string(relations.dim()) +
              ", dim [F,R]=" + std::to_string(relations_commutator.dim()));

    return Presentation{std::move(free),         generator_basis,
                        std::move(pi),           std::move(relations),
                        std::move(free_derived), std::move(relations_commutator),
                        std::move(lifts)};
}

std::size_t schur_multiplier_dim(const Presentation& p) {
    // dim(R cap F^2) = dim F^2 - dim pi(F^2) = (dim F - d) - m
    const std::size_t n = p.pi.rows();
    const std::size_t d = p.generator_basis.size();
    const std::size_t m = n - d;
    return (p.free.dim() - d - m) - p.relations_commutator.dim();
}

MultiplierWitness schur_multiplier(const LieAlgebra& algebra, std::size_t cap) {
    if (algebra.dim() == 0) return {0, Subspace::zero(0), Subspace::zero(0)};
    Presentation p = present_minimal(algebra, cap);
    MultiplierWitness witness;
    witness.relations_in_derived = restricted_kernel(p.pi, p.generator_basis.size());
    witness.relations_commutator = p.relations_commutator;
    witness.dim = witness.relations_in_derived.dim() - witness.relations_commutator.dim();
    return witness;
}

std::size_t schur_multiplier_dim(const LieAlgebra& algebra, std::size_t cap) {
    if (algebra.dim() == 0) return 0;
    return schur_multiplier_dim(present_minimal(algebra, cap));
}

std::size_t exterior_square_dim(const Presentation& p) {
    return p.free_derived.dim() - p.relations_commutator.dim();
}

std::size_t exterior_square_dim(const LieAlgebra& algebra, std::size_t cap) {
    if (algebra.dim() == 0) return 0;
    return exterior_square_dim(present_minimal(algebra, cap));
}

Subspace exterior_center(const Presentation& p) {
    const std::size_t n = p.pi.rows();
    const std::size_t d = p.generator_basis.size();
    const LieAlgebra& f = p.free.algebra();
    // z = sum_k z_k e_k lies in Z^ iff sum_k z_k [lift_k, x_i] is in [F,R] for
    // every generator x_i; generators suffice because [F,R] is an ideal.
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> row_of;
    std::vector<std::vector<std::pair<std::size_t, Scalar>>> entries;
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = 0; i < d; ++i) {
            SparseVector residue = p.relations_commutator.reduce(f.bracket(p.lifts[k], SparseVector::unit(i)));
            for (const auto& [w, x] : residue.entries()) {
                auto [it, fresh] = row_of.emplace(std::make_pair(i, w), entries.size());
                if (fresh) entries.emplace_back();
                entries[it->second].emplace_back(k, x);
            }
        }
    }
    Matrix conditions(entries.size(), n);
    for (std::size_t r = 0; r < entries.size(); ++r)
        for (const auto& [k, x] : entries[r]) conditions(r, k) = x;
    return kernel_basis(conditions);
}

Subspace exterior_center(const LieAlgebra& algebra, std::size_t cap) {
    if (algebra.dim() == 0) return Subspace::zero(0);
    return exterior_center(present_minimal(algebra, cap));
}

bool is_capable(const LieAlgebra& algebra, std::size_t cap) {
    return exterior_center(algebra, cap).is_zero();
}

GaneaReport ganea_dimension_check(const LieAlgebra& algebra, const Subspace& line, std::size_t cap) {
    if (line.ambient_dim() != algebra.dim()) throw DimensionMismatch("ganea: ideal lives in another space");
    if (line.dim() != 1) throw NotOneDimensional("ganea check needs a 1-dimensional ideal");
    if (!is_central(algebra, line)) throw NotCentral("ganea check needs a central ideal");

    Presentation p = present_minimal(algebra, cap);
    const Subspace derived = derived_subalgebra(algebra);
    const Quotient quotient = quotient_by_ideal(algebra, line);

    GaneaReport report;
    report.lhs = schur_multiplier_dim(quotient.algebra, cap);
    report.rhs = schur_multiplier_dim(p) + intersect(line, derived).dim();
    report.equal = report.lhs == report.rhs;
    report.n_in_exterior_center = exterior_center(p).contains(line);
    report.consistent = report.equal == report.n_in_exterior_center;
    return report;
}

MultiplierReport multiplier_report(const LieAlgebra& algebra, std::size_t cap) {
    MultiplierReport report;
    const SeriesReport info = series(algebra);
    report.n = info.n;
    report.m = info.derived_dim;
    report.c = info.nilpotency_class;
    report.d = info.min_generators;
    if (algebra.dim() == 0) {
        report.exterior_center = Subspace::zero(0);
        report.capable = true;
        return report;
    }
    Presentation p = present_minimal(algebra, cap);
    report.dim_M = schur_multiplier_dim(p);
    report.dim_exterior_square = exterior_square_dim(p);
    report.exterior_center = exterior_center(p);
    report.capable = report.exterior_center.is_zero();
    if (report.m >= 1) {
        report.bound_e1 = bound_e1(report.n, report.m);
        report.bound_e2 = bound_e2(report.n, report.m, report.c);
        report.attains_e2 = static_cast<long long>(report.dim_M) == *report.bound_e2;
    }
    return report;
}

} // namespace schurlab
