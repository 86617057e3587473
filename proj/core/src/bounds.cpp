#include "schurlab/bounds.hpp"

#include <algorithm>
#include <functional>

#include "schurlab/errors.hpp"
#include "schurlab/multiplier.hpp"

namespace schurlab {

BoundInputs BoundInputs::make(std::size_t n, std::size_t m, std::size_t c) {
    if (m < 1) throw InvalidBoundInputs("bounds need dim L^2 >= 1");
    if (n < m + 2) throw InvalidBoundInputs("bounds need n >= m + 2");
    if (c < 2 || c > n - 1) throw InvalidBoundInputs("bounds need 2 <= c <= n - 1");
    return {n, m, c};
}

long long bound_e1(std::size_t n, std::size_t m) {
    if (m < 1 || n < m + 2) throw InvalidBoundInputs("bound_e1 needs m >= 1 and n >= m + 2");
    const long long nn = static_cast<long long>(n), mm = static_cast<long long>(m);
    return (nn + mm - 2) * (nn - mm - 1) / 2 + 1;
}

long long bound_e2(std::size_t n, std::size_t m, std::size_t c) {
    const BoundInputs in = BoundInputs::make(n, m, c);
    const long long d = static_cast<long long>(in.n - in.m);
    long long value = (d - 1) * static_cast<long long>(in.n + in.m) / 2;
    const long long top = std::min<long long>(d, static_cast<long long>(in.c));
    for (long long i = 2; i <= top; ++i) value -= d - i;
    return value;
}

bool attains_e2(const LieAlgebra& algebra) {
    const SeriesReport info = series(algebra);
    if (info.derived_dim == 0) return false;
    return static_cast<long long>(schur_multiplier_dim(algebra)) ==
           bound_e2(info.n, info.derived_dim, info.nilpotency_class);
}

// ---------------------------------------------------------------- gamma maps

namespace {

struct GammaSpaces {
    SeriesReport info;
    Subspace l2, l3;
    std::size_t d = 0;
    std::vector<Vector> mod_center_reps; // basis of (L/Z)^ab, as vectors of L
};

GammaSpaces gamma_spaces(const LieAlgebra& algebra) {
    GammaSpaces s;
    s.info = series(algebra);
    const std::size_t n = algebra.dim();
    s.l2 = s.info.gamma.size() > 1 ? s.info.gamma[1] : Subspace::zero(n);
    s.l3 = s.info.gamma.size() > 2 ? s.info.gamma[2] : Subspace::zero(n);
    s.d = s.info.min_generators;
    s.mod_center_reps = QuotientCoordinates(Subspace::full(n), sum(s.l2, s.info.center)).representatives();
    return s;
}

// Rank of the matrix whose columns are f(t) over all k-tuples t of indices
// into `count` domain representatives.
std::size_t tuple_map_rank(std::size_t count, std::size_t arity, std::size_t target_dim,
                           const std::function<Vector(const std::vector<std::size_t>&)>& f) {
    if (count == 0 || target_dim == 0) return 0;
    EchelonBasis image(target_dim);
    std::vector<std::size_t> tuple(arity, 0);
    while (true) {
        image.insert(SparseVector::from_dense(f(tuple)));
        std::size_t pos = arity;
        while (pos > 0 && ++tuple[pos - 1] == count) tuple[--pos] = 0;
        if (pos == 0) break;
    }
    return image.rank();
}

// Accumulates coords(u) (x) unit(slot) into a tensor vector with `width` columns.
void add_tensor(Vector& out, const Vector& left, std::size_t slot, std::size_t width, const Scalar& sign) {
    for (std::size_t a = 0; a < left.size(); ++a)
        if (sgn(left[a]) != 0) out[a * width + slot] += sign * left[a];
}

// (x, y, z) -> [x,y] (x) z + [z,x] (x) y + [y,z] (x) x in L^2/L^3 (x) span(reps).
std::size_t ternary_image(const LieAlgebra& algebra, const GammaSpaces& s, const std::vector<Vector>& reps) {
    const QuotientCoordinates l2_mod_l3(s.l2, s.l3);
    const std::size_t width = reps.size();
    const std::size_t target = l2_mod_l3.dim() * width;
    return tuple_map_rank(width, 3, target, [&](const std::vector<std::size_t>& t) {
        Vector out(target);
        const Vector& x = reps[t[0]];
        const Vector& y = reps[t[1]];
        const Vector& z = reps[t[2]];
        add_tensor(out, l2_mod_l3.coords(algebra.bracket(x, y)), t[2], width, 1);
        add_tensor(out, l2_mod_l3.coords(algebra.bracket(z, x)), t[1], width, 1);
        add_tensor(out, l2_mod_l3.coords(algebra.bracket(y, z)), t[0], width, 1);
        return out;
    });
}

} // namespace

std::size_t gamma_l_image_dim(const LieAlgebra& algebra) {
    const GammaSpaces s = gamma_spaces(algebra);
    const auto ab_reps = QuotientCoordinates(Subspace::full(algebra.dim()), s.l2).representatives();
    return ternary_image(algebra, s, ab_reps);
}

std::size_t gamma2_prime_image_dim(const LieAlgebra& algebra) {
    const GammaSpaces s = gamma_spaces(algebra);
    return ternary_image(algebra, s, s.mod_center_reps);
}

std::size_t gamma3_prime_image_dim(const LieAlgebra& algebra) {
    const GammaSpaces s = gamma_spaces(algebra);
    if (s.info.nilpotency_class < 3) throw ClassTooSmall("gamma'_3 needs nilpotency class >= 3");
    const QuotientCoordinates l3_coords(s.l3, Subspace::zero(algebra.dim()));
    const auto& reps = s.mod_center_reps;
    const std::size_t width = reps.size();
    const std::size_t target = l3_coords.dim() * width;
    // (x,y,z,w) -> [[x,y],z] (x) w + [w,[x,y]] (x) z + [[z,w],x] (x) y + [y,[z,w]] (x) x
    return tuple_map_rank(width, 4, target, [&](const std::vector<std::size_t>& t) {
        Vector out(target);
        const Vector& x = reps[t[0]];
        const Vector& y = reps[t[1]];
        const Vector& z = reps[t[2]];
        const Vector& w = reps[t[3]];
        const Vector xy = algebra.bracket(x, y);
        const Vector zw = algebra.bracket(z, w);
        add_tensor(out, l3_coords.coords(algebra.bracket(xy, z)), t[3], width, 1);
        add_tensor(out, l3_coords.coords(algebra.bracket(w, xy)), t[2], width, 1);
        add_tensor(out, l3_coords.coords(algebra.bracket(zw, x)), t[1], width, 1);
        add_tensor(out, l3_coords.coords(algebra.bracket(y, zw)), t[0], width, 1);
        return out;
    });
}

GammaImages gamma_images(const LieAlgebra& algebra) {
    GammaImages images;
    images.gamma_l = gamma_l_image_dim(algebra);
    images.gamma2_prime = gamma2_prime_image_dim(algebra);
    if (series(algebra).nilpotency_class >= 3) images.gamma3_prime = gamma3_prime_image_dim(algebra);
    return images;
}

// ---------------------------------------------------------------- statement checks

namespace {

long long as_ll(std::size_t x) { return static_cast<long long>(x); }

TheoremReport make_report(std::string id, std::string statement, const LieAlgebra& algebra,
                          long long lhs, long long rhs) {
    TheoremReport r;
    r.id = std::move(id);
    r.statement = std::move(statement);
    r.algebra = algebra.name();
    r.lhs = lhs;
    r.rhs = rhs;
    r.relation = "<=";
    r.holds = lhs <= rhs;
    r.equality = lhs == rhs;
    return r;
}

void require_non_abelian(const SeriesReport& info) {
    if (info.derived_dim == 0) throw InputError("statement needs a non-abelian algebra");
}

} // namespace

TheoremReport check_central_ideal_inequality(const LieAlgebra& algebra, const Subspace& ideal) {
    if (ideal.ambient_dim() != algebra.dim()) throw DimensionMismatch("ideal lives in another space");
    if (!is_central(algebra, ideal)) throw NotCentral("ideal is not central");
    const std::size_t n = algebra.dim();
    const std::size_t k = ideal.dim();
    const Subspace l2 = derived_subalgebra(algebra);

    const std::size_t dim_m = schur_multiplier_dim(algebra);
    const std::size_t meet = intersect(l2, ideal).dim();
    const std::size_t dim_m_quotient = schur_multiplier_dim(quotient_by_ideal(algebra, ideal).algebra);
    const std::size_t dim_m_ideal = k * (k - (k > 0 ? 1 : 0)) / 2;
    const std::size_t quotient_ab = n - sum(l2, ideal).dim();
    const std::size_t tensor = quotient_ab * k;

    auto r = make_report("2.1", "dim M(L) + dim(L^2 cap K) <= dim M(L/K) + dim M(K) + dim((L/K)^ab (x) K)",
                         algebra, as_ll(dim_m + meet), as_ll(dim_m_quotient + dim_m_ideal + tensor));
    r.witnesses = {{"dim_K", as_ll(k)},
                   {"dim_M", as_ll(dim_m)},
                   {"dim_L2_cap_K", as_ll(meet)},
                   {"dim_M_quotient", as_ll(dim_m_quotient)},
                   {"dim_M_K", as_ll(dim_m_ideal)},
                   {"dim_tensor", as_ll(tensor)}};
    return r;
}

TheoremReport check_corank_two_bound(const LieAlgebra& algebra) {
    const SeriesReport info = series(algebra);
    if (info.n < 4 || info.derived_dim + 2 != info.n)
        throw InputError("statement needs dim L^2 = n - 2 and n >= 4");
    const std::size_t dim_m = schur_multiplier_dim(algebra);
    auto r = make_report("2.2", "dim M(L) <= dim L^2 when dim L^2 = n - 2, n >= 4", algebra,
                         as_ll(dim_m), as_ll(info.derived_dim));
    r.witnesses = {{"n", as_ll(info.n)}, {"m", as_ll(info.derived_dim)}};
    return r;
}

TheoremReport check_exterior_square_inequality(const LieAlgebra& algebra) {
    const SeriesReport info = series(algebra);
    require_non_abelian(info);
    const std::size_t wedge = exterior_square_dim(algebra);
    const std::size_t image = gamma2_prime_image_dim(algebra);
    const std::size_t d = info.min_generators;
    const std::size_t mod_center_ab = info.n - sum(info.gamma[1], info.center).dim();
    std::size_t graded = 0;
    for (std::size_t i = 1; i + 1 < info.gamma_dims.size(); ++i)
        graded += (info.gamma_dims[i] - info.gamma_dims[i + 1]) * mod_center_ab;

    auto r = make_report("2.5",
                         "dim L^L + dim Im gamma'_2 <= dim(L^ab ^ L^ab) + sum_i dim(L^i/L^{i+1} (x) (L/Z)^ab)",
                         algebra, as_ll(wedge + image), as_ll(d * (d - 1) / 2 + graded));
    r.witnesses = {{"dim_exterior_square", as_ll(wedge)},
                   {"dim_im_gamma2_prime", as_ll(image)},
                   {"dim_L_mod_Z_ab", as_ll(mod_center_ab)},
                   {"graded_sum", as_ll(graded)}};
    return r;
}

TheoremReport check_class_three_inequality(const LieAlgebra& algebra) {
    const SeriesReport info = series(algebra);
    if (info.nilpotency_class != 3) throw InputError("statement needs nilpotency class exactly 3");
    const std::size_t wedge = exterior_square_dim(algebra);
    const std::size_t image2 = gamma2_prime_image_dim(algebra);
    const std::size_t image3 = gamma3_prime_image_dim(algebra);
    const std::size_t d = info.min_generators;
    const std::size_t l2_mod_l3 = info.gamma_dims[1] - info.gamma_dims[2];
    const std::size_t l3 = info.gamma_dims[2];

    auto r = make_report("2.6",
                         "dim L^L + dim Im gamma'_2 + dim Im gamma'_3 <= dim(L^ab ^ L^ab) + "
                         "dim(L^2/L^3 (x) L^ab) + dim(L^3 (x) L^ab)",
                         algebra, as_ll(wedge + image2 + image3),
                         as_ll(d * (d - 1) / 2 + l2_mod_l3 * d + l3 * d));
    r.witnesses = {{"dim_exterior_square", as_ll(wedge)},
                   {"dim_im_gamma2_prime", as_ll(image2)},
                   {"dim_im_gamma3_prime", as_ll(image3)}};
    return r;
}

TheoremReport check_refined_bound(const LieAlgebra& algebra) {
    const SeriesReport info = series(algebra);
    if (info.nilpotency_class < 3) throw InputError("statement needs nilpotency class >= 3");
    const std::size_t dim_m = schur_multiplier_dim(algebra);
    const long long bound = bound_e2(info.n, info.derived_dim, info.nilpotency_class);
    auto r = make_report("3.7", "dim M(L) <= bound_e2(n,m,c) - 1 for class c >= 3", algebra,
                         as_ll(dim_m), bound - 1);
    r.witnesses = {{"n", as_ll(info.n)},
                   {"m", as_ll(info.derived_dim)},
                   {"c", as_ll(info.nilpotency_class)},
                   {"bound_e2", bound}};
    return r;
}

ScanReport scan_no_extremal_dim3_derived(const std::vector<NamedAlgebra>& algebras) {
    ScanReport scan;
    scan.id = "2.9";
    for (const auto& entry : algebras) {
        const SeriesReport info = series(entry.algebra);
        if (info.derived_dim != 3) continue;
        const long long n = as_ll(info.n);
        const long long forbidden = (n - 1) * (n - 2) / 2 - 2;
        const long long dim_m = as_ll(schur_multiplier_dim(entry.algebra));
        TheoremReport r;
        r.id = "2.9";
        r.statement = "no algebra with dim L^2 = 3 and dim M(L) = (1/2)(n-1)(n-2) - 2";
        r.algebra = entry.name;
        r.lhs = dim_m;
        r.rhs = forbidden;
        r.relation = "!=";
        r.holds = dim_m != forbidden;
        r.equality = dim_m == forbidden;
        r.witnesses = {{"n", n}, {"c", as_ll(info.nilpotency_class)}};
        if (info.nilpotency_class >= 3) {
            scan.holds = scan.holds && r.holds;
            scan.instances.push_back(std::move(r));
        } else {
            r.note = r.holds ? "class 2, outside the checked range"
                             : "class 2 algebra meets the value; outside the checked range";
            scan.informational.push_back(std::move(r));
        }
    }
    return scan;
}

} // namespace schurlab
