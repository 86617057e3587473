#pragma once

// Upper bounds for dim M(L) and executable checks of the inequalities that
// relate M(L), L ^ L and the maps gamma_L, gamma'_2, gamma'_3 on finite
// instances. Checks report; they never prove anything beyond the instance.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "schurlab/lie_algebra.hpp"

namespace schurlab {

/// Validated (n, m, c) for a non-abelian nilpotent algebra:
/// m >= 1, n >= m + 2, 2 <= c <= n - 1.
struct BoundInputs {
    std::size_t n = 0;
    std::size_t m = 0;
    std::size_t c = 2;

    /// Throws InvalidBoundInputs.
    static BoundInputs make(std::size_t n, std::size_t m, std::size_t c);
};

/// (1/2)(n+m-2)(n-m-1) + 1
long long bound_e1(std::size_t n, std::size_t m);
/// (1/2)(n-m-1)(n+m) - sum_{i=2}^{min(n-m, c)} (n-m-i); an empty sum is 0.
long long bound_e2(std::size_t n, std::size_t m, std::size_t c);

/// dim M(L) == bound_e2(n, m, c). False for abelian algebras, which have no bound.
bool attains_e2(const LieAlgebra& algebra);

struct TheoremReport {
    std::string id;         // "2.1", "2.2", "2.5", "2.6", "2.9", "3.7"
    std::string statement;
    std::string algebra;
    long long lhs = 0;
    long long rhs = 0;
    std::string relation;   // "<=" or "!="
    bool holds = false;
    bool equality = false;  // lhs == rhs
    std::vector<std::pair<std::string, long long>> witnesses;
    std::string note;
};

struct GammaImages {
    std::size_t gamma_l = 0;
    std::size_t gamma2_prime = 0;
    std::optional<std::size_t> gamma3_prime; // class >= 3 only
};

std::size_t gamma_l_image_dim(const LieAlgebra& algebra);
std::size_t gamma2_prime_image_dim(const LieAlgebra& algebra);
/// Throws ClassTooSmall below class 3.
std::size_t gamma3_prime_image_dim(const LieAlgebra& algebra);
GammaImages gamma_images(const LieAlgebra& algebra);

/// dim M(L) + dim(L^2 cap K) <= dim M(L/K) + dim M(K) + dim((L/K)^ab (x) K) for central K.
TheoremReport check_central_ideal_inequality(const LieAlgebra& algebra, const Subspace& ideal);
/// dim M(L) <= dim L^2 when dim L^2 = n - 2 and n >= 4; throws InputError otherwise.
TheoremReport check_corank_two_bound(const LieAlgebra& algebra);
/// dim L^L + dim Im gamma'_2 <= dim(L^ab ^ L^ab) + sum_{i=2}^c dim(L^i/L^{i+1} (x) (L/Z)^ab).
TheoremReport check_exterior_square_inequality(const LieAlgebra& algebra);
/// Class exactly 3: dim L^L + dim Im gamma'_2 + dim Im gamma'_3
///   <= dim(L^ab ^ L^ab) + dim(L^2/L^3 (x) L^ab) + dim(L^3 (x) L^ab).
TheoremReport check_class_three_inequality(const LieAlgebra& algebra);
/// Class >= 3: dim M(L) <= bound_e2 - 1.
TheoremReport check_refined_bound(const LieAlgebra& algebra);

struct NamedAlgebra {
    std::string name;
    LieAlgebra algebra;
};

struct ScanReport {
    std::string id;
    std::vector<TheoremReport> instances;     // entries the statement is checked on
    std::vector<TheoremReport> informational; // reported, not judged
    bool holds = true;
};

/// No algebra with dim L^2 = 3 and dim M(L) = (1/2)(n-1)(n-2) - 2, checked on
/// class >= 3 entries; class-2 entries with dim L^2 = 3 are listed separately.
ScanReport scan_no_extremal_dim3_derived(const std::vector<NamedAlgebra>& algebras);

struct SweepRow {
    std::string name;
    std::size_t n = 0, m = 0, c = 0;
    std::size_t dim_M = 0;
    std::optional<long long> bound_e2;
    bool attains_e2 = false;
};

struct SweepReport {
    std::size_t max_dim = 0;
    std::vector<SweepRow> rows;
    std::vector<std::string> attainers;
    std::vector<std::string> expected_attainers;
    std::vector<std::string> refined_bound_equality; // class >= 3 with dim M == bound_e2 - 1
    std::vector<std::string> failures;               // human-readable assertion failures
    bool attainers_match = false;
    bool refined_bound_holds = false;    // class >= 3 => dim M <= bound_e2 - 1
    bool corank_two_never_attains = false; // among n >= 4
    bool ok() const { return failures.empty(); }
};

/// Evaluates every catalog entry of dimension <= max_dim (max_dim <= 8).
SweepReport classification_sweep(std::size_t max_dim, bool parallel = false);

} // namespace schurlab
