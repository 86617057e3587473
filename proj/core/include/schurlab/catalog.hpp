#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "schurlab/lie_algebra.hpp"

namespace schurlab {

struct AssertedInvariants {
    std::size_t n = 0, m = 0, c = 0;
    friend bool operator==(const AssertedInvariants&, const AssertedInvariants&) = default;
};

struct CatalogEntry {
    std::string name;      // canonical, e.g. "H1+A2" or "L6_22(1/2)"
    std::string base;      // base family, e.g. "H1" or "L6_22"
    std::map<std::string, Scalar> parameters;
    std::size_t abelian_summand = 0;
    AssertedInvariants asserted;
    LieAlgebra algebra;
};

/// H(m): [x_{2i-1}, x_{2i}] = x_{2m+1}.
LieAlgebra heisenberg(std::size_t m);
/// A(n): all brackets zero.
LieAlgebra abelian(std::size_t n);

/// Names: A<n>, H<m>, L4_3, L5_5, L5_7, L5_8, L5_9, L6_22, L6_26 (also A(n), H(m),
/// L4,3 spellings), joined by '+' for direct sums; L6_22 takes eps either from
/// `parameters` or inline as L6_22(1/2) / L6_22(eps=1/2).
/// Throws UnknownName, MissingParameter, InvariantMismatch.
CatalogEntry catalog_entry(const std::string& name, const std::map<std::string, Scalar>& parameters = {});
LieAlgebra catalog_get(const std::string& name, const std::map<std::string, Scalar>& parameters = {});

/// Base entries named in the data file, in file order.
std::vector<std::string> catalog_base_names();
/// Sample values for a parameterized base family (empty for fixed entries).
std::vector<Scalar> catalog_parameter_samples(const std::string& base);
/// The embedded catalog data file (JSON).
const std::string& catalog_json();

struct EnumerateOptions {
    /// Overrides the data file's samples for eps when non-empty.
    std::vector<Scalar> epsilon_samples;
};

/// All entries of dimension <= max_dim: A(1..max_dim), H(m), the data-file
/// entries (parameter families sampled), each non-abelian entry also
/// extended by A(k). Deterministic order. Throws InputError for max_dim > 8.
std::vector<CatalogEntry> enumerate(std::size_t max_dim, const EnumerateOptions& options = {});

} // namespace schurlab
