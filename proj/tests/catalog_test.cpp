#include <algorithm>

#include <gtest/gtest.h>
#include <json.hpp>

#include "schurlab/catalog.hpp"
#include "schurlab/errors.hpp"
#include "schurlab/multiplier.hpp"

using namespace schurlab;

namespace {

std::vector<std::string> names(const std::vector<CatalogEntry>& entries) {
    std::vector<std::string> out;
    for (const auto& e : entries) out.push_back(e.name);
    return out;
}

bool has(const std::vector<std::string>& v, const std::string& s) { return std::find(v.begin(), v.end(), s) != v.end(); }

} // namespace

TEST(Catalog, FamiliesHaveTheirInvariants) {
    for (std::size_t m = 1; m <= 3; ++m) {
        const auto s = series(heisenberg(m));
        EXPECT_EQ(s.n, 2 * m + 1);
        EXPECT_EQ(s.derived_dim, 1u);
        EXPECT_EQ(s.nilpotency_class, 2u);
        EXPECT_EQ(s.center_dim, 1u);
    }
    EXPECT_TRUE(abelian(4).is_abelian());
    EXPECT_EQ(abelian(4).dim(), 4u);
}

TEST(Catalog, EveryEntryMatchesItsAssertedInvariants) {
    for (const auto& e : enumerate(8)) {
        const auto s = series(e.algebra);
        EXPECT_EQ((AssertedInvariants{s.n, s.derived_dim, s.nilpotency_class}), e.asserted) << e.name;
        EXPECT_NO_THROW(validate(e.algebra)) << e.name;
    }
}

TEST(Catalog, DataFileExpectations) {
    const auto doc = nlohmann::json::parse(catalog_json());
    std::size_t checked = 0;
    for (const auto& raw : doc.at("entries")) {
        if (!raw.contains("expect")) continue;
        const auto& expect = raw.at("expect");
        std::vector<std::string> instances;
        if (raw.at("parameters").empty()) instances.push_back(raw.at("name"));
        else
            for (const auto& eps : catalog_parameter_samples(raw.at("name")))
                instances.push_back(raw.at("name").get<std::string>() + "(" + to_string(eps) + ")");
        for (const auto& name : instances) {
            const auto report = multiplier_report(catalog_get(name));
            if (expect.contains("capable")) EXPECT_EQ(report.capable, expect.at("capable").get<bool>()) << name;
            if (expect.contains("attains_e2")) EXPECT_EQ(report.attains_e2, expect.at("attains_e2").get<bool>()) << name;
            if (expect.contains("dim_M")) EXPECT_EQ(report.dim_M, expect.at("dim_M").get<std::size_t>()) << name;
            ++checked;
        }
    }
    EXPECT_GT(checked, 5u);
}

TEST(Catalog, EnumerateSmallDimensions) {
    EXPECT_EQ(names(enumerate(3)), (std::vector<std::string>{"A1", "A2", "A3", "H1"}));
    const auto four = names(enumerate(4));
    for (const auto& n : {"A4", "H1+A1", "L4_3"}) EXPECT_TRUE(has(four, n)) << n;
    EXPECT_EQ(four.size(), 7u);
    const auto five = names(enumerate(5));
    for (const auto& n : {"A5", "H1+A2", "H2", "L4_3+A1", "L5_5", "L5_7", "L5_8", "L5_9"}) EXPECT_TRUE(has(five, n)) << n;
    for (const auto& e : enumerate(5)) EXPECT_LE(e.algebra.dim(), 5u) << e.name;
}

TEST(Catalog, EnumerateIsDeterministicAndUnique) {
    const auto a = names(enumerate(7)), b = names(enumerate(7));
    EXPECT_EQ(a, b);
    auto sorted = a;
    std::sort(sorted.begin(), sorted.end());
    EXPECT_EQ(std::adjacent_find(sorted.begin(), sorted.end()), sorted.end());
    EXPECT_EQ(names(enumerate(6)).size(), 28u);
}

TEST(Catalog, EnumerateSamplesParameterFamilies) {
    EnumerateOptions opts;
    opts.epsilon_samples = {Scalar(3), Scalar(-2, 7)};
    const auto six = names(enumerate(6, opts));
    EXPECT_TRUE(has(six, "L6_22(3)"));
    EXPECT_TRUE(has(six, "L6_22(-2/7)"));
    EXPECT_FALSE(catalog_parameter_samples("L6_22").empty());
    EXPECT_TRUE(catalog_parameter_samples("L5_7").empty());
    EXPECT_THROW(enumerate(9), InputError);
}

TEST(Catalog, NameSpellings) {
    EXPECT_EQ(catalog_get("L5,7"), catalog_get("L5_7"));
    EXPECT_EQ(catalog_get("H(1)"), heisenberg(1));
    EXPECT_EQ(catalog_get("A(3)"), abelian(3));
    EXPECT_EQ(catalog_get("H1 + A2"), direct_sum(heisenberg(1), abelian(2)));
    EXPECT_EQ(catalog_get("H1⊕A1"), direct_sum(heisenberg(1), abelian(1)));
    EXPECT_EQ(catalog_get("L6_22(eps=1/2)"), catalog_get("L6_22", {{"eps", Scalar(1, 2)}}));
    EXPECT_EQ(catalog_entry("L6_22(2/4)+A1").name, "L6_22(1/2)+A1");
    EXPECT_EQ(catalog_entry("H(1)+A(2)").name, "H1+A2");
}

TEST(Catalog, ParameterFamily) {
    const auto e = catalog_entry("L6_22", {{"eps", Scalar(-1)}});
    EXPECT_EQ(e.base, "L6_22");
    EXPECT_EQ(e.parameters.at("eps"), -1);
    EXPECT_EQ(schur_multiplier_dim(e.algebra), 8u);
    for (const auto& eps : {Scalar(0), Scalar(1), Scalar(5, 3)})
        EXPECT_EQ(schur_multiplier_dim(catalog_get("L6_22", {{"eps", eps}})), 8u);
}

TEST(Catalog, Errors) {
    EXPECT_THROW(catalog_get("L6_22"), MissingParameter);
    EXPECT_THROW(catalog_get("L9_9"), UnknownName);
    EXPECT_THROW(catalog_get("Q3"), UnknownName);
    EXPECT_THROW(catalog_get(""), UnknownName);
    EXPECT_THROW(catalog_get("H0"), UnknownName);
    EXPECT_THROW(catalog_get("L5_7(1)"), InputError);
}

TEST(Catalog, BaseNamesInFileOrder) {
    const auto base = catalog_base_names();
    EXPECT_EQ(base.front(), "L4_3");
    EXPECT_TRUE(has(base, "L6_26"));
    EXPECT_TRUE(has(base, "L6_22"));
}
