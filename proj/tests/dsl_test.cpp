#include <gtest/gtest.h>

#include "schurlab/catalog.hpp"
#include "schurlab/errors.hpp"
#include "schurlab/multiplier.hpp"
#include "schurlab/presentation_dsl.hpp"

using namespace schurlab;

TEST(Dsl, ParsesNormativeForm) {
    const auto l = parse_presentation(
        "algebra L57 dim 5\n"
        "[x1,x2] = x3\n"
        "[x1,x3] = x4   # comment\n"
        "\n"
        "[x1,x4] = x5\n");
    EXPECT_EQ(l.name(), "L57");
    EXPECT_EQ(l, catalog_get("L5_7"));
    const auto s = series(l);
    EXPECT_EQ((std::array{s.n, s.derived_dim, s.nilpotency_class}), (std::array<std::size_t, 3>{5, 3, 4}));
    EXPECT_EQ(schur_multiplier_dim(l), 3u);
}

TEST(Dsl, Coefficients) {
    const auto l = parse_presentation("algebra t dim 4\n[x2,x1] = 2/3*x3 - x4\n[x1,x3] = 0\n");
    EXPECT_EQ(l.basis_bracket(0, 1), SparseVector::from_terms({{2, Scalar(-2, 3)}, {3, 1}}));
    EXPECT_TRUE(l.basis_bracket(0, 2).empty());
}

TEST(Dsl, SyntaxErrors) {
    EXPECT_THROW(parse_presentation("algebra a dim 3\n[x1,x1] = x2\n"), SyntaxError);
    EXPECT_THROW(parse_presentation("algebra a dim 3\n[x1,x2] x3\n"), SyntaxError);
    EXPECT_THROW(parse_presentation("algebra a dim three\n"), SyntaxError);
    EXPECT_THROW(parse_presentation("algebra a dim 3\n[x1,x2] = 1/0*x3\n"), InputError);
    try {
        parse_presentation("algebra a dim 3\n[x1,x2] = x3\n[x1 x2] = x3\n");
        FAIL() << "expected SyntaxError";
    } catch (const SyntaxError& e) {
        EXPECT_EQ(e.line(), 3u);
        EXPECT_GT(e.column(), 1u);
    }
}

TEST(Dsl, SemanticErrors) {
    EXPECT_THROW(parse_presentation("algebra a dim 3\n[x1,x4] = x2\n"), UnknownGenerator);
    EXPECT_THROW(parse_presentation("algebra a dim 3\n[x1,x2] = x7\n"), UnknownGenerator);
    EXPECT_THROW(parse_presentation("algebra a dim 3\n[x1,x2] = x3\n[x2,x1] = x3\n"), DuplicateInconsistentBracket);
    EXPECT_NO_THROW(parse_presentation("algebra a dim 3\n[x1,x2] = x3\n[x2,x1] = -x3\n"));
    EXPECT_THROW(parse_presentation("algebra a dim 4\n[x1,x2]=x3\n[x1,x3]=x4\n[x2,x4]=x3\n"), JacobiViolation);
    EXPECT_THROW(parse_presentation("algebra a dim 2\n[x1,x2] = x2\n"), NotNilpotent);
}

TEST(Dsl, AstKeepsPositions) {
    const auto ast = parse_presentation_ast("algebra a dim 3\n\n  [x2,x1] = x3\n");
    ASSERT_EQ(ast.statements.size(), 1u);
    EXPECT_EQ(ast.statements[0].i, 0u);
    EXPECT_EQ(ast.statements[0].j, 1u);
    EXPECT_EQ(ast.statements[0].rhs, SparseVector::unit(2, -1));
    EXPECT_EQ(ast.statements[0].line, 3u);
    EXPECT_EQ(ast.statements[0].column, 3u);
}

TEST(Dsl, AngleForm) {
    EXPECT_EQ(parse_presentation("<x1,x2,x3 | [x1,x2]=x3>"), heisenberg(1));
    EXPECT_EQ(parse_presentation("L57 ⟨x₁,…,x₅ | [x1,x2]=x3, [x1,x3]=x4, [x1,x4]=x5⟩"),
              catalog_get("L5_7"));
    EXPECT_EQ(parse_presentation("<x1,...,x4 | [x1,x2]=x3, [x1,x3]=−x4>").basis_bracket(0, 2),
              SparseVector::unit(3, -1));
}

TEST(Dsl, RoundTripOverCatalog) {
    for (const auto& e : enumerate(7)) {
        const auto text = serialize_presentation(e.algebra);
        EXPECT_EQ(parse_presentation(text), e.algebra) << e.name << "\n" << text;
    }
    const auto odd = catalog_get("L6_22(-5/3)");
    EXPECT_EQ(parse_presentation(serialize_presentation(odd)), odd);
}
