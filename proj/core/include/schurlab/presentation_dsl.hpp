#pragma once

// Text presentations of Lie algebras.
//
//   algebra NAME dim INT
//   [xi,xj] = combo          # comment
//
// combo is "0" or a sum of terms "q*xk" / "xk" with rational q. The angle
// form "<x1,...,x5 | [x1,x2]=x3, [x1,x3]=x4>" is accepted as well, including
// the Unicode brackets, subscript digits, ellipsis and minus sign.

#include <cstddef>
#include <string>
#include <vector>

#include "schurlab/lie_algebra.hpp"

namespace schurlab {

struct BracketStatement {
    std::size_t i = 0; // 0-based, i < j after normalization
    std::size_t j = 0;
    SparseVector rhs;
    std::size_t line = 0;
    std::size_t column = 0;
};

struct PresentationAst {
    std::string name;
    std::size_t dim = 0;
    std::vector<BracketStatement> statements; // one per pair, in first-seen order
};

/// Syntax only plus generator range, antisymmetric normalization and duplicate
/// checks. Throws SyntaxError, UnknownGenerator, DuplicateInconsistentBracket.
PresentationAst parse_presentation_ast(const std::string& text);
/// Also throws JacobiViolation, NotNilpotent.
LieAlgebra build_algebra(const PresentationAst& ast);
LieAlgebra parse_presentation(const std::string& text);

/// Normative-form text that parse_presentation() maps back to the same table.
std::string serialize_presentation(const LieAlgebra& algebra);

} // namespace schurlab
