#pragma once

#include <iosfwd>
#include <string>

#include "gbgg/form_algebra.hpp"

namespace gbgg {

/// Canonical text form: `formalgebra v1` header, `d`, `q`, `h` directives, then one
/// `mult <i>` block per stored degree whose lines read
/// `v<j> * b<a> -> <coeff>*b<c> [+ ...]` with exact fraction coefficients.
/// Zero products are omitted; indices are ascending; the output re-parses to an
/// equal algebra.
std::string serialize(const FormAlgebra& a);

FormAlgebra parse_form_algebra(std::istream& in);
FormAlgebra parse_form_algebra_text(const std::string& text);
/// Reads from a path, or from standard input when the path is "-".
FormAlgebra load_form_algebra(const std::string& path);

/// Bivector expression: terms `[coeff*]e<i>^e<j>` joined by `+` (whitespace
/// optional, negative coefficients allowed). The inverse of ExteriorElement::str
/// for degree-2 elements.
ExteriorElement parse_bivector_expression(const std::string& text, int ambient_dim,
                                          const Field& field);

}  // namespace gbgg
