#pragma once

#include <string>
#include <string_view>

#include "pbw/poly.hpp"

namespace pbw {

// Text form of polynomials and tensors:
//
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := integer ['/' integer] | name ['^' n] | '(' expr ')' ['^' n]
//   tensor := '0' | ['+'|'-'] side '#' side (('+'|'-') side '#' side)*
//
// where `side` is a term. Sums inside a tensor leg need parentheses:
// "(x1 + x2)#x3". Errors are ParseError with line 1 and a 1-based column.

Polynomial parse_polynomial(std::string_view src, const Alphabet& alphabet,
                            Field field);
TensorElement parse_tensor(std::string_view src, const Alphabet& alphabet,
                           Field field);

/// "x2*x1^2"; "1" for the empty word.
std::string render_word(const Word& w, const Alphabet& alphabet);
/// "x2*x1 - x1*x2 - 1/2*x3"; "0" for zero. Terms in glex-descending order.
std::string render(const Polynomial& f, const Alphabet& alphabet);
/// "1#y + y#1 + x#x"; "0" for zero.
std::string render(const TensorElement& t, const Alphabet& alphabet);

}  // namespace pbw
