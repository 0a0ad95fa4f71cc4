#pragma once

/**
 * @file parser.hpp
 * @brief Recursive-descent parser for the CLI element-expression grammar,
 *        and the canonical text form it round-trips with.
 *
 *   Expr := Term (('+'|'-') Term)*
 *   Term := Pow (('*'|'/') Pow)*
 *   Pow  := Unary ('^' Int)?
 *   Unary := '-' Unary | Atom
 *   Atom := Int | 'zeta' | 'xi' | '(' Expr ')'
 *
 * Additive subexpressions fold into single CycElems; '/' and negative
 * exponents produce word factors and are rejected under '+' or '-'
 * (SemanticError). Whitespace is insignificant.
 */

#include <string>
#include <string_view>

#include "cyclo/cyc.hpp"

namespace cyclo {

RadicalWord parse_element(std::string_view src, const CycRing& ring);

std::string serialize_elem(const CycElem& e);
std::string serialize_word(const RadicalWord& w);

}  // namespace cyclo
