#pragma once

#include <string>
#include <string_view>

#include "presclass/group.hpp"

namespace presclass {

// Evaluates an element expression in `group`:
//
//   expr := term ('*' term)*
//   term := atom ('^' int)?
//   atom := identifier | '(' ... ')' ('(' ... ')')*
//
// Identifiers are generator names, "e", or element names. Parenthesised atoms
// are resolved by the group (cycle notation for permutation groups, "(g,h)"
// pairs for products). Throws ParseError on bad syntax or unknown names.
ElementId parse_element(const FiniteGroup& group, std::string_view text);

// Comma-separated element expressions, e.g. "a*x,x". Commas inside
// parentheses do not separate.
GeneratingSequence parse_sequence(const FiniteGroup& group, std::string_view text);

// Inverse of parse_sequence using element names.
std::string format_sequence(const FiniteGroup& group, const GeneratingSequence& seq);

}  // namespace presclass
