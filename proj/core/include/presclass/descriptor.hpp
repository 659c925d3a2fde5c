#pragma once

#include <string_view>

#include "presclass/group.hpp"

namespace presclass {

// Builds a group from its descriptor:
//
//   dicyclic:<n> | dihedral:<n> | cyclic:<n>
//   product:<d1>,<d2>          (wrap a factor in [...] if it contains a comma)
//   perm:<degree>:<gen>;<gen>  (cycle notation; ',' between ')(' also works)
//
// Throws ParseError for malformed text and InvalidParameter for bad values.
FiniteGroup parse_group(std::string_view descriptor);

}  // namespace presclass
