#pragma once

#include <cstddef>
#include <vector>

#include "presclass/group.hpp"
#include "presclass/permutation.hpp"

namespace presclass {

// Normal form a^i x^j of DC_{4n}; 0 <= i < 2n, j in {0,1}.
struct DicyclicElement {
  int i = 0;
  int j = 0;

  bool operator==(const DicyclicElement&) const = default;
};

// Id layout shared by the dicyclic and dihedral families: id = i + rot * j
// where rot is the rotation subgroup order (2n for DC_{4n}, n for D_{2n}).
ElementId dicyclic_id(int n, DicyclicElement element);
DicyclicElement dicyclic_element(int n, ElementId id);

// DC_{4n} = <a, x | a^{2n} = e, x^2 = a^n, x^-1 a x = a^-1>, n >= 2.
// Multiplication is closed-form; generators are named "a" and "x".
FiniteGroup dicyclic(int n);

// D_{2n} = <a, x | a^n = x^2 = e, x a x = a^-1>, n >= 3.
FiniteGroup dihedral(int n);

// Z_n with generator "g", n >= 1.
FiniteGroup cyclic(int n);

// Componentwise product. Element names are "(g,h)"; generators are the
// embedded generators of both factors, renamed g1, g2, ... on a name clash.
FiniteGroup direct_product(const FiniteGroup& left, const FiniteGroup& right);

inline constexpr std::size_t kDefaultClosureCap = 10000;

// Closure of the generators under composition (breadth-first). Elements are
// named in cycle notation with "e" for the identity. Throws ClosureLimitError
// when the closure exceeds `cap` elements.
FiniteGroup from_permutations(std::size_t degree,
                              const std::vector<Permutation>& generators,
                              std::size_t cap = kDefaultClosureCap);

}  // namespace presclass
