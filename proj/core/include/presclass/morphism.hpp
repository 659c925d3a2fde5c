#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "presclass/coset_enumeration.hpp"
#include "presclass/group.hpp"
#include "presclass/presentation.hpp"

namespace presclass {

// Generator name -> element expression in the target group.
struct GeneratorMap {
  std::vector<std::pair<std::string, std::string>> images;

  const std::string* find(const std::string& generator) const;
};

// Extends generator images to a map on all of `source`, defined by
// h(s*g) = h(s)*h(g) along a breadth-first traversal from the identity.
// Returns nullopt unless the images generate a well-defined homomorphism
// (every product with a generator is consistent) and `generators`
// generate `source`.
std::optional<std::vector<ElementId>> extend_homomorphism(
    const FiniteGroup& source, std::span<const ElementId> generators,
    const FiniteGroup& target, std::span<const ElementId> images);

struct MutualInverseCheck {
  std::size_t group_order = 0;
  std::size_t presented_order = 0;
  // phi: group -> presented group extends to a homomorphism.
  bool phi_homomorphism = false;
  // psi sends every relator of the presentation to the identity.
  bool psi_homomorphism = false;
  // psi(phi(g)) == g on the group's generators.
  bool psi_after_phi_identity = false;
  // phi(psi(p)) == p on the presentation's generators.
  bool phi_after_psi_identity = false;

  bool ok() const {
    return phi_homomorphism && psi_homomorphism && psi_after_phi_identity &&
           phi_after_psi_identity && group_order == presented_order;
  }
};

// Realises `presentation` with todd_coxeter and checks that
//   phi: generators of `group` -> words in the presentation's generators
//   psi: generators of the presentation -> words in `group`
// are mutually inverse isomorphisms. Throws EnumerationExceeded if the
// enumeration does not close within `max_cosets`.
MutualInverseCheck check_mutual_inverse(const FiniteGroup& group,
                                        const Presentation& presentation,
                                        const GeneratorMap& phi, const GeneratorMap& psi,
                                        std::size_t max_cosets = kDefaultMaxCosets);

bool verify_mutual_inverse(const FiniteGroup& group, const Presentation& presentation,
                           const GeneratorMap& phi, const GeneratorMap& psi,
                           std::size_t max_cosets = kDefaultMaxCosets);

}  // namespace presclass
