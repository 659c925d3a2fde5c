#include "presclass/morphism.hpp"

#include "presclass/element_expr.hpp"
#include "presclass/error.hpp"

namespace presclass {

const std::string* GeneratorMap::find(const std::string& generator) const {
  for (const auto& [name, image] : images) {
    if (name == generator) return &image;
  }
  return nullptr;
}

std::optional<std::vector<ElementId>> extend_homomorphism(
    const FiniteGroup& source, std::span<const ElementId> generators,
    const FiniteGroup& target, std::span<const ElementId> images) {
  if (generators.size() != images.size()) {
    throw InvalidParameter("generator and image lists differ in length");
  }
  constexpr ElementId kUnset = static_cast<ElementId>(-1);
  std::vector<ElementId> map(source.order(), kUnset);
  std::vector<ElementId> queue{source.identity()};
  map[source.identity()] = target.identity();
  for (std::size_t k = 0; k < queue.size(); ++k) {
    const ElementId g = queue[k];
    for (std::size_t s = 0; s < generators.size(); ++s) {
      const ElementId h = source.mul(generators[s], g);
      const ElementId image = target.mul(images[s], map[g]);
      if (map[h] == kUnset) {
        map[h] = image;
        queue.push_back(h);
      } else if (map[h] != image) {
        return std::nullopt;
      }
    }
  }
  if (queue.size() != source.order()) return std::nullopt;
  return map;
}

namespace {

std::vector<ElementId> images_of(const std::vector<std::string>& generators,
                                 const GeneratorMap& map, const FiniteGroup& target,
                                 const char* label) {
  std::vector<ElementId> out;
  for (const std::string& g : generators) {
    const std::string* expr = map.find(g);
    if (!expr) {
      throw InvalidParameter(std::string(label) + " has no image for generator '" + g + "'");
    }
    out.push_back(parse_element(target, *expr));
  }
  return out;
}

}  // namespace

MutualInverseCheck check_mutual_inverse(const FiniteGroup& group,
                                        const Presentation& presentation,
                                        const GeneratorMap& phi, const GeneratorMap& psi,
                                        std::size_t max_cosets) {
  if (group.generators().empty()) {
    throw InvalidParameter("group " + group.descriptor() + " has no named generators");
  }
  const CosetEnumeration enumeration = todd_coxeter(presentation, max_cosets);
  if (!enumeration.complete) throw EnumerationExceeded(max_cosets);
  if (!enumeration.group) throw GuardError("presented group too large to tabulate");
  const FiniteGroup& presented = *enumeration.group;

  MutualInverseCheck check;
  check.group_order = group.order();
  check.presented_order = presented.order();

  const std::vector<ElementId> phi_images =
      images_of(group.generator_names(), phi, presented, "phi");
  const std::vector<ElementId> psi_images =
      images_of(presentation.generator_names, psi, group, "psi");

  const auto phi_map = extend_homomorphism(group, group.generators(), presented, phi_images);
  check.phi_homomorphism = phi_map.has_value();
  check.psi_homomorphism = check_homomorphism(presentation, group, psi_images);

  // psi as a map on the presented group, available once it is a homomorphism.
  std::optional<std::vector<ElementId>> psi_map;
  if (check.psi_homomorphism) {
    psi_map = extend_homomorphism(presented, presented.generators(), group, psi_images);
  }
  if (phi_map && psi_map) {
    check.psi_after_phi_identity = true;
    for (ElementId g : group.generators()) {
      if ((*psi_map)[(*phi_map)[g]] != g) check.psi_after_phi_identity = false;
    }
    check.phi_after_psi_identity = true;
    for (ElementId p : presented.generators()) {
      if ((*phi_map)[(*psi_map)[p]] != p) check.phi_after_psi_identity = false;
    }
  }
  return check;
}

bool verify_mutual_inverse(const FiniteGroup& group, const Presentation& presentation,
                           const GeneratorMap& phi, const GeneratorMap& psi,
                           std::size_t max_cosets) {
  return check_mutual_inverse(group, presentation, phi, psi, max_cosets).ok();
}

}  // namespace presclass
