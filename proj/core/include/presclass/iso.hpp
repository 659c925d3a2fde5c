#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "presclass/cayley_graph.hpp"

namespace presclass {

// Isomorphism up to edge relabelling: vertex_map is f : V1 -> V2 and
// label_map is sigma : labels(G1) -> labels(G2), both by index.
struct IsoWitness {
  std::vector<ElementId> vertex_map;
  std::vector<std::size_t> label_map;

  bool operator==(const IsoWitness&) const = default;
};

// Directed isomorphism search. Graphs must be connected (ContractViolation
// otherwise); differing vertex or label counts give nullopt.
//
// Correctness rests on regularity of Cayley graphs: right multiplications
// are label-preserving automorphisms acting transitively on vertices, so any
// isomorphism can be composed with one to fix the basepoints. A
// basepoint-fixing isomorphism with relabelling sigma must satisfy
// f(s*g) = sigma(s)*f(g), which determines f along a traversal. Trying every
// order-compatible sigma in lexicographic order is therefore exhaustive.
std::optional<IsoWitness> directed_iso(const CayleyGraph& lhs, const CayleyGraph& rhs);

// Undirected isomorphism of the direction-forgetting views. Basepoints are
// still fixed (right multiplications stay automorphisms of the undirected
// view), then a backtracking search maps each s-neighbour set of an assigned
// vertex onto the sigma(s)-neighbour set of its image, trying the smaller
// target id first.
std::optional<IsoWitness> undirected_iso(const UndirectedLabeledGraph& lhs,
                                         const UndirectedLabeledGraph& rhs);

// Test oracle: plain backtracking over vertex bijections (no basepoint
// assumption) for every label bijection. Refuses graphs with more than
// kBruteForceVertexLimit vertices with GuardError.
inline constexpr std::size_t kBruteForceVertexLimit = 16;
std::optional<IsoWitness> brute_force_iso(const CayleyGraph& lhs, const CayleyGraph& rhs);
std::optional<IsoWitness> brute_force_undirected_iso(const UndirectedLabeledGraph& lhs,
                                                     const UndirectedLabeledGraph& rhs);

// All label-preserving automorphisms (label_map is the identity). For a
// connected Cayley graph there is exactly one per vertex.
std::vector<IsoWitness> automorphisms(const CayleyGraph& graph);

// Edge-by-edge check of the witness definition (bijections, and every edge
// maps to an edge with the mapped label).
bool validate_witness(const CayleyGraph& lhs, const CayleyGraph& rhs, const IsoWitness& witness);
bool validate_witness(const UndirectedLabeledGraph& lhs, const UndirectedLabeledGraph& rhs,
                      const IsoWitness& witness);

IsoWitness inverse(const IsoWitness& witness);
// Apply `first`, then `second`.
IsoWitness compose(const IsoWitness& first, const IsoWitness& second);

// {"vertex_map": [...], "label_map": [["a","a*x"], ...]} using element names.
std::string witness_to_json(const IsoWitness& witness, const CayleyGraph& lhs,
                            const CayleyGraph& rhs);

}  // namespace presclass
