#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "presclass/group.hpp"

namespace presclass {

// Edge-labelled Cayley digraph: vertex g has one out-edge g -> s*g labelled s
// for each distinct element s of the sequence. Labels are elements, so
// repeated sequence entries collapse to a single label.
class CayleyGraph {
 public:
  std::size_t vertex_count() const { return vertex_names_.size(); }
  std::size_t label_count() const { return labels_.size(); }
  std::size_t edge_count() const { return vertex_count() * label_count(); }

  // Label elements in first-occurrence order.
  const std::vector<ElementId>& labels() const { return labels_; }
  const std::string& label_name(std::size_t label) const { return label_names_[label]; }
  std::size_t label_order(std::size_t label) const { return label_orders_[label]; }

  // succ(l)[v] = labels()[l] * v; pred is its inverse permutation.
  std::span<const ElementId> succ(std::size_t label) const { return succ_[label]; }
  std::span<const ElementId> pred(std::size_t label) const { return pred_[label]; }

  ElementId basepoint() const { return basepoint_; }
  const std::string& vertex_name(ElementId v) const { return vertex_names_[v]; }
  const std::string& group_descriptor() const { return group_descriptor_; }
  const std::string& sequence_text() const { return sequence_text_; }

 private:
  friend CayleyGraph build_cayley_graph(const FiniteGroup&, std::span<const ElementId>);

  std::vector<ElementId> labels_;
  std::vector<std::string> label_names_;
  std::vector<std::size_t> label_orders_;
  std::vector<std::vector<ElementId>> succ_;
  std::vector<std::vector<ElementId>> pred_;
  ElementId basepoint_ = 0;
  std::vector<std::string> vertex_names_;
  std::string group_descriptor_;
  std::string sequence_text_;
};

CayleyGraph build_cayley_graph(const FiniteGroup& group, std::span<const ElementId> sequence);
CayleyGraph build_cayley_graph(const FiniteGroup& group, const GeneratingSequence& sequence);

// Every vertex reachable from the basepoint. Each label is a permutation
// with finite cycles, so directed and undirected reachability agree.
bool is_connected(const CayleyGraph& graph);

// Lengths of the cycles of one label's permutation, ascending.
std::vector<std::size_t> cycle_lengths(const CayleyGraph& graph, std::size_t label);

struct UndirectedEdge {
  ElementId u = 0;  // u <= v
  ElementId v = 0;
  std::size_t label = 0;

  auto operator<=>(const UndirectedEdge&) const = default;
};

// Direction-forgetting view. An order-2 label contributes one edge {g, s*g}
// per pair; every other label contributes one edge per directed edge, so
// parallel edges only arise from distinct labels. An identity label gives one
// loop per vertex.
class UndirectedLabeledGraph {
 public:
  std::size_t vertex_count() const { return vertex_count_; }
  std::size_t label_count() const { return label_orders_.size(); }
  std::size_t label_order(std::size_t label) const { return label_orders_[label]; }
  // Sorted edge list.
  const std::vector<UndirectedEdge>& edges() const { return edges_; }
  // Neighbours of v along edges with this label (loops list v once).
  const std::vector<ElementId>& neighbors(std::size_t label, ElementId v) const {
    return neighbors_[label][v];
  }
  ElementId basepoint() const { return basepoint_; }
  const std::string& vertex_name(ElementId v) const { return vertex_names_[v]; }
  const std::string& label_name(std::size_t label) const { return label_names_[label]; }

 private:
  friend UndirectedLabeledGraph undirected_view(const CayleyGraph&);

  std::size_t vertex_count_ = 0;
  std::vector<std::size_t> label_orders_;
  std::vector<std::string> label_names_;
  std::vector<std::string> vertex_names_;
  std::vector<UndirectedEdge> edges_;
  std::vector<std::vector<std::vector<ElementId>>> neighbors_;
  ElementId basepoint_ = 0;
};

UndirectedLabeledGraph undirected_view(const CayleyGraph& graph);
bool is_connected(const UndirectedLabeledGraph& graph);

struct DotOptions {
  bool undirected = false;
  std::string graph_name = "cayley";
};

// Deterministic Graphviz text. Nodes are emitted in element-id order with
// sanitised element names as ids; label k is drawn solid, dashed, dotted,
// bold, ... cycling through those styles, and carries its element name.
std::string to_dot(const CayleyGraph& graph, const DotOptions& options = {});

}  // namespace presclass
