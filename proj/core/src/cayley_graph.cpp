#include "presclass/cayley_graph.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <set>
#include <sstream>

#include "presclass/element_expr.hpp"
#include "presclass/error.hpp"

namespace presclass {

CayleyGraph build_cayley_graph(const FiniteGroup& group, std::span<const ElementId> sequence) {
  CayleyGraph graph;
  for (ElementId s : sequence) {
    if (!group.contains(s)) throw InvalidParameter("sequence element out of range");
    if (std::find(graph.labels_.begin(), graph.labels_.end(), s) == graph.labels_.end()) {
      graph.labels_.push_back(s);
    }
  }
  const std::size_t n = group.order();
  for (ElementId s : graph.labels_) {
    std::vector<ElementId> succ(n), pred(n);
    for (ElementId g = 0; g < n; ++g) {
      const ElementId h = group.mul(s, g);
      succ[g] = h;
      pred[h] = g;
    }
    graph.succ_.push_back(std::move(succ));
    graph.pred_.push_back(std::move(pred));
    graph.label_names_.push_back(group.name(s));
    graph.label_orders_.push_back(element_order(group, s));
  }
  graph.basepoint_ = group.identity();
  graph.vertex_names_ = group.names();
  graph.group_descriptor_ = group.descriptor();
  GeneratingSequence seq{{sequence.begin(), sequence.end()}, group.descriptor()};
  graph.sequence_text_ = format_sequence(group, seq);
  return graph;
}

CayleyGraph build_cayley_graph(const FiniteGroup& group, const GeneratingSequence& sequence) {
  return build_cayley_graph(group, std::span<const ElementId>(sequence.elements));
}

bool is_connected(const CayleyGraph& graph) {
  const std::size_t n = graph.vertex_count();
  std::vector<char> seen(n, 0);
  std::vector<ElementId> queue{graph.basepoint()};
  seen[graph.basepoint()] = 1;
  for (std::size_t k = 0; k < queue.size(); ++k) {
    for (std::size_t l = 0; l < graph.label_count(); ++l) {
      const ElementId h = graph.succ(l)[queue[k]];
      if (!seen[h]) {
        seen[h] = 1;
        queue.push_back(h);
      }
    }
  }
  return queue.size() == n;
}

std::vector<std::size_t> cycle_lengths(const CayleyGraph& graph, std::size_t label) {
  const auto succ = graph.succ(label);
  std::vector<char> seen(graph.vertex_count(), 0);
  std::vector<std::size_t> lengths;
  for (ElementId start = 0; start < graph.vertex_count(); ++start) {
    if (seen[start]) continue;
    std::size_t length = 0;
    for (ElementId v = start; !seen[v]; v = succ[v]) {
      seen[v] = 1;
      ++length;
    }
    lengths.push_back(length);
  }
  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

UndirectedLabeledGraph undirected_view(const CayleyGraph& graph) {
  UndirectedLabeledGraph view;
  const std::size_t n = graph.vertex_count();
  view.vertex_count_ = n;
  view.basepoint_ = graph.basepoint();
  view.vertex_names_.reserve(n);
  for (ElementId v = 0; v < n; ++v) view.vertex_names_.push_back(graph.vertex_name(v));
  view.neighbors_.assign(graph.label_count(), std::vector<std::vector<ElementId>>(n));
  for (std::size_t l = 0; l < graph.label_count(); ++l) {
    view.label_orders_.push_back(graph.label_order(l));
    view.label_names_.push_back(graph.label_name(l));
    const auto succ = graph.succ(l);
    const bool involution = graph.label_order(l) == 2;
    for (ElementId g = 0; g < n; ++g) {
      const ElementId h = succ[g];
      // g <-> s*g is one undirected edge when s has order 2; take it once.
      if (involution && h < g) continue;
      view.edges_.push_back({std::min(g, h), std::max(g, h), l});
      view.neighbors_[l][g].push_back(h);
      if (h != g) view.neighbors_[l][h].push_back(g);
    }
    for (auto& list : view.neighbors_[l]) std::sort(list.begin(), list.end());
  }
  std::sort(view.edges_.begin(), view.edges_.end());
  return view;
}

bool is_connected(const UndirectedLabeledGraph& graph) {
  const std::size_t n = graph.vertex_count();
  if (n == 0) return true;
  std::vector<char> seen(n, 0);
  std::vector<ElementId> queue{graph.basepoint()};
  seen[graph.basepoint()] = 1;
  for (std::size_t k = 0; k < queue.size(); ++k) {
    for (std::size_t l = 0; l < graph.label_count(); ++l) {
      for (ElementId h : graph.neighbors(l, queue[k])) {
        if (!seen[h]) {
          seen[h] = 1;
          queue.push_back(h);
        }
      }
    }
  }
  return queue.size() == n;
}

namespace {

std::string quote(const std::string& text) {
  std::string out = "\"";
  for (char c : text) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::vector<std::string> node_ids(const CayleyGraph& graph) {
  std::vector<std::string> ids;
  std::set<std::string> used;
  for (ElementId v = 0; v < graph.vertex_count(); ++v) {
    std::string id;
    for (char c : graph.vertex_name(v)) {
      id += std::isalnum(static_cast<unsigned char>(c)) ? c : '_';
    }
    if (id.empty() || used.count(id)) id += "_" + std::to_string(v);
    used.insert(id);
    ids.push_back(std::move(id));
  }
  return ids;
}

}  // namespace

std::string to_dot(const CayleyGraph& graph, const DotOptions& options) {
  static constexpr std::array<const char*, 4> kStyles = {"solid", "dashed", "dotted", "bold"};
  const std::vector<std::string> ids = node_ids(graph);
  std::ostringstream out;
  out << (options.undirected ? "graph " : "digraph ") << quote(options.graph_name) << " {\n";
  out << "  // group: " << graph.group_descriptor() << "\n";
  out << "  // sequence: " << graph.sequence_text() << "\n";
  for (std::size_t l = 0; l < graph.label_count(); ++l) {
    out << "  // label " << l << ": " << graph.label_name(l) << " (order "
        << graph.label_order(l) << ", " << kStyles[l % kStyles.size()] << ")\n";
  }
  out << "  node [shape=circle];\n";
  for (ElementId v = 0; v < graph.vertex_count(); ++v) {
    out << "  " << quote(ids[v]) << " [label=" << quote(graph.vertex_name(v)) << "];\n";
  }
  auto edge_line = [&](ElementId from, ElementId to, std::size_t l) {
    out << "  " << quote(ids[from]) << (options.undirected ? " -- " : " -> ")
        << quote(ids[to]) << " [style=" << kStyles[l % kStyles.size()]
        << ", label=" << quote(graph.label_name(l)) << "];\n";
  };
  if (options.undirected) {
    const UndirectedLabeledGraph view = undirected_view(graph);
    for (const UndirectedEdge& e : view.edges()) edge_line(e.u, e.v, e.label);
  } else {
    for (std::size_t l = 0; l < graph.label_count(); ++l) {
      for (ElementId g = 0; g < graph.vertex_count(); ++g) edge_line(g, graph.succ(l)[g], l);
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace presclass
