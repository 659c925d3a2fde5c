#include "presclass/iso.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "json.hpp"
#include "presclass/error.hpp"

namespace presclass {
namespace {

constexpr ElementId kUnset = static_cast<ElementId>(-1);

// Calls `visit` for each bijection of label indices accepted by `compatible`,
// in lexicographic order, until `visit` returns true.
template <typename Compatible, typename Visit>
bool for_each_label_bijection(std::size_t count, Compatible compatible, Visit visit) {
  std::vector<std::size_t> sigma(count);
  std::iota(sigma.begin(), sigma.end(), 0);
  do {
    bool ok = true;
    for (std::size_t l = 0; l < count && ok; ++l) ok = compatible(l, sigma[l]);
    if (ok && visit(sigma)) return true;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return false;
}

bool is_bijection(const std::vector<ElementId>& map, std::size_t n) {
  if (map.size() != n) return false;
  std::vector<char> hit(n, 0);
  for (ElementId v : map) {
    if (v >= n || hit[v]) return false;
    hit[v] = 1;
  }
  return true;
}

bool is_bijection(const std::vector<std::size_t>& map, std::size_t n) {
  std::vector<ElementId> narrow(map.begin(), map.end());
  return is_bijection(narrow, n);
}

// f(base1) = base2, f(s*g) = sigma(s)*f(g). Returns the vertex map if the
// propagation is conflict-free and bijective.
std::optional<std::vector<ElementId>> propagate(const CayleyGraph& lhs, const CayleyGraph& rhs,
                                                const std::vector<std::size_t>& sigma,
                                                ElementId base1, ElementId base2) {
  const std::size_t n = lhs.vertex_count();
  std::vector<ElementId> f(n, kUnset), finv(n, kUnset);
  std::vector<ElementId> queue{base1};
  f[base1] = base2;
  finv[base2] = base1;
  for (std::size_t k = 0; k < queue.size(); ++k) {
    const ElementId g = queue[k];
    for (std::size_t l = 0; l < lhs.label_count(); ++l) {
      const ElementId h = lhs.succ(l)[g];
      const ElementId target = rhs.succ(sigma[l])[f[g]];
      if (f[h] == kUnset) {
        if (finv[target] != kUnset) return std::nullopt;
        f[h] = target;
        finv[target] = h;
        queue.push_back(h);
      } else if (f[h] != target) {
        return std::nullopt;
      }
    }
  }
  if (queue.size() != n) return std::nullopt;
  return f;
}

void require_connected(const CayleyGraph& graph, const char* side) {
  if (!is_connected(graph)) {
    throw ContractViolation(std::string(side) + " Cayley graph is not connected (" +
                            graph.group_descriptor() + ", " + graph.sequence_text() + ")");
  }
}

void require_connected(const UndirectedLabeledGraph& graph, const char* side) {
  if (!is_connected(graph)) {
    throw ContractViolation(std::string(side) + " undirected graph is not connected");
  }
}

class UndirectedSearch {
 public:
  UndirectedSearch(const UndirectedLabeledGraph& lhs, const UndirectedLabeledGraph& rhs,
                   const std::vector<std::size_t>& sigma)
      : lhs_(lhs), rhs_(rhs), sigma_(sigma),
        f_(lhs.vertex_count(), kUnset), finv_(lhs.vertex_count(), kUnset) {}

  std::optional<std::vector<ElementId>> run() {
    assign(lhs_.basepoint(), rhs_.basepoint());
    if (search(0, 0)) return f_;
    return std::nullopt;
  }

 private:
  void assign(ElementId from, ElementId to) {
    f_[from] = to;
    finv_[to] = from;
    queue_.push_back(from);
  }

  void undo_to(std::size_t size) {
    while (queue_.size() > size) {
      const ElementId v = queue_.back();
      queue_.pop_back();
      finv_[f_[v]] = kUnset;
      f_[v] = kUnset;
    }
  }

  bool try_pair(ElementId from, ElementId to) {
    if (f_[from] != kUnset) return f_[from] == to;
    if (finv_[to] != kUnset) return false;
    assign(from, to);
    return true;
  }

  // Work item: constraints of label `label` at queue_[index].
  bool search(std::size_t index, std::size_t label) {
    if (label == lhs_.label_count()) {
      ++index;
      label = 0;
    }
    if (index == queue_.size()) return queue_.size() == lhs_.vertex_count();
    if (lhs_.label_count() == 0) return queue_.size() == lhs_.vertex_count();
    const ElementId g = queue_[index];
    const auto& from = lhs_.neighbors(label, g);
    const auto& to = rhs_.neighbors(sigma_[label], f_[g]);
    if (from.size() != to.size()) return false;
    const std::size_t mark = queue_.size();
    if (from.size() == 1) {
      if (try_pair(from[0], to[0]) && search(index, label + 1)) return true;
      undo_to(mark);
      return false;
    }
    // Two neighbours: map the pair either way, smaller target first.
    for (int flip = 0; flip < 2; ++flip) {
      const ElementId t0 = to[flip], t1 = to[1 - flip];
      if (try_pair(from[0], t0) && try_pair(from[1], t1) && search(index, label + 1)) {
        return true;
      }
      undo_to(mark);
    }
    return false;
  }

  const UndirectedLabeledGraph& lhs_;
  const UndirectedLabeledGraph& rhs_;
  const std::vector<std::size_t>& sigma_;
  std::vector<ElementId> f_;
  std::vector<ElementId> finv_;
  std::vector<ElementId> queue_;
};

// Generic backtracking over vertex bijections. `adjacent(side, l, x, y)`
// gives the multiplicity of l-labelled edges x -> y.
template <typename Adjacency>
std::optional<std::vector<ElementId>> backtrack_vertices(std::size_t n, std::size_t labels,
                                                         const std::vector<ElementId>& order,
                                                         const std::vector<std::size_t>& sigma,
                                                         Adjacency adjacent) {
  std::vector<ElementId> f(n, kUnset);
  std::vector<char> used(n, 0);
  std::function<bool(std::size_t)> extend = [&](std::size_t depth) {
    if (depth == n) return true;
    const ElementId x = order[depth];
    for (ElementId t = 0; t < n; ++t) {
      if (used[t]) continue;
      f[x] = t;
      bool ok = true;
      for (std::size_t k = 0; k <= depth && ok; ++k) {
        const ElementId y = order[k];
        for (std::size_t l = 0; l < labels && ok; ++l) {
          ok = adjacent(0, l, x, y) == adjacent(1, sigma[l], t, f[y]) &&
               adjacent(0, l, y, x) == adjacent(1, sigma[l], f[y], t);
        }
      }
      if (ok) {
        used[t] = 1;
        if (extend(depth + 1)) return true;
        used[t] = 0;
      }
      f[x] = kUnset;
    }
    return false;
  };
  if (extend(0)) return f;
  return std::nullopt;
}

// Breadth-first order from vertex 0 over all edges, so every vertex after
// the first is adjacent to an earlier one when the graph is connected.
template <typename Neighbors>
std::vector<ElementId> traversal_order(std::size_t n, Neighbors neighbors) {
  std::vector<ElementId> order;
  std::vector<char> seen(n, 0);
  for (ElementId start = 0; start < n; ++start) {
    if (seen[start]) continue;
    seen[start] = 1;
    order.push_back(start);
    for (std::size_t k = order.size() - 1; k < order.size(); ++k) {
      for (ElementId w : neighbors(order[k])) {
        if (!seen[w]) {
          seen[w] = 1;
          order.push_back(w);
        }
      }
    }
  }
  return order;
}

void guard_brute_force(std::size_t n) {
  if (n > kBruteForceVertexLimit) {
    throw GuardError("brute-force isomorphism refuses graphs with more than " +
                     std::to_string(kBruteForceVertexLimit) + " vertices");
  }
}

}  // namespace

std::optional<IsoWitness> directed_iso(const CayleyGraph& lhs, const CayleyGraph& rhs) {
  require_connected(lhs, "left");
  require_connected(rhs, "right");
  if (lhs.vertex_count() != rhs.vertex_count() || lhs.label_count() != rhs.label_count()) {
    return std::nullopt;
  }
  std::optional<IsoWitness> found;
  for_each_label_bijection(
      lhs.label_count(),
      [&](std::size_t l, std::size_t m) { return lhs.label_order(l) == rhs.label_order(m); },
      [&](const std::vector<std::size_t>& sigma) {
        if (auto f = propagate(lhs, rhs, sigma, lhs.basepoint(), rhs.basepoint())) {
          found = IsoWitness{std::move(*f), sigma};
          return true;
        }
        return false;
      });
  if (found) {
    if (!validate_witness(lhs, rhs, *found)) {
      throw std::logic_error("directed_iso produced an invalid witness");
    }
    for (std::size_t l = 0; l < lhs.label_count(); ++l) {
      if (lhs.label_order(l) != rhs.label_order(found->label_map[l])) {
        throw std::logic_error("directed_iso witness does not preserve label orders");
      }
    }
  }
  return found;
}

std::optional<IsoWitness> undirected_iso(const UndirectedLabeledGraph& lhs,
                                         const UndirectedLabeledGraph& rhs) {
  require_connected(lhs, "left");
  require_connected(rhs, "right");
  if (lhs.vertex_count() != rhs.vertex_count() || lhs.label_count() != rhs.label_count() ||
      lhs.edges().size() != rhs.edges().size()) {
    return std::nullopt;
  }
  std::optional<IsoWitness> found;
  for_each_label_bijection(
      lhs.label_count(),
      [&](std::size_t l, std::size_t m) { return lhs.label_order(l) == rhs.label_order(m); },
      [&](const std::vector<std::size_t>& sigma) {
        if (auto f = UndirectedSearch(lhs, rhs, sigma).run()) {
          found = IsoWitness{std::move(*f), sigma};
          return true;
        }
        return false;
      });
  if (found && !validate_witness(lhs, rhs, *found)) {
    throw std::logic_error("undirected_iso produced an invalid witness");
  }
  return found;
}

std::optional<IsoWitness> brute_force_iso(const CayleyGraph& lhs, const CayleyGraph& rhs) {
  guard_brute_force(lhs.vertex_count());
  guard_brute_force(rhs.vertex_count());
  const std::size_t n = lhs.vertex_count();
  if (n != rhs.vertex_count() || lhs.label_count() != rhs.label_count()) return std::nullopt;
  const std::size_t labels = lhs.label_count();
  std::vector<std::vector<char>> adj[2];
  const CayleyGraph* sides[2] = {&lhs, &rhs};
  for (int side = 0; side < 2; ++side) {
    for (std::size_t l = 0; l < labels; ++l) {
      std::vector<char> m(n * n, 0);
      for (ElementId g = 0; g < n; ++g) m[g * n + sides[side]->succ(l)[g]] = 1;
      adj[side].push_back(std::move(m));
    }
  }
  auto adjacent = [&](int side, std::size_t l, ElementId x, ElementId y) {
    return adj[side][l][x * n + y];
  };
  const std::vector<ElementId> order = traversal_order(n, [&](ElementId v) {
    std::vector<ElementId> out;
    for (std::size_t l = 0; l < labels; ++l) {
      out.push_back(lhs.succ(l)[v]);
      out.push_back(lhs.pred(l)[v]);
    }
    return out;
  });
  std::optional<IsoWitness> found;
  for_each_label_bijection(
      labels, [](std::size_t, std::size_t) { return true; },
      [&](const std::vector<std::size_t>& sigma) {
        if (auto f = backtrack_vertices(n, labels, order, sigma, adjacent)) {
          found = IsoWitness{std::move(*f), sigma};
          return true;
        }
        return false;
      });
  return found;
}

std::optional<IsoWitness> brute_force_undirected_iso(const UndirectedLabeledGraph& lhs,
                                                     const UndirectedLabeledGraph& rhs) {
  guard_brute_force(lhs.vertex_count());
  guard_brute_force(rhs.vertex_count());
  const std::size_t n = lhs.vertex_count();
  if (n != rhs.vertex_count() || lhs.label_count() != rhs.label_count()) return std::nullopt;
  const std::size_t labels = lhs.label_count();
  std::vector<std::vector<int>> count[2];
  const UndirectedLabeledGraph* sides[2] = {&lhs, &rhs};
  for (int side = 0; side < 2; ++side) {
    for (std::size_t l = 0; l < labels; ++l) count[side].emplace_back(n * n, 0);
    for (const UndirectedEdge& e : sides[side]->edges()) {
      ++count[side][e.label][e.u * n + e.v];
      if (e.u != e.v) ++count[side][e.label][e.v * n + e.u];
    }
  }
  auto adjacent = [&](int side, std::size_t l, ElementId x, ElementId y) {
    return count[side][l][x * n + y];
  };
  const std::vector<ElementId> order = traversal_order(n, [&](ElementId v) {
    std::vector<ElementId> out;
    for (std::size_t l = 0; l < labels; ++l) {
      const auto& nb = lhs.neighbors(l, v);
      out.insert(out.end(), nb.begin(), nb.end());
    }
    return out;
  });
  std::optional<IsoWitness> found;
  for_each_label_bijection(
      labels, [](std::size_t, std::size_t) { return true; },
      [&](const std::vector<std::size_t>& sigma) {
        if (auto f = backtrack_vertices(n, labels, order, sigma, adjacent)) {
          found = IsoWitness{std::move(*f), sigma};
          return true;
        }
        return false;
      });
  return found;
}

std::vector<IsoWitness> automorphisms(const CayleyGraph& graph) {
  require_connected(graph, "input");
  std::vector<std::size_t> identity_labels(graph.label_count());
  std::iota(identity_labels.begin(), identity_labels.end(), 0);
  std::vector<IsoWitness> out;
  for (ElementId target = 0; target < graph.vertex_count(); ++target) {
    if (auto f = propagate(graph, graph, identity_labels, graph.basepoint(), target)) {
      out.push_back(IsoWitness{std::move(*f), identity_labels});
    }
  }
  return out;
}

bool validate_witness(const CayleyGraph& lhs, const CayleyGraph& rhs, const IsoWitness& w) {
  const std::size_t n = lhs.vertex_count();
  if (n != rhs.vertex_count() || lhs.label_count() != rhs.label_count()) return false;
  if (!is_bijection(w.vertex_map, n) || !is_bijection(w.label_map, lhs.label_count())) {
    return false;
  }
  for (std::size_t l = 0; l < lhs.label_count(); ++l) {
    const auto succ1 = lhs.succ(l);
    const auto succ2 = rhs.succ(w.label_map[l]);
    for (ElementId g = 0; g < n; ++g) {
      if (succ2[w.vertex_map[g]] != w.vertex_map[succ1[g]]) return false;
    }
  }
  return true;
}

bool validate_witness(const UndirectedLabeledGraph& lhs, const UndirectedLabeledGraph& rhs,
                      const IsoWitness& w) {
  const std::size_t n = lhs.vertex_count();
  if (n != rhs.vertex_count() || lhs.label_count() != rhs.label_count()) return false;
  if (!is_bijection(w.vertex_map, n) || !is_bijection(w.label_map, lhs.label_count())) {
    return false;
  }
  std::vector<UndirectedEdge> mapped;
  mapped.reserve(lhs.edges().size());
  for (const UndirectedEdge& e : lhs.edges()) {
    const ElementId u = w.vertex_map[e.u], v = w.vertex_map[e.v];
    mapped.push_back({std::min(u, v), std::max(u, v), w.label_map[e.label]});
  }
  std::sort(mapped.begin(), mapped.end());
  return mapped == rhs.edges();
}

IsoWitness inverse(const IsoWitness& witness) {
  IsoWitness out;
  out.vertex_map.resize(witness.vertex_map.size());
  out.label_map.resize(witness.label_map.size());
  for (std::size_t v = 0; v < witness.vertex_map.size(); ++v) {
    out.vertex_map[witness.vertex_map[v]] = static_cast<ElementId>(v);
  }
  for (std::size_t l = 0; l < witness.label_map.size(); ++l) {
    out.label_map[witness.label_map[l]] = l;
  }
  return out;
}

IsoWitness compose(const IsoWitness& first, const IsoWitness& second) {
  IsoWitness out;
  for (ElementId v : first.vertex_map) out.vertex_map.push_back(second.vertex_map[v]);
  for (std::size_t l : first.label_map) out.label_map.push_back(second.label_map[l]);
  return out;
}

std::string witness_to_json(const IsoWitness& witness, const CayleyGraph& lhs,
                            const CayleyGraph& rhs) {
  nlohmann::ordered_json j;
  j["vertex_map"] = witness.vertex_map;
  nlohmann::ordered_json labels = nlohmann::ordered_json::array();
  for (std::size_t l = 0; l < witness.label_map.size(); ++l) {
    labels.push_back({lhs.label_name(l), rhs.label_name(witness.label_map[l])});
  }
  j["label_map"] = std::move(labels);
  return j.dump();
}

}  // namespace presclass
