#include <gtest/gtest.h>

#include "json.hpp"
#include "presclass/cayley_graph.hpp"
#include "presclass/descriptor.hpp"
#include "presclass/element_expr.hpp"
#include "presclass/error.hpp"
#include "presclass/families.hpp"
#include "presclass/iso.hpp"

using namespace presclass;

namespace {

std::vector<std::vector<ElementId>> generating_pairs(const FiniteGroup& g) {
  std::vector<std::vector<ElementId>> out;
  for (ElementId s = 0; s < g.order(); ++s) {
    for (ElementId t = 0; t < g.order(); ++t) {
      if (s != t && is_generating(g, std::vector<ElementId>{s, t})) out.push_back({s, t});
    }
  }
  return out;
}

CayleyGraph graph_of(const FiniteGroup& g, const char* seq) {
  return build_cayley_graph(g, parse_sequence(g, seq));
}

}  // namespace

TEST(DirectedIso, AgreesWithBruteForce) {
  for (const char* d : {"dicyclic:2", "dicyclic:3", "dihedral:4", "dihedral:6",
                        "product:cyclic:2,cyclic:6", "perm:4:(1,2,3);(2,3,4)"}) {
    const FiniteGroup g = parse_group(d);
    const auto pairs = generating_pairs(g);
    std::vector<CayleyGraph> graphs;
    for (const auto& p : pairs) graphs.push_back(build_cayley_graph(g, p));
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      for (std::size_t j = i; j < graphs.size(); ++j) {
        const auto fast = directed_iso(graphs[i], graphs[j]);
        const auto slow = brute_force_iso(graphs[i], graphs[j]);
        ASSERT_EQ(fast.has_value(), slow.has_value()) << d << " " << i << " " << j;
        if (fast) {
          EXPECT_TRUE(validate_witness(graphs[i], graphs[j], *fast));
          EXPECT_TRUE(validate_witness(graphs[i], graphs[j], *slow));
        }
      }
    }
  }
}

TEST(UndirectedIso, AgreesWithBruteForce) {
  for (const char* d : {"dicyclic:3", "dihedral:5", "perm:4:(1,2,3);(2,3,4)"}) {
    const FiniteGroup g = parse_group(d);
    const auto pairs = generating_pairs(g);
    std::vector<UndirectedLabeledGraph> graphs;
    for (const auto& p : pairs) graphs.push_back(undirected_view(build_cayley_graph(g, p)));
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      for (std::size_t j = i; j < graphs.size(); ++j) {
        const auto fast = undirected_iso(graphs[i], graphs[j]);
        const auto slow = brute_force_undirected_iso(graphs[i], graphs[j]);
        ASSERT_EQ(fast.has_value(), slow.has_value()) << d << " " << i << " " << j;
        if (fast) {
          EXPECT_TRUE(validate_witness(graphs[i], graphs[j], *fast));
        }
      }
    }
  }
}

TEST(DirectedIso, A4OrientationExample) {
  const FiniteGroup a4 = parse_group("perm:4:(1,2,3);(2,3,4)");
  const CayleyGraph lhs = graph_of(a4, "(1,2,3),(2,4,3)");
  const CayleyGraph rhs = graph_of(a4, "(1,2,3),(2,3,4)");
  EXPECT_FALSE(directed_iso(lhs, rhs).has_value());
  EXPECT_FALSE(brute_force_iso(lhs, rhs).has_value());
  const auto w = undirected_iso(undirected_view(lhs), undirected_view(rhs));
  ASSERT_TRUE(w.has_value());
  EXPECT_TRUE(validate_witness(undirected_view(lhs), undirected_view(rhs), *w));
}

TEST(DirectedIso, ReversedPairSwapsLabels) {
  const FiniteGroup g = dicyclic(5);
  const CayleyGraph ax = graph_of(g, "a,x");
  const CayleyGraph xa = graph_of(g, "x,a");
  const auto w = directed_iso(ax, xa);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(w->label_map, (std::vector<std::size_t>{1, 0}));
  EXPECT_EQ(w->vertex_map[g.identity()], g.identity());
}

TEST(DirectedIso, WitnessAlgebra) {
  const FiniteGroup g = dicyclic(3);
  const CayleyGraph p = graph_of(g, "a*x,x");
  const CayleyGraph q = graph_of(g, "x,a^5*x");
  const CayleyGraph r = graph_of(g, "a^4*x,a^3*x");
  const auto pq = directed_iso(p, q);
  const auto qr = directed_iso(q, r);
  ASSERT_TRUE(pq && qr);
  EXPECT_TRUE(validate_witness(q, p, inverse(*pq)));
  EXPECT_TRUE(validate_witness(p, r, compose(*pq, *qr)));
  IsoWitness broken = *pq;
  std::swap(broken.vertex_map[1], broken.vertex_map[2]);
  EXPECT_FALSE(validate_witness(p, q, broken));
  broken.vertex_map.pop_back();
  EXPECT_FALSE(validate_witness(p, q, broken));
}

TEST(DirectedIso, Preconditions) {
  const FiniteGroup g = dicyclic(4);
  const CayleyGraph connected = graph_of(g, "a,x");
  const CayleyGraph disconnected = graph_of(g, "a^2,x");
  EXPECT_THROW(directed_iso(connected, disconnected), ContractViolation);
  EXPECT_FALSE(directed_iso(connected, graph_of(g, "a,x,a*x")).has_value());
  EXPECT_FALSE(directed_iso(connected, graph_of(dicyclic(5), "a,x")).has_value());
  const FiniteGroup big = dicyclic(5);
  EXPECT_THROW(brute_force_iso(graph_of(big, "a,x"), graph_of(big, "a,x")), GuardError);
}

TEST(DirectedIso, LabelOrdersPreserved) {
  const FiniteGroup g = dicyclic(3);
  const auto pairs = generating_pairs(g);
  for (const auto& s : pairs) {
    for (const auto& t : pairs) {
      const CayleyGraph p = build_cayley_graph(g, s), q = build_cayley_graph(g, t);
      if (auto w = directed_iso(p, q)) {
        for (std::size_t l = 0; l < p.label_count(); ++l) {
          EXPECT_EQ(p.label_order(l), q.label_order(w->label_map[l]));
        }
      }
    }
  }
}

TEST(WitnessJson, Shape) {
  const FiniteGroup g = dicyclic(3);
  const CayleyGraph p = graph_of(g, "a,x");
  const CayleyGraph q = graph_of(g, "x,a");
  const auto w = directed_iso(p, q);
  ASSERT_TRUE(w);
  const auto j = nlohmann::json::parse(witness_to_json(*w, p, q));
  EXPECT_EQ(j.at("vertex_map").size(), 12u);
  EXPECT_EQ(j.at("label_map")[0], nlohmann::json::array({"a", "a"}));
  EXPECT_EQ(j.at("label_map")[1], nlohmann::json::array({"x", "x"}));
}
