#include <gtest/gtest.h>

#include <map>
#include <random>

#include "oracles.hpp"
#include "presclass/cayley_graph.hpp"
#include "presclass/descriptor.hpp"
#include "presclass/element_expr.hpp"
#include "presclass/error.hpp"
#include "presclass/families.hpp"
#include "presclass/group.hpp"
#include "presclass/permutation.hpp"

using namespace presclass;

namespace {

// Library multiplication agrees with a reference table under a fixed id
// correspondence.
void expect_same_table(const FiniteGroup& g, const oracle::Table& t,
                       const std::vector<ElementId>& to_lib) {
  ASSERT_EQ(g.order(), t.order());
  for (std::size_t p = 0; p < t.order(); ++p) {
    for (std::size_t q = 0; q < t.order(); ++q) {
      ASSERT_EQ(g.mul(to_lib[p], to_lib[q]), to_lib[t.mul[p][q]]) << p << " * " << q;
    }
  }
}

std::vector<ElementId> identity_ids(std::size_t n) {
  std::vector<ElementId> ids(n);
  for (std::size_t k = 0; k < n; ++k) ids[k] = static_cast<ElementId>(k);
  return ids;
}

}  // namespace

TEST(Dicyclic, MatchesMatrixModel) {
  for (int n = 2; n <= 12; ++n) {
    const FiniteGroup g = dicyclic(n);
    EXPECT_EQ(g.order(), static_cast<std::size_t>(4 * n));
    // The matrix model uses the same a^i x^j -> i + 2n j layout.
    expect_same_table(g, oracle::dicyclic_matrices(n), identity_ids(4 * n));
  }
}

TEST(Dicyclic, NamesAndGenerators) {
  const FiniteGroup g = dicyclic(3);
  EXPECT_EQ(g.name(g.identity()), "e");
  EXPECT_EQ(g.name(dicyclic_id(3, {1, 0})), "a");
  EXPECT_EQ(g.name(dicyclic_id(3, {2, 1})), "a^2*x");
  EXPECT_EQ(g.generator_names(), (std::vector<std::string>{"a", "x"}));
  EXPECT_EQ(parse_element(g, "x^2"), parse_element(g, "a^3"));
  EXPECT_EQ(parse_element(g, "x^-1*a*x"), parse_element(g, "a^-1"));
}

TEST(Dicyclic, ElementOrdersMatchMatrices) {
  for (int n = 2; n <= 9; ++n) {
    const FiniteGroup g = dicyclic(n);
    for (int j = 0; j < 2; ++j) {
      for (int i = 0; i < 2 * n; ++i) {
        EXPECT_EQ(element_order(g, dicyclic_id(n, {i, j})), oracle::dicyclic_element_order(n, i, j));
      }
    }
  }
}

TEST(Dicyclic, Q8Census) {
  const FiniteGroup g = dicyclic(2);
  std::map<std::size_t, std::size_t> histogram;
  for (ElementId e = 0; e < g.order(); ++e) ++histogram[element_order(g, e)];
  // Matrix model: one identity, one -I, six elements of order 4.
  std::map<std::size_t, std::size_t> expected;
  const oracle::Table t = oracle::dicyclic_matrices(2);
  for (std::size_t e = 0; e < t.order(); ++e) ++expected[oracle::element_order(t, static_cast<int>(e))];
  EXPECT_EQ(histogram, expected);
  EXPECT_EQ(histogram, (std::map<std::size_t, std::size_t>{{1, 1}, {2, 1}, {4, 6}}));
}

TEST(Dihedral, MatchesPolygonModel) {
  for (int n = 3; n <= 10; ++n) {
    const FiniteGroup g = dihedral(n);
    EXPECT_EQ(g.order(), static_cast<std::size_t>(2 * n));
    expect_same_table(g, oracle::dihedral_polygon(n), identity_ids(2 * n));
  }
}

TEST(Families, RejectBadParameters) {
  EXPECT_THROW(dicyclic(1), InvalidParameter);
  EXPECT_THROW(dihedral(2), InvalidParameter);
  EXPECT_THROW(cyclic(0), InvalidParameter);
}

TEST(Cyclic, Basics) {
  const FiniteGroup g = cyclic(6);
  EXPECT_EQ(g.order(), 6u);
  EXPECT_EQ(element_order(g, 1), 6u);
  EXPECT_EQ(element_order(g, 2), 3u);
  EXPECT_EQ(g.name(3), "g^3");
  EXPECT_TRUE(cyclic(1).generators().empty());
}

TEST(Product, MatchesProductTable) {
  const FiniteGroup g = direct_product(cyclic(3), direct_product(cyclic(2), cyclic(2)));
  EXPECT_EQ(g.order(), 12u);
  const oracle::Table t = oracle::product_table(
      oracle::cyclic_table(3), oracle::product_table(oracle::cyclic_table(2), oracle::cyclic_table(2)));
  expect_same_table(g, t, identity_ids(12));
  EXPECT_EQ(g.descriptor(), "product:cyclic:3,[product:cyclic:2,cyclic:2]");
  // Clashing generator names are renamed.
  EXPECT_EQ(direct_product(cyclic(2), cyclic(2)).generator_names(),
            (std::vector<std::string>{"g1", "g2"}));
  EXPECT_EQ(g.generator_names(), (std::vector<std::string>{"g", "g1", "g2"}));
}

TEST(Product, DescriptorRoundTrip) {
  const FiniteGroup g = parse_group("product:cyclic:3,[product:cyclic:2,cyclic:2]");
  EXPECT_EQ(g.order(), 12u);
  EXPECT_EQ(parse_group(g.descriptor()).descriptor(), g.descriptor());
  const FiniteGroup h = parse_group("product:dihedral:3,cyclic:2");
  EXPECT_EQ(h.order(), 12u);
  EXPECT_EQ(h.name(parse_element(h, "(x,g)")), "(x,g)");
}

TEST(Permutation, CycleNotation) {
  const Permutation p = parse_cycles("(1,2,3)(4,5)", 5);
  EXPECT_EQ(p.to_cycle_string(), "(1,2,3)(4,5)");
  EXPECT_EQ(p(0), 1u);
  EXPECT_EQ(p(2), 0u);
  EXPECT_TRUE(parse_cycles("()", 3).is_identity());
  // Right-to-left: (1,2)(2,3) sends 3 -> 2 -> 1.
  EXPECT_EQ(parse_cycles("(1,2)(2,3)", 3)(2), 0u);
  EXPECT_EQ((p * p.inverse()).to_cycle_string(), "()");
  EXPECT_THROW(parse_cycles("(1,6)", 5), ParseError);
  EXPECT_THROW(parse_cycles("(1,1)", 5), ParseError);
  EXPECT_THROW(parse_cycles("(1,2", 5), ParseError);
}

TEST(Permutation, SymmetricGroupsMatchOracleClosure) {
  const FiniteGroup s4 = parse_group("perm:4:(1,2),(1,2,3,4)");
  EXPECT_EQ(s4.order(), 24u);
  const FiniteGroup a4 = parse_group("perm:4:(1,2,3);(2,3,4)");
  EXPECT_EQ(a4.order(), 12u);
  EXPECT_EQ(oracle::permutation_elements({{1, 0, 2, 3}, {1, 2, 3, 0}}).size(), 24u);
  EXPECT_EQ(oracle::permutation_elements({{1, 2, 0, 3}, {0, 2, 3, 1}}).size(), 12u);
  EXPECT_EQ(s4.name(s4.identity()), "e");
  EXPECT_EQ(parse_element(s4, "(1,2)*(1,2,3,4)"),
            s4.mul(parse_element(s4, "(1,2)"), parse_element(s4, "(1,2,3,4)")));
}

TEST(Permutation, ClosureCap) {
  std::vector<Permutation> gens{parse_cycles("(1,2)", 6), parse_cycles("(1,2,3,4,5,6)", 6)};
  EXPECT_EQ(from_permutations(6, gens).order(), 720u);
  EXPECT_THROW(from_permutations(6, gens, 100), ClosureLimitError);
}

TEST(Descriptor, Errors) {
  EXPECT_THROW(parse_group("dicyclic"), ParseError);
  EXPECT_THROW(parse_group("quaternion:2"), ParseError);
  EXPECT_THROW(parse_group("dicyclic:x"), ParseError);
  EXPECT_THROW(parse_group("dicyclic:1"), InvalidParameter);
  EXPECT_THROW(parse_group("perm:3:(1,4)"), ParseError);
}

TEST(ElementExpr, ParsesAndReportsPositions) {
  const FiniteGroup g = dicyclic(3);
  EXPECT_EQ(parse_element(g, "a*x"), dicyclic_id(3, {1, 1}));
  EXPECT_EQ(parse_element(g, "a^{-1}"), dicyclic_id(3, {5, 0}));
  EXPECT_EQ(parse_element(g, "e"), g.identity());
  EXPECT_EQ(parse_element(g, "a^2*x"), dicyclic_id(3, {2, 1}));
  try {
    parse_element(g, "a*y");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 2u);
  }
  EXPECT_THROW(parse_element(g, "a^"), ParseError);
  EXPECT_THROW(parse_element(g, ""), ParseError);
  const GeneratingSequence seq = parse_sequence(g, "a*x, x");
  EXPECT_EQ(seq.elements.size(), 2u);
  EXPECT_EQ(format_sequence(g, seq), "a*x,x");
}

TEST(Generation, ClosureAndMinimality) {
  const FiniteGroup g = dicyclic(3);
  const ElementId a = parse_element(g, "a"), x = parse_element(g, "x");
  const std::vector<ElementId> ax{a, x}, aa{a, parse_element(g, "a^2")};
  EXPECT_TRUE(is_generating(g, ax));
  EXPECT_TRUE(is_minimal_generating(g, ax));
  EXPECT_FALSE(is_generating(g, aa));
  EXPECT_EQ(closure(g, aa).size(), 6u);
  const std::vector<ElementId> axx{a, x, parse_element(g, "a*x")};
  EXPECT_TRUE(is_generating(g, axx));
  EXPECT_FALSE(is_minimal_generating(g, axx));
  EXPECT_EQ(order_multiset(g, ax).to_string(), "{{6,4}}");
  EXPECT_THROW(element_order(g, 99), InvalidParameter);
}

TEST(Generation, GeneratingIffCayleyGraphConnected) {
  for (const FiniteGroup& g : {dicyclic(3), dihedral(4), parse_group("perm:4:(1,2,3);(2,3,4)")}) {
    for (ElementId s = 0; s < g.order(); ++s) {
      for (ElementId t = 0; t < g.order(); ++t) {
        const std::vector<ElementId> seq{s, t};
        EXPECT_EQ(is_generating(g, seq), is_connected(build_cayley_graph(g, seq)));
      }
    }
  }
}

TEST(Generation, AgreesWithOracleClosure) {
  const FiniteGroup g = dicyclic(4);
  const oracle::Table t = oracle::dicyclic_matrices(4);
  for (ElementId s = 0; s < g.order(); ++s) {
    for (ElementId u = 0; u < g.order(); ++u) {
      const std::vector<ElementId> seq{s, u};
      EXPECT_EQ(closure(g, seq).size(),
                oracle::closure_size(t, {static_cast<int>(s), static_cast<int>(u)}));
    }
  }
}

TEST(FiniteGroup, RejectsNonGroups) {
  GroupInfo info;
  info.descriptor = "bad";
  info.names = {"e", "p"};
  // Not a group: p*p = p with identity e makes p idempotent.
  EXPECT_THROW(FiniteGroup(info, std::make_shared<TableModel>(2, std::vector<ElementId>{0, 1, 1, 1})),
               InvalidGroup);
  info.names = {"e", "e"};
  EXPECT_THROW(FiniteGroup(info, std::make_shared<TableModel>(2, std::vector<ElementId>{0, 1, 1, 0})),
               InvalidGroup);
}

TEST(FiniteGroup, MaterializedAgrees) {
  const FiniteGroup g = dicyclic(5);
  const FiniteGroup m = g.materialized();
  EXPECT_TRUE(m.is_table_backed());
  EXPECT_EQ(m.descriptor(), g.descriptor());
  for (ElementId p = 0; p < g.order(); ++p) {
    EXPECT_EQ(m.inv(p), g.inv(p));
    for (ElementId q = 0; q < g.order(); ++q) EXPECT_EQ(m.mul(p, q), g.mul(p, q));
  }
}

TEST(FiniteGroup, AxiomsOnRandomTriples) {
  std::mt19937 rng(7);
  for (const FiniteGroup& g : {dicyclic(12), dihedral(9), parse_group("perm:5:(1,2),(1,2,3,4,5)")}) {
    std::uniform_int_distribution<ElementId> pick(0, static_cast<ElementId>(g.order() - 1));
    for (int k = 0; k < 2000; ++k) {
      const ElementId p = pick(rng), q = pick(rng), r = pick(rng);
      ASSERT_EQ(g.mul(g.mul(p, q), r), g.mul(p, g.mul(q, r)));
      ASSERT_EQ(g.mul(p, g.inv(p)), g.identity());
      ASSERT_EQ(g.mul(g.identity(), p), p);
    }
  }
}

TEST(OrderMultiset, OrderingAndEquality) {
  EXPECT_EQ(OrderMultiset({4, 6}), OrderMultiset({6, 4}));
  EXPECT_EQ(OrderMultiset({3, 4}).to_string(), "{{4,3}}");
  EXPECT_GT(OrderMultiset({6, 4}), OrderMultiset({4, 4}));
  EXPECT_GT(OrderMultiset({4, 4}), OrderMultiset({4, 3}));
}
