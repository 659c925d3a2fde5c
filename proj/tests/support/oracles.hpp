#pragma once

// Test-side reference models. Nothing here calls into the library, so the
// values they produce can be used to check it.

#include <cstddef>
#include <map>
#include <vector>

namespace oracle {

// Multiplication table of a finite group on ids 0..n-1; table[i][j] = i*j.
struct Table {
  std::vector<std::vector<int>> mul;
  int identity = 0;
  std::size_t order() const { return mul.size(); }
};

// DC_{4n} realised by 2x2 complex matrices a = diag(z, 1/z), z = exp(i pi/n),
// x = [[0,-1],[1,0]]. Element a^i x^j gets id i + 2n j.
Table dicyclic_matrices(int n);
// Size of the subgroup of DC_{4n} generated by a^{i} x^{j} pairs, computed by
// closing the matrices under multiplication.
std::size_t dicyclic_closure_size(int n, const std::vector<std::pair<int, int>>& gens);
// Order of a^i x^j from matrix powers.
std::size_t dicyclic_element_order(int n, int i, int j);

// D_{2n} acting on the vertices of an n-gon; r^i s^j gets id i + n j.
Table dihedral_polygon(int n);

// Closure of permutations (0-based images) under composition (p*q)(k) = p(q(k)).
// Ids follow ascending lexicographic order of the image vectors.
Table permutation_group(const std::vector<std::vector<int>>& gens);
std::vector<std::vector<int>> permutation_elements(const std::vector<std::vector<int>>& gens);

Table cyclic_table(int n);
Table product_table(const Table& left, const Table& right);

std::size_t closure_size(const Table& t, const std::vector<int>& gens);
std::size_t element_order(const Table& t, int g);
bool generates(const Table& t, const std::vector<int>& gens);
bool minimal_generating(const Table& t, const std::vector<int>& gens);

// Canonical code of the Cayley digraph g -> s*g: the least breadth-first
// numbering over every start vertex and every ordering of the labels.
std::vector<int> canonical_code(const Table& t, const std::vector<int>& seq);

struct OracleClass {
  std::vector<std::size_t> multiset;  // descending
  std::size_t size = 0;
};

// Classes of ordered tuples of distinct elements (generating, optionally
// minimal) keyed by canonical code.
std::vector<OracleClass> classify(const Table& t, std::size_t length, bool minimal_only);
std::size_t count_generating(const Table& t, std::size_t length, bool minimal_only);

}  // namespace oracle
