#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "presclass/group.hpp"

namespace presclass {

struct Letter {
  std::size_t generator = 0;
  int exponent = 1;

  bool operator==(const Letter&) const = default;
};

// Word in the free group. Kept freely reduced: exponents are nonzero and
// adjacent letters use distinct generators.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters);

  const std::vector<Letter>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }

  Word inverse() const;
  Word operator*(const Word& rhs) const;
  Word power(int exponent) const;

  // Signed unit letters: +(g+1) for g, -(g+1) for g^-1.
  std::vector<int> expanded() const;
  // Expanded and cyclically reduced.
  std::vector<int> cyclically_reduced() const;

  bool operator==(const Word&) const = default;

 private:
  std::vector<Letter> letters_;
};

struct Presentation {
  std::vector<std::string> generator_names;
  // Each relator is understood as equal to the identity.
  std::vector<Word> relators;
  // Source text the presentation was parsed from (empty if built in code).
  std::string source;

  std::size_t generator_count() const { return generator_names.size(); }
};

// Grammar:
//   presentation := '<' name (',' name)* '|' [relation (',' relation)*] '>'
//   relation     := word ('=' word)*          a=b is stored as a*b^-1
//   word         := factor (['*'] factor)* | 'e'
//   factor       := (name | '(' word ')') ('^' int)?
// Throws ParseError (with position) on bad syntax or unknown generators.
Presentation parse_presentation(std::string_view text);

// Canonical text "<u,v | u^2*v^-2, u^4>"; parse_presentation(to_string(p))
// reproduces generator names and relators.
std::string to_string(const Presentation& presentation);
std::string to_string(const Word& word, std::span<const std::string> generator_names);

// Value of `word` with generator k sent to assignment[k].
ElementId evaluate(const Word& word, const FiniteGroup& group,
                   std::span<const ElementId> assignment);

// True iff every relator evaluates to the identity under `assignment`
// (indexed like presentation.generator_names).
bool check_homomorphism(const Presentation& presentation, const FiniteGroup& group,
                        std::span<const ElementId> assignment);

}  // namespace presclass
