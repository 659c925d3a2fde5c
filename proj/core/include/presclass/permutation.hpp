#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace presclass {

// Bijection on {0..degree-1}. Printed and parsed 1-based in cycle notation.
// Composition is right-to-left: (p * q)(i) = p(q(i)).
class Permutation {
 public:
  explicit Permutation(std::size_t degree);
  // Throws InvalidParameter unless `images` is a bijection.
  explicit Permutation(std::vector<std::uint32_t> images);

  std::size_t degree() const { return images_.size(); }
  std::uint32_t operator()(std::uint32_t point) const { return images_[point]; }
  const std::vector<std::uint32_t>& images() const { return images_; }
  bool is_identity() const;

  Permutation operator*(const Permutation& rhs) const;
  Permutation inverse() const;

  // Cycle notation without fixed points, e.g. "(1,2,3)(4,5)"; "()" for the
  // identity.
  std::string to_cycle_string() const;

  bool operator==(const Permutation&) const = default;

 private:
  std::vector<std::uint32_t> images_;
};

// Parses a product of cycles such as "(1,2)(3,4)" or "()" on {1..degree}.
// Cycles are composed right-to-left like the permutations themselves.
// Throws ParseError on malformed text or points outside the degree.
Permutation parse_cycles(std::string_view text, std::size_t degree);

// Splits a generator list "(1,2);(1,2,3,4)" or "(1,2),(1,2,3,4)" into
// individual cycle-product strings.
std::vector<std::string> split_permutation_list(std::string_view text);

}  // namespace presclass
