#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "presclass/group.hpp"
#include "presclass/presentation.hpp"

namespace presclass {

inline constexpr std::size_t kDefaultMaxCosets = 65536;

// 16 x expected order when an expectation is known, else kDefaultMaxCosets.
std::size_t default_max_cosets(std::optional<std::size_t> expected_order = std::nullopt);

// Action of the generators on cosets of the trivial subgroup. Column 2k is
// generator k, column 2k+1 its inverse. kUndefined marks a missing entry.
class CosetTable {
 public:
  static constexpr std::int32_t kUndefined = -1;

  CosetTable() = default;
  CosetTable(std::size_t generator_count, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t columns() const { return columns_; }
  std::int32_t at(std::size_t coset, std::size_t column) const {
    return entries_[coset * columns_ + column];
  }
  std::int32_t& at(std::size_t coset, std::size_t column) {
    return entries_[coset * columns_ + column];
  }

  // No undefined entries.
  bool is_closed() const;
  // Coset reached from `coset` by reading the signed unit letters of a word
  // (see Word::expanded); nullopt if an entry is undefined.
  std::optional<std::int32_t> trace(std::size_t coset, const std::vector<int>& letters) const;

 private:
  std::size_t columns_ = 0;
  std::size_t rows_ = 0;
  std::vector<std::int32_t> entries_;
};

struct CosetEnumeration {
  bool complete = false;
  // Rows allocated during the run, live or dead.
  std::size_t cosets_defined = 0;
  // Compacted table of live cosets; coset 0 is the trivial subgroup.
  CosetTable table;
  // Present when complete and the order is small enough to tabulate.
  std::optional<FiniteGroup> group;

  std::size_t order() const { return table.rows(); }
};

// HLT (relator-tracing) enumeration over the trivial subgroup with
// immediate coincidence processing. Deterministic: cosets are scanned in ascending order and
// relators in declaration order. On success the realised group has one
// element per live coset, named by a shortest word in the generators, and
// the presentation's generators as its named generators. Exceeding
// `max_cosets` yields complete == false rather than an error.
CosetEnumeration todd_coxeter(const Presentation& presentation,
                              std::size_t max_cosets = kDefaultMaxCosets);

}  // namespace presclass
