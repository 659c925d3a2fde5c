#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "presclass/group.hpp"

namespace presclass {

enum class EquivalenceMode { kDirected, kUndirected };

std::string to_string(EquivalenceMode mode);
std::optional<EquivalenceMode> parse_mode(std::string_view text);

inline constexpr std::size_t kMaxSequenceLength = 4;
inline constexpr std::size_t kDefaultMaxGroupOrder = 512;

struct ClassifyOptions {
  EquivalenceMode mode = EquivalenceMode::kDirected;
  bool minimal_only = false;
  // Worker threads for the per-bucket isomorphism comparisons. The report
  // does not depend on this value.
  std::size_t jobs = 1;
  // Dicyclic groups only: merge sequences related by a^i x^j -> a^(ti+mj) x^j
  // (t a unit mod 2n) before any isomorphism call.
  bool orbit_collapse = false;
  std::size_t max_group_order = kDefaultMaxGroupOrder;
};

struct EquivalenceClass {
  GeneratingSequence representative;
  std::vector<std::string> representative_names;
  OrderMultiset order_multiset;
  std::size_t size = 0;
};

struct ClassificationReport {
  std::string group;
  std::size_t length = 0;
  EquivalenceMode mode = EquivalenceMode::kDirected;
  bool minimal_only = false;
  // Sorted by order multiset (largest first), then first-seen order.
  std::vector<EquivalenceClass> classes;
  std::size_t total = 0;
  double wall_seconds = 0.0;

  std::size_t class_count() const { return classes.size(); }
};

// Ordered L-tuples of pairwise-distinct elements that generate the group
// (and are minimal when asked), in lexicographic id order. GuardError for
// L outside 1..4 or a group larger than `max_group_order`.
std::vector<GeneratingSequence> enumerate_generating_sequences(
    const FiniteGroup& group, std::size_t length, bool minimal_only,
    std::size_t max_group_order = kDefaultMaxGroupOrder);

ClassificationReport classify(const FiniteGroup& group, std::size_t length,
                              const ClassifyOptions& options = {});

// Classifies an explicit list of generating sequences of one common length.
// Representatives are first-seen in the given order. Throws
// ContractViolation for a non-generating or mixed-length input.
ClassificationReport classify_sequences(const FiniteGroup& group,
                                        std::span<const GeneratingSequence> sequences,
                                        const ClassifyOptions& options = {});

// Class count and multisets (with multiplicity) agree, ignoring order.
bool classify_summary_equal(const ClassificationReport& report,
                            std::span<const OrderMultiset> expected);
bool classify_summary_equal(const ClassificationReport& lhs, const ClassificationReport& rhs);

// {"group","length","mode","minimal_only","classes":[{"representative",
// "order_multiset","size"}],"total"}; wall time is left out so that output
// is reproducible.
std::string report_to_json(const ClassificationReport& report);
// Human-readable table rendered from the JSON text.
std::string report_to_table(const std::string& report_json);

}  // namespace presclass
