#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace presclass {

// Elements of every group are dense ids 0..order-1.
using ElementId = std::uint32_t;

enum class GroupFamily {
  kDicyclic,
  kDihedral,
  kCyclic,
  kProduct,
  kPermutation,
  kPresented,
  kTable,
};

// Multiplication backend. Implementations are immutable once constructed.
class GroupModel {
 public:
  virtual ~GroupModel() = default;
  virtual ElementId mul(ElementId lhs, ElementId rhs) const = 0;
  virtual ElementId inv(ElementId g) const = 0;
};

// Dense multiplication table backend.
class TableModel final : public GroupModel {
 public:
  // `table[i * order + j]` is the product i*j.
  TableModel(std::size_t order, std::vector<ElementId> table);

  ElementId mul(ElementId lhs, ElementId rhs) const override {
    return table_[static_cast<std::size_t>(lhs) * order_ + rhs];
  }
  ElementId inv(ElementId g) const override { return inverse_[g]; }

 private:
  std::size_t order_;
  std::vector<ElementId> table_;
  std::vector<ElementId> inverse_;
};

// Everything about a group except its multiplication.
struct GroupInfo {
  std::string descriptor;
  GroupFamily family = GroupFamily::kTable;
  // Family parameter: n for dicyclic/dihedral/cyclic, degree for permutations.
  int parameter = 0;
  ElementId identity = 0;
  std::vector<std::string> names;
  // Named generators usable in element expressions (may be empty).
  std::vector<std::string> generator_names;
  std::vector<ElementId> generators;
  // Resolves parenthesised literals such as "(1,2,3)" for families whose
  // element syntax is not a plain name. Falls back to exact name lookup.
  std::function<std::optional<ElementId>(std::string_view)> literal_resolver;
};

// A concrete finite group. Cheap to copy; all state is shared and immutable,
// so a FiniteGroup can be read from many threads at once.
class FiniteGroup {
 public:
  // Associativity is checked exhaustively for order <= this bound and by
  // random triples above it.
  static constexpr std::size_t kExhaustiveAxiomBound = 200;
  static constexpr std::size_t kRandomAxiomSamples = 100000;
  // Largest order for which materialized() builds a dense table.
  static constexpr std::size_t kMaterializeBound = 4096;

  // Validates the group axioms and name uniqueness; throws InvalidGroup.
  FiniteGroup(GroupInfo info, std::shared_ptr<const GroupModel> model);

  std::size_t order() const { return data_->info.names.size(); }
  ElementId identity() const { return data_->info.identity; }
  ElementId mul(ElementId lhs, ElementId rhs) const {
    return data_->model->mul(lhs, rhs);
  }
  ElementId inv(ElementId g) const { return data_->model->inv(g); }
  ElementId pow(ElementId g, long long exponent) const;

  bool contains(ElementId g) const { return g < order(); }
  const std::string& name(ElementId g) const { return data_->info.names.at(g); }
  const std::vector<std::string>& names() const { return data_->info.names; }
  std::optional<ElementId> find_name(std::string_view name) const;
  std::optional<ElementId> resolve_literal(std::string_view text) const;

  const std::string& descriptor() const { return data_->info.descriptor; }
  GroupFamily family() const { return data_->info.family; }
  int parameter() const { return data_->info.parameter; }
  const std::vector<std::string>& generator_names() const {
    return data_->info.generator_names;
  }
  const std::vector<ElementId>& generators() const {
    return data_->info.generators;
  }
  const GroupInfo& info() const { return data_->info; }

  // Same group backed by a dense table (when order <= kMaterializeBound and
  // the model is not already a table); otherwise returns *this.
  FiniteGroup materialized() const;
  bool is_table_backed() const;

 private:
  struct Data {
    GroupInfo info;
    std::shared_ptr<const GroupModel> model;
    std::unordered_map<std::string, ElementId> by_name;
  };

  FiniteGroup(std::shared_ptr<const Data> data) : data_(std::move(data)) {}
  void validate() const;

  std::shared_ptr<const Data> data_;
};

// Ordered tuple of elements. Duplicates are allowed at the type level.
struct GeneratingSequence {
  std::vector<ElementId> elements;
  std::string group;

  std::size_t size() const { return elements.size(); }
  bool operator==(const GeneratingSequence&) const = default;
};

// Multiset of element orders, stored sorted in descending order so that it
// prints like {{2n,4}}.
class OrderMultiset {
 public:
  OrderMultiset() = default;
  explicit OrderMultiset(std::vector<std::size_t> orders);

  const std::vector<std::size_t>& values() const { return values_; }
  std::size_t size() const { return values_.size(); }
  std::string to_string() const;

  bool operator==(const OrderMultiset&) const = default;
  auto operator<=>(const OrderMultiset&) const = default;

 private:
  std::vector<std::size_t> values_;
};

std::size_t element_order(const FiniteGroup& group, ElementId g);

// Subgroup generated by `subset`, ascending ids.
std::vector<ElementId> closure(const FiniteGroup& group,
                               std::span<const ElementId> subset);
bool is_generating(const FiniteGroup& group, std::span<const ElementId> seq);
bool is_generating(const FiniteGroup& group, const GeneratingSequence& seq);
// Generating, and deleting any single entry leaves a non-generating sequence.
bool is_minimal_generating(const FiniteGroup& group,
                           std::span<const ElementId> seq);
bool is_minimal_generating(const FiniteGroup& group,
                           const GeneratingSequence& seq);

OrderMultiset order_multiset(const FiniteGroup& group,
                             std::span<const ElementId> seq);
OrderMultiset order_multiset(const FiniteGroup& group,
                             const GeneratingSequence& seq);

}  // namespace presclass
