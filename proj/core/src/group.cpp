#include "presclass/group.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "presclass/error.hpp"

namespace presclass {

TableModel::TableModel(std::size_t order, std::vector<ElementId> table)
    : order_(order), table_(std::move(table)), inverse_(order, 0) {
  if (table_.size() != order_ * order_) {
    throw InvalidGroup("multiplication table has wrong size");
  }
  // The identity is the only idempotent of a group.
  ElementId identity = 0;
  bool found = false;
  for (std::size_t e = 0; e < order_ && !found; ++e) {
    if (table_[e * order_ + e] == e) {
      identity = static_cast<ElementId>(e);
      found = true;
    }
  }
  if (!found) throw InvalidGroup("multiplication table has no idempotent");
  for (std::size_t g = 0; g < order_; ++g) {
    bool have = false;
    for (std::size_t h = 0; h < order_; ++h) {
      if (table_[g * order_ + h] == identity) {
        inverse_[g] = static_cast<ElementId>(h);
        have = true;
        break;
      }
    }
    if (!have) throw InvalidGroup("element without right inverse in table");
  }
}

FiniteGroup::FiniteGroup(GroupInfo info, std::shared_ptr<const GroupModel> model) {
  auto data = std::make_shared<Data>();
  data->info = std::move(info);
  data->model = std::move(model);
  if (data->info.names.empty()) throw InvalidGroup("group has no elements");
  if (!data->model) throw InvalidGroup("group has no multiplication model");
  for (std::size_t g = 0; g < data->info.names.size(); ++g) {
    auto [it, inserted] =
        data->by_name.emplace(data->info.names[g], static_cast<ElementId>(g));
    if (!inserted) {
      throw InvalidGroup("duplicate element name '" + data->info.names[g] + "'");
    }
  }
  if (data->info.generator_names.size() != data->info.generators.size()) {
    throw InvalidGroup("generator names and generators differ in length");
  }
  data_ = std::move(data);
  validate();
}

void FiniteGroup::validate() const {
  const std::size_t n = order();
  const ElementId e = identity();
  if (e >= n) throw InvalidGroup("identity id out of range");
  for (ElementId g : generators()) {
    if (g >= n) throw InvalidGroup("generator id out of range");
  }
  for (ElementId g = 0; g < n; ++g) {
    if (mul(e, g) != g || mul(g, e) != g) {
      throw InvalidGroup("identity is not neutral for " + name(g));
    }
    const ElementId gi = inv(g);
    if (gi >= n || mul(g, gi) != e || mul(gi, g) != e) {
      throw InvalidGroup("inverse check failed for " + name(g));
    }
  }
  auto assoc_ok = [&](ElementId a, ElementId b, ElementId c) {
    return mul(mul(a, b), c) == mul(a, mul(b, c));
  };
  if (n <= kExhaustiveAxiomBound) {
    for (ElementId a = 0; a < n; ++a) {
      for (ElementId b = 0; b < n; ++b) {
        const ElementId ab = mul(a, b);
        if (ab >= n) throw InvalidGroup("product out of range");
        for (ElementId c = 0; c < n; ++c) {
          if (mul(ab, c) != mul(a, mul(b, c))) {
            throw InvalidGroup("multiplication is not associative");
          }
        }
      }
    }
  } else {
    std::mt19937_64 rng(0x5eed5eedULL);
    std::uniform_int_distribution<ElementId> pick(0, static_cast<ElementId>(n - 1));
    for (std::size_t i = 0; i < kRandomAxiomSamples; ++i) {
      const ElementId a = pick(rng), b = pick(rng), c = pick(rng);
      if (!assoc_ok(a, b, c)) {
        throw InvalidGroup("multiplication is not associative");
      }
    }
  }
}

ElementId FiniteGroup::pow(ElementId g, long long exponent) const {
  if (exponent < 0) {
    g = inv(g);
    exponent = -exponent;
  }
  ElementId result = identity();
  ElementId base = g;
  while (exponent > 0) {
    if (exponent & 1) result = mul(result, base);
    base = mul(base, base);
    exponent >>= 1;
  }
  return result;
}

std::optional<ElementId> FiniteGroup::find_name(std::string_view name) const {
  auto it = data_->by_name.find(std::string(name));
  if (it == data_->by_name.end()) return std::nullopt;
  return it->second;
}

std::optional<ElementId> FiniteGroup::resolve_literal(std::string_view text) const {
  if (auto g = find_name(text)) return g;
  if (data_->info.literal_resolver) return data_->info.literal_resolver(text);
  return std::nullopt;
}

bool FiniteGroup::is_table_backed() const {
  return dynamic_cast<const TableModel*>(data_->model.get()) != nullptr;
}

FiniteGroup FiniteGroup::materialized() const {
  const std::size_t n = order();
  if (n > kMaterializeBound || is_table_backed()) return *this;
  std::vector<ElementId> table(n * n);
  for (ElementId a = 0; a < n; ++a) {
    for (ElementId b = 0; b < n; ++b) {
      table[static_cast<std::size_t>(a) * n + b] = mul(a, b);
    }
  }
  auto data = std::make_shared<Data>(*data_);
  data->model = std::make_shared<TableModel>(n, std::move(table));
  return FiniteGroup(std::shared_ptr<const Data>(std::move(data)));
}

OrderMultiset::OrderMultiset(std::vector<std::size_t> orders)
    : values_(std::move(orders)) {
  std::sort(values_.begin(), values_.end(), std::greater<>());
}

std::string OrderMultiset::to_string() const {
  std::ostringstream out;
  out << "{{";
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i) out << ',';
    out << values_[i];
  }
  out << "}}";
  return out.str();
}

std::size_t element_order(const FiniteGroup& group, ElementId g) {
  if (!group.contains(g)) throw InvalidParameter("element id out of range");
  std::size_t k = 1;
  ElementId h = g;
  while (h != group.identity()) {
    h = group.mul(g, h);
    ++k;
  }
  return k;
}

std::vector<ElementId> closure(const FiniteGroup& group,
                               std::span<const ElementId> subset) {
  // Left-multiplying by the generators from the identity reaches exactly the
  // generated subgroup: inverses are positive powers in a finite group.
  for (ElementId s : subset) {
    if (!group.contains(s)) {
      throw InvalidParameter("element id " + std::to_string(s) +
                             " is not in " + group.descriptor());
    }
  }
  std::vector<char> seen(group.order(), 0);
  std::vector<ElementId> members{group.identity()};
  seen[group.identity()] = 1;
  for (std::size_t i = 0; i < members.size(); ++i) {
    const ElementId g = members[i];
    for (ElementId s : subset) {
      const ElementId h = group.mul(s, g);
      if (!seen[h]) {
        seen[h] = 1;
        members.push_back(h);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

bool is_generating(const FiniteGroup& group, std::span<const ElementId> seq) {
  return closure(group, seq).size() == group.order();
}

bool is_generating(const FiniteGroup& group, const GeneratingSequence& seq) {
  return is_generating(group, std::span<const ElementId>(seq.elements));
}

bool is_minimal_generating(const FiniteGroup& group,
                           std::span<const ElementId> seq) {
  if (!is_generating(group, seq)) return false;
  std::vector<ElementId> reduced;
  reduced.reserve(seq.size());
  for (std::size_t skip = 0; skip < seq.size(); ++skip) {
    reduced.clear();
    for (std::size_t i = 0; i < seq.size(); ++i) {
      if (i != skip) reduced.push_back(seq[i]);
    }
    if (is_generating(group, reduced)) return false;
  }
  return true;
}

bool is_minimal_generating(const FiniteGroup& group,
                           const GeneratingSequence& seq) {
  return is_minimal_generating(group, std::span<const ElementId>(seq.elements));
}

OrderMultiset order_multiset(const FiniteGroup& group,
                             std::span<const ElementId> seq) {
  std::vector<std::size_t> orders;
  orders.reserve(seq.size());
  for (ElementId g : seq) orders.push_back(element_order(group, g));
  return OrderMultiset(std::move(orders));
}

OrderMultiset order_multiset(const FiniteGroup& group,
                             const GeneratingSequence& seq) {
  return order_multiset(group, std::span<const ElementId>(seq.elements));
}

}  // namespace presclass
