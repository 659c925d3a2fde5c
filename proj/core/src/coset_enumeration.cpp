#include "presclass/coset_enumeration.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <string>

#include "presclass/error.hpp"

namespace presclass {

std::size_t default_max_cosets(std::optional<std::size_t> expected_order) {
  if (expected_order) return std::max<std::size_t>(16 * *expected_order, 16);
  return kDefaultMaxCosets;
}

CosetTable::CosetTable(std::size_t generator_count, std::size_t rows)
    : columns_(2 * generator_count), rows_(rows),
      entries_(rows * 2 * generator_count, kUndefined) {}

bool CosetTable::is_closed() const {
  return std::none_of(entries_.begin(), entries_.end(),
                      [](std::int32_t v) { return v == kUndefined; });
}

std::optional<std::int32_t> CosetTable::trace(std::size_t coset,
                                              const std::vector<int>& letters) const {
  std::int32_t c = static_cast<std::int32_t>(coset);
  for (int letter : letters) {
    const std::size_t column = letter > 0 ? 2 * static_cast<std::size_t>(letter - 1)
                                          : 2 * static_cast<std::size_t>(-letter - 1) + 1;
    c = at(static_cast<std::size_t>(c), column);
    if (c == kUndefined) return std::nullopt;
  }
  return c;
}

namespace {

struct CapReached {};

class Enumerator {
 public:
  Enumerator(const Presentation& presentation, std::size_t max_cosets)
      : columns_(2 * presentation.generator_count()), max_cosets_(max_cosets) {
    for (const Word& relator : presentation.relators) {
      std::vector<int> columns;
      for (int letter : relator.cyclically_reduced()) {
        columns.push_back(letter > 0 ? 2 * (letter - 1) : 2 * (-letter - 1) + 1);
      }
      if (!columns.empty()) relators_.push_back(std::move(columns));
    }
  }

  // Returns false if the cap was reached.
  bool run() {
    try {
      new_row();
      for (std::size_t c = 0; c < parent_.size(); ++c) {
        for (const auto& relator : relators_) {
          if (!alive(c)) break;
          scan_and_fill(static_cast<int>(c), relator);
        }
        for (std::size_t x = 0; x < columns_ && alive(c); ++x) {
          if (entry(static_cast<int>(c), x) < 0) define(static_cast<int>(c), x);
        }
      }
      return true;
    } catch (const CapReached&) {
      return false;
    }
  }

  std::size_t rows() const { return parent_.size(); }

  // Live cosets renumbered ascending.
  CosetTable compact() {
    std::vector<std::int32_t> number(parent_.size(), -1);
    std::size_t live = 0;
    for (std::size_t c = 0; c < parent_.size(); ++c) {
      if (alive(c)) number[c] = static_cast<std::int32_t>(live++);
    }
    CosetTable table(columns_ / 2, live);
    for (std::size_t c = 0; c < parent_.size(); ++c) {
      if (!alive(c)) continue;
      for (std::size_t x = 0; x < columns_; ++x) {
        const int target = entry(static_cast<int>(c), x);
        table.at(static_cast<std::size_t>(number[c]), x) =
            target < 0 ? CosetTable::kUndefined : number[static_cast<std::size_t>(rep(target))];
      }
    }
    return table;
  }

 private:
  static std::size_t inverse_column(std::size_t x) { return x ^ 1u; }

  int& entry(int coset, std::size_t column) {
    return table_[static_cast<std::size_t>(coset) * columns_ + column];
  }
  bool alive(std::size_t c) const { return parent_[c] == static_cast<int>(c); }

  int new_row() {
    if (parent_.size() >= max_cosets_) throw CapReached{};
    const int id = static_cast<int>(parent_.size());
    parent_.push_back(id);
    table_.resize(table_.size() + columns_, -1);
    return id;
  }

  void define(int coset, std::size_t x) {
    const int d = new_row();
    entry(coset, x) = d;
    entry(d, inverse_column(x)) = coset;
  }

  void scan_and_fill(int coset, const std::vector<int>& word) {
    int f = coset, b = coset;
    std::size_t i = 0;
    std::size_t j = word.size();  // one past the last unscanned letter
    while (true) {
      while (i < word.size() && entry(f, static_cast<std::size_t>(word[i])) >= 0) {
        f = entry(f, static_cast<std::size_t>(word[i]));
        ++i;
      }
      if (i == word.size()) {
        if (f != coset) coincidence(f, coset);
        return;
      }
      while (j > i && entry(b, inverse_column(static_cast<std::size_t>(word[j - 1]))) >= 0) {
        b = entry(b, inverse_column(static_cast<std::size_t>(word[j - 1])));
        --j;
      }
      if (j == i) {
        coincidence(f, b);
        return;
      }
      if (j == i + 1) {
        // Deduction: the single missing letter closes the cycle.
        entry(f, static_cast<std::size_t>(word[i])) = b;
        entry(b, inverse_column(static_cast<std::size_t>(word[i]))) = f;
        return;
      }
      define(f, static_cast<std::size_t>(word[i]));
    }
  }

  int rep(int c) {
    int root = c;
    while (parent_[static_cast<std::size_t>(root)] != root) {
      root = parent_[static_cast<std::size_t>(root)];
    }
    while (parent_[static_cast<std::size_t>(c)] != root) {
      const int next = parent_[static_cast<std::size_t>(c)];
      parent_[static_cast<std::size_t>(c)] = root;
      c = next;
    }
    return root;
  }

  // The smaller coset survives; the larger is queued for processing.
  void merge(int k, int l, std::deque<int>& queue) {
    const int a = rep(k), b = rep(l);
    if (a == b) return;
    const int keep = std::min(a, b), drop = std::max(a, b);
    parent_[static_cast<std::size_t>(drop)] = keep;
    queue.push_back(drop);
  }

  void coincidence(int a, int b) {
    std::deque<int> queue;
    merge(a, b, queue);
    while (!queue.empty()) {
      const int gamma = queue.front();
      queue.pop_front();
      for (std::size_t x = 0; x < columns_; ++x) {
        const int delta = entry(gamma, x);
        if (delta < 0) continue;
        entry(delta, inverse_column(x)) = -1;
        const int mu = rep(gamma), nu = rep(delta);
        if (entry(mu, x) >= 0) {
          merge(nu, entry(mu, x), queue);
        } else if (entry(nu, inverse_column(x)) >= 0) {
          merge(mu, entry(nu, inverse_column(x)), queue);
        } else {
          entry(mu, x) = nu;
          entry(nu, inverse_column(x)) = mu;
        }
      }
    }
  }

  std::size_t columns_;
  std::size_t max_cosets_;
  std::vector<std::vector<int>> relators_;
  std::vector<int> table_;
  std::vector<int> parent_;
};

// Realises the closed table as a group: element i is the coset reached by a
// breadth-first spanning-tree word, and i*j is i followed by j's word.
FiniteGroup realize(const Presentation& presentation, const CosetTable& table) {
  const std::size_t n = table.rows();
  const std::size_t columns = table.columns();
  std::vector<std::int32_t> order_of(n, -1);  // coset -> element id
  std::vector<std::int32_t> coset_of;          // element id -> coset
  std::vector<std::int32_t> parent;            // element id -> parent element id
  std::vector<std::size_t> via;                // element id -> column from parent
  std::vector<Word> words;
  order_of[0] = 0;
  coset_of.push_back(0);
  parent.push_back(-1);
  via.push_back(0);
  words.emplace_back();
  for (std::size_t k = 0; k < coset_of.size(); ++k) {
    const std::size_t c = static_cast<std::size_t>(coset_of[k]);
    for (std::size_t x = 0; x < columns; ++x) {
      const std::size_t d = static_cast<std::size_t>(table.at(c, x));
      if (order_of[d] >= 0) continue;
      order_of[d] = static_cast<std::int32_t>(coset_of.size());
      coset_of.push_back(static_cast<std::int32_t>(d));
      parent.push_back(static_cast<std::int32_t>(k));
      via.push_back(x);
      const int exponent = (x % 2 == 0) ? 1 : -1;
      words.push_back(words[k] * Word({Letter{x / 2, exponent}}));
    }
  }

  std::vector<ElementId> mul(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    mul[i * n] = static_cast<ElementId>(i);
    for (std::size_t j = 1; j < n; ++j) {
      const std::size_t prefix = mul[i * n + static_cast<std::size_t>(parent[j])];
      const auto coset = static_cast<std::size_t>(coset_of[prefix]);
      mul[i * n + j] = static_cast<ElementId>(order_of[static_cast<std::size_t>(table.at(coset, via[j]))]);
    }
  }

  GroupInfo info;
  info.descriptor = presentation.source.empty() ? to_string(presentation) : presentation.source;
  info.family = GroupFamily::kPresented;
  for (const Word& w : words) info.names.push_back(to_string(w, presentation.generator_names));
  info.generator_names = presentation.generator_names;
  for (std::size_t g = 0; g < presentation.generator_count(); ++g) {
    info.generators.push_back(static_cast<ElementId>(order_of[static_cast<std::size_t>(table.at(0, 2 * g))]));
  }
  return FiniteGroup(std::move(info), std::make_shared<TableModel>(n, std::move(mul)));
}

}  // namespace

CosetEnumeration todd_coxeter(const Presentation& presentation, std::size_t max_cosets) {
  if (max_cosets < 1) throw InvalidParameter("max_cosets must be >= 1");
  if (presentation.generator_count() == 0) {
    throw InvalidParameter("presentation has no generators");
  }
  Enumerator enumerator(presentation, max_cosets);
  CosetEnumeration result;
  result.complete = enumerator.run();
  result.cosets_defined = enumerator.rows();
  result.table = enumerator.compact();
  if (result.complete && result.table.rows() <= FiniteGroup::kMaterializeBound) {
    result.group = realize(presentation, result.table);
  }
  return result;
}

}  // namespace presclass
