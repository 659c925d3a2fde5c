#include "presclass/families.hpp"

#include <set>
#include <string>
#include <unordered_map>

#include "presclass/error.hpp"

namespace presclass {
namespace {

std::string power_name(const std::string& base, int exponent) {
  if (exponent == 0) return "e";
  if (exponent == 1) return base;
  return base + "^" + std::to_string(exponent);
}

// Names "e", "a", "a^2", ..., "x", "a*x", "a^2*x", ... for groups whose
// elements are a^i x^j with 0 <= i < rotations.
std::vector<std::string> rotation_reflection_names(int rotations) {
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(2 * rotations));
  for (int j = 0; j < 2; ++j) {
    for (int i = 0; i < rotations; ++i) {
      if (j == 0) {
        names.push_back(power_name("a", i));
      } else {
        names.push_back(i == 0 ? "x" : power_name("a", i) + "*x");
      }
    }
  }
  return names;
}

int mod(int value, int m) {
  const int r = value % m;
  return r < 0 ? r + m : r;
}

class DicyclicModel final : public GroupModel {
 public:
  explicit DicyclicModel(int n) : n_(n), rot_(2 * n) {}

  ElementId mul(ElementId lhs, ElementId rhs) const override {
    const int i1 = static_cast<int>(lhs) % rot_, j1 = static_cast<int>(lhs) / rot_;
    const int i2 = static_cast<int>(rhs) % rot_, j2 = static_cast<int>(rhs) / rot_;
    int i = 0, j = 0;
    if (j1 == 0) {
      // a^k a^m = a^{k+m}, a^k (a^m x) = a^{k+m} x
      i = i1 + i2;
      j = j2;
    } else if (j2 == 0) {
      // (a^k x) a^m = a^{k-m} x
      i = i1 - i2;
      j = 1;
    } else {
      // (a^k x)(a^m x) = a^{k-m+n}
      i = i1 - i2 + n_;
      j = 0;
    }
    return static_cast<ElementId>(mod(i, rot_) + rot_ * j);
  }

  ElementId inv(ElementId g) const override {
    const int i = static_cast<int>(g) % rot_, j = static_cast<int>(g) / rot_;
    // (a^k x)^-1 = a^{k+n} x
    if (j == 1) return static_cast<ElementId>(mod(i + n_, rot_) + rot_);
    return static_cast<ElementId>(mod(-i, rot_));
  }

 private:
  int n_;
  int rot_;
};

class DihedralModel final : public GroupModel {
 public:
  explicit DihedralModel(int n) : n_(n) {}

  ElementId mul(ElementId lhs, ElementId rhs) const override {
    const int i1 = static_cast<int>(lhs) % n_, j1 = static_cast<int>(lhs) / n_;
    const int i2 = static_cast<int>(rhs) % n_, j2 = static_cast<int>(rhs) / n_;
    const int i = j1 == 0 ? i1 + i2 : i1 - i2;
    return static_cast<ElementId>(mod(i, n_) + n_ * (j1 ^ j2));
  }

  ElementId inv(ElementId g) const override {
    const int i = static_cast<int>(g) % n_, j = static_cast<int>(g) / n_;
    return j == 1 ? g : static_cast<ElementId>(mod(-i, n_));
  }

 private:
  int n_;
};

class CyclicModel final : public GroupModel {
 public:
  explicit CyclicModel(int n) : n_(static_cast<ElementId>(n)) {}

  ElementId mul(ElementId lhs, ElementId rhs) const override {
    return (lhs + rhs) % n_;
  }
  ElementId inv(ElementId g) const override { return (n_ - g) % n_; }

 private:
  ElementId n_;
};

class ProductModel final : public GroupModel {
 public:
  ProductModel(FiniteGroup left, FiniteGroup right)
      : left_(std::move(left)), right_(std::move(right)),
        width_(static_cast<ElementId>(right_.order())) {}

  ElementId mul(ElementId lhs, ElementId rhs) const override {
    return left_.mul(lhs / width_, rhs / width_) * width_ +
           right_.mul(lhs % width_, rhs % width_);
  }
  ElementId inv(ElementId g) const override {
    return left_.inv(g / width_) * width_ + right_.inv(g % width_);
  }

 private:
  FiniteGroup left_;
  FiniteGroup right_;
  ElementId width_;
};

std::string permutation_key(const Permutation& p) {
  std::string key;
  key.reserve(p.degree() * 2);
  for (std::uint32_t v : p.images()) {
    key.push_back(static_cast<char>(v & 0xff));
    key.push_back(static_cast<char>(v >> 8));
  }
  return key;
}

struct PermutationIndex {
  std::vector<Permutation> elements;
  std::unordered_map<std::string, ElementId> ids;
};

class PermutationModel final : public GroupModel {
 public:
  explicit PermutationModel(std::shared_ptr<const PermutationIndex> index)
      : index_(std::move(index)) {}

  ElementId mul(ElementId lhs, ElementId rhs) const override {
    return lookup(index_->elements[lhs] * index_->elements[rhs]);
  }
  ElementId inv(ElementId g) const override {
    return lookup(index_->elements[g].inverse());
  }

 private:
  ElementId lookup(const Permutation& p) const {
    return index_->ids.at(permutation_key(p));
  }

  std::shared_ptr<const PermutationIndex> index_;
};

std::string bracket_if_needed(const std::string& descriptor) {
  int depth = 0;
  for (char c : descriptor) {
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    if (c == ',' && depth == 0) return "[" + descriptor + "]";
  }
  return descriptor;
}

}  // namespace

ElementId dicyclic_id(int n, DicyclicElement element) {
  return static_cast<ElementId>(mod(element.i, 2 * n) + 2 * n * element.j);
}

DicyclicElement dicyclic_element(int n, ElementId id) {
  return {static_cast<int>(id) % (2 * n), static_cast<int>(id) / (2 * n)};
}

FiniteGroup dicyclic(int n) {
  if (n < 2) {
    throw InvalidParameter("dicyclic group needs n >= 2, got " + std::to_string(n));
  }
  GroupInfo info;
  info.descriptor = "dicyclic:" + std::to_string(n);
  info.family = GroupFamily::kDicyclic;
  info.parameter = n;
  info.names = rotation_reflection_names(2 * n);
  info.generator_names = {"a", "x"};
  info.generators = {dicyclic_id(n, {1, 0}), dicyclic_id(n, {0, 1})};
  return FiniteGroup(std::move(info), std::make_shared<DicyclicModel>(n));
}

FiniteGroup dihedral(int n) {
  if (n < 3) {
    throw InvalidParameter("dihedral group needs n >= 3, got " + std::to_string(n));
  }
  GroupInfo info;
  info.descriptor = "dihedral:" + std::to_string(n);
  info.family = GroupFamily::kDihedral;
  info.parameter = n;
  info.names = rotation_reflection_names(n);
  info.generator_names = {"a", "x"};
  info.generators = {1, static_cast<ElementId>(n)};
  return FiniteGroup(std::move(info), std::make_shared<DihedralModel>(n));
}

FiniteGroup cyclic(int n) {
  if (n < 1) {
    throw InvalidParameter("cyclic group needs n >= 1, got " + std::to_string(n));
  }
  GroupInfo info;
  info.descriptor = "cyclic:" + std::to_string(n);
  info.family = GroupFamily::kCyclic;
  info.parameter = n;
  for (int i = 0; i < n; ++i) info.names.push_back(power_name("g", i));
  if (n > 1) {
    info.generator_names = {"g"};
    info.generators = {1};
  }
  return FiniteGroup(std::move(info), std::make_shared<CyclicModel>(n));
}

FiniteGroup direct_product(const FiniteGroup& left, const FiniteGroup& right) {
  const std::size_t width = right.order();
  if (left.order() * width > std::size_t{1} << 24) {
    throw InvalidParameter("direct product too large");
  }
  GroupInfo info;
  info.descriptor = "product:" + bracket_if_needed(left.descriptor()) + "," +
                    bracket_if_needed(right.descriptor());
  info.family = GroupFamily::kProduct;
  info.identity = static_cast<ElementId>(left.identity() * width + right.identity());
  for (ElementId l = 0; l < left.order(); ++l) {
    for (ElementId r = 0; r < width; ++r) {
      info.names.push_back("(" + left.name(l) + "," + right.name(r) + ")");
    }
  }
  std::vector<std::string> gen_names;
  for (std::size_t k = 0; k < left.generators().size(); ++k) {
    info.generators.push_back(
        static_cast<ElementId>(left.generators()[k] * width + right.identity()));
    gen_names.push_back(left.generator_names()[k]);
  }
  for (std::size_t k = 0; k < right.generators().size(); ++k) {
    info.generators.push_back(
        static_cast<ElementId>(left.identity() * width + right.generators()[k]));
    gen_names.push_back(right.generator_names()[k]);
  }
  std::set<std::string> distinct(gen_names.begin(), gen_names.end());
  if (distinct.size() != gen_names.size() || distinct.count("e")) {
    for (std::size_t k = 0; k < gen_names.size(); ++k) {
      gen_names[k] = "g" + std::to_string(k + 1);
    }
  }
  info.generator_names = std::move(gen_names);
  return FiniteGroup(std::move(info), std::make_shared<ProductModel>(left, right));
}

FiniteGroup from_permutations(std::size_t degree,
                              const std::vector<Permutation>& generators,
                              std::size_t cap) {
  if (degree < 1) throw InvalidParameter("permutation degree must be >= 1");
  for (const Permutation& g : generators) {
    if (g.degree() != degree) {
      throw InvalidParameter("generator degree does not match group degree");
    }
  }
  auto index = std::make_shared<PermutationIndex>();
  auto add = [&](Permutation p) {
    auto [it, inserted] = index->ids.emplace(
        permutation_key(p), static_cast<ElementId>(index->elements.size()));
    if (inserted) {
      if (index->elements.size() >= cap) {
        throw ClosureLimitError("permutation closure exceeds " +
                                std::to_string(cap) + " elements");
      }
      index->elements.push_back(std::move(p));
    }
  };
  add(Permutation(degree));
  for (std::size_t i = 0; i < index->elements.size(); ++i) {
    for (const Permutation& g : generators) add(g * index->elements[i]);
  }

  GroupInfo info;
  info.family = GroupFamily::kPermutation;
  info.parameter = static_cast<int>(degree);
  info.descriptor = "perm:" + std::to_string(degree) + ":";
  for (std::size_t k = 0; k < generators.size(); ++k) {
    if (k) info.descriptor += ";";
    info.descriptor += generators[k].to_cycle_string();
  }
  for (const Permutation& p : index->elements) {
    info.names.push_back(p.is_identity() ? "e" : p.to_cycle_string());
  }
  info.literal_resolver = [index, degree](std::string_view text) -> std::optional<ElementId> {
    try {
      auto it = index->ids.find(permutation_key(parse_cycles(text, degree)));
      if (it == index->ids.end()) return std::nullopt;
      return it->second;
    } catch (const Error&) {
      return std::nullopt;
    }
  };

  const std::size_t n = index->elements.size();
  auto model = std::make_shared<PermutationModel>(index);
  if (n <= 512) {
    std::vector<ElementId> table(n * n);
    for (ElementId a = 0; a < n; ++a) {
      for (ElementId b = 0; b < n; ++b) table[a * n + b] = model->mul(a, b);
    }
    return FiniteGroup(std::move(info), std::make_shared<TableModel>(n, std::move(table)));
  }
  return FiniteGroup(std::move(info), std::move(model));
}

}  // namespace presclass
