#include "presclass/classify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <iomanip>
#include <exception>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "presclass/cayley_graph.hpp"
#include "presclass/disjoint_sets.hpp"
#include "presclass/error.hpp"
#include "presclass/families.hpp"
#include "presclass/iso.hpp"

namespace presclass {

std::string to_string(EquivalenceMode mode) {
  return mode == EquivalenceMode::kDirected ? "directed" : "undirected";
}

std::optional<EquivalenceMode> parse_mode(std::string_view text) {
  if (text == "directed") return EquivalenceMode::kDirected;
  if (text == "undirected") return EquivalenceMode::kUndirected;
  return std::nullopt;
}

namespace {

void check_guards(const FiniteGroup& group, std::size_t length, std::size_t max_group_order) {
  if (length < 1 || length > kMaxSequenceLength) {
    throw GuardError("sequence length must be between 1 and " +
                     std::to_string(kMaxSequenceLength));
  }
  if (group.order() > max_group_order) {
    throw GuardError("group order " + std::to_string(group.order()) +
                     " exceeds the classification limit " + std::to_string(max_group_order));
  }
}

bool has_repeats(const std::vector<ElementId>& elements) {
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (std::size_t j = i + 1; j < elements.size(); ++j) {
      if (elements[i] == elements[j]) return true;
    }
  }
  return false;
}

// One comparison target: the graph of a class representative in the form the
// mode needs.
struct ClassGraph {
  CayleyGraph directed;
  std::optional<UndirectedLabeledGraph> undirected;
};

ClassGraph make_graph(const FiniteGroup& group, const GeneratingSequence& seq,
                      EquivalenceMode mode) {
  ClassGraph g{build_cayley_graph(group, seq), std::nullopt};
  if (mode == EquivalenceMode::kUndirected) g.undirected = undirected_view(g.directed);
  return g;
}

bool equivalent(const ClassGraph& lhs, const ClassGraph& rhs, EquivalenceMode mode) {
  if (mode == EquivalenceMode::kDirected) return directed_iso(lhs.directed, rhs.directed).has_value();
  return undirected_iso(*lhs.undirected, *rhs.undirected).has_value();
}

// Images of `seq` under a^i x^j -> a^(t i + m j) x^j for every unit t and
// every m (mod 2n). These are automorphisms of DC_{4n}.
std::vector<std::vector<ElementId>> dicyclic_orbit(int n, const std::vector<ElementId>& seq) {
  std::vector<std::vector<ElementId>> out;
  const int rot = 2 * n;
  for (int t = 1; t < rot; ++t) {
    if (std::gcd(t, rot) != 1) continue;
    for (int m = 0; m < rot; ++m) {
      std::vector<ElementId> image;
      image.reserve(seq.size());
      for (ElementId id : seq) {
        const DicyclicElement e = dicyclic_element(n, id);
        image.push_back(dicyclic_id(n, {(t * e.i + m * e.j) % rot, e.j}));
      }
      out.push_back(std::move(image));
    }
  }
  return out;
}

struct BucketClass {
  std::size_t first;  // index into the input list
  std::size_t size;
};

std::vector<BucketClass> classify_bucket(const FiniteGroup& group,
                                         std::span<const GeneratingSequence> sequences,
                                         const std::vector<std::size_t>& members,
                                         const ClassifyOptions& options) {
  DisjointSets orbits(members.size());
  if (options.orbit_collapse && group.family() == GroupFamily::kDicyclic) {
    std::map<std::vector<ElementId>, std::size_t> position;
    for (std::size_t k = 0; k < members.size(); ++k) position[sequences[members[k]].elements] = k;
    for (std::size_t k = 0; k < members.size(); ++k) {
      for (const auto& image : dicyclic_orbit(group.parameter(), sequences[members[k]].elements)) {
        auto it = position.find(image);
        if (it != position.end()) orbits.unite(k, it->second);
      }
    }
  }

  std::vector<BucketClass> classes;
  std::vector<ClassGraph> graphs;
  std::vector<std::size_t> class_of(members.size());
  for (std::size_t k = 0; k < members.size(); ++k) {
    const std::size_t leader = orbits.find(k);
    if (leader != k) {
      // Orbit leaders come first, so the leader is already placed.
      class_of[k] = class_of[leader];
      ++classes[class_of[k]].size;
      continue;
    }
    ClassGraph graph = make_graph(group, sequences[members[k]], options.mode);
    std::size_t found = classes.size();
    for (std::size_t c = 0; c < classes.size(); ++c) {
      if (equivalent(graph, graphs[c], options.mode)) {
        found = c;
        break;
      }
    }
    if (found == classes.size()) {
      classes.push_back({members[k], 0});
      graphs.push_back(std::move(graph));
    }
    class_of[k] = found;
    ++classes[found].size;
  }
  return classes;
}

}  // namespace

std::vector<GeneratingSequence> enumerate_generating_sequences(const FiniteGroup& group,
                                                               std::size_t length,
                                                               bool minimal_only,
                                                               std::size_t max_group_order) {
  check_guards(group, length, max_group_order);
  const FiniteGroup g = group.materialized();
  const auto n = static_cast<ElementId>(g.order());
  std::vector<GeneratingSequence> out;
  std::vector<ElementId> tuple;
  std::vector<char> used(n, 0);
  auto extend = [&](auto&& self) -> void {
    if (tuple.size() == length) {
      const bool keep = minimal_only ? is_minimal_generating(g, tuple) : is_generating(g, tuple);
      if (keep) out.push_back({tuple, g.descriptor()});
      return;
    }
    for (ElementId e = 0; e < n; ++e) {
      if (used[e]) continue;
      used[e] = 1;
      tuple.push_back(e);
      self(self);
      tuple.pop_back();
      used[e] = 0;
    }
  };
  extend(extend);
  return out;
}

ClassificationReport classify_sequences(const FiniteGroup& group,
                                        std::span<const GeneratingSequence> sequences,
                                        const ClassifyOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const FiniteGroup g = group.materialized();
  ClassificationReport report;
  report.group = g.descriptor();
  report.mode = options.mode;
  report.minimal_only = options.minimal_only;
  report.length = sequences.empty() ? 0 : sequences.front().size();

  // Repeated entries and (when asked) non-minimal sequences are filtered out.
  std::vector<std::size_t> kept;
  for (std::size_t k = 0; k < sequences.size(); ++k) {
    const GeneratingSequence& seq = sequences[k];
    if (seq.size() != report.length) {
      throw ContractViolation("classify_sequences needs sequences of one common length");
    }
    for (ElementId e : seq.elements) {
      if (!g.contains(e)) throw ContractViolation("sequence element out of range");
    }
    if (!is_generating(g, seq)) {
      throw ContractViolation("classify_sequences given a non-generating sequence");
    }
    if (has_repeats(seq.elements)) continue;
    if (options.minimal_only && !is_minimal_generating(g, seq)) continue;
    kept.push_back(k);
  }

  std::map<OrderMultiset, std::size_t> bucket_index;
  std::vector<OrderMultiset> bucket_keys;
  std::vector<std::vector<std::size_t>> buckets;
  for (std::size_t k : kept) {
    OrderMultiset key = order_multiset(g, sequences[k]);
    auto [it, inserted] = bucket_index.try_emplace(key, buckets.size());
    if (inserted) {
      buckets.emplace_back();
      bucket_keys.push_back(std::move(key));
    }
    buckets[it->second].push_back(k);
  }

  std::vector<std::vector<BucketClass>> results(buckets.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t b = next++; b < buckets.size(); b = next++) {
      results[b] = classify_bucket(g, sequences, buckets[b], options);
    }
  };
  const std::size_t jobs = std::clamp<std::size_t>(options.jobs, 1, std::max<std::size_t>(buckets.size(), 1));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> threads;
    std::exception_ptr failure;
    std::mutex failure_mutex;
    for (std::size_t t = 0; t < jobs; ++t) {
      threads.emplace_back([&] {
        try {
          worker();
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      });
    }
    for (auto& t : threads) t.join();
    if (failure) std::rethrow_exception(failure);
  }

  struct Placed {
    std::size_t bucket;
    BucketClass cls;
  };
  std::vector<Placed> placed;
  for (std::size_t b = 0; b < results.size(); ++b) {
    for (const BucketClass& c : results[b]) placed.push_back({b, c});
  }
  std::sort(placed.begin(), placed.end(), [&](const Placed& x, const Placed& y) {
    if (bucket_keys[x.bucket] != bucket_keys[y.bucket]) {
      return bucket_keys[x.bucket] > bucket_keys[y.bucket];
    }
    return x.cls.first < y.cls.first;
  });
  for (const Placed& p : placed) {
    EquivalenceClass c;
    c.representative = sequences[p.cls.first];
    c.representative.group = g.descriptor();
    for (ElementId e : c.representative.elements) c.representative_names.push_back(g.name(e));
    c.order_multiset = bucket_keys[p.bucket];
    c.size = p.cls.size;
    report.total += c.size;
    report.classes.push_back(std::move(c));
  }
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

ClassificationReport classify(const FiniteGroup& group, std::size_t length,
                              const ClassifyOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const FiniteGroup g = group.materialized();
  const auto sequences =
      enumerate_generating_sequences(g, length, options.minimal_only, options.max_group_order);
  ClassificationReport report = classify_sequences(g, sequences, options);
  report.length = length;
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

bool classify_summary_equal(const ClassificationReport& report,
                            std::span<const OrderMultiset> expected) {
  if (report.classes.size() != expected.size()) return false;
  std::vector<OrderMultiset> observed;
  for (const auto& c : report.classes) observed.push_back(c.order_multiset);
  std::vector<OrderMultiset> wanted(expected.begin(), expected.end());
  std::sort(observed.begin(), observed.end());
  std::sort(wanted.begin(), wanted.end());
  return observed == wanted;
}

bool classify_summary_equal(const ClassificationReport& lhs, const ClassificationReport& rhs) {
  std::vector<OrderMultiset> expected;
  for (const auto& c : rhs.classes) expected.push_back(c.order_multiset);
  return classify_summary_equal(lhs, expected);
}

std::string report_to_json(const ClassificationReport& report) {
  nlohmann::ordered_json j;
  j["group"] = report.group;
  j["length"] = report.length;
  j["mode"] = to_string(report.mode);
  j["minimal_only"] = report.minimal_only;
  nlohmann::ordered_json classes = nlohmann::ordered_json::array();
  for (const auto& c : report.classes) {
    nlohmann::ordered_json entry;
    entry["representative"] = c.representative_names;
    entry["order_multiset"] = c.order_multiset.values();
    entry["size"] = c.size;
    classes.push_back(std::move(entry));
  }
  j["classes"] = std::move(classes);
  j["total"] = report.total;
  return j.dump(2) + "\n";
}

std::string report_to_table(const std::string& report_json) {
  const auto j = nlohmann::json::parse(report_json);
  std::ostringstream out;
  out << "group: " << j.at("group").get<std::string>() << "\n"
      << "length: " << j.at("length").get<std::size_t>()
      << "  mode: " << j.at("mode").get<std::string>()
      << "  minimal_only: " << (j.at("minimal_only").get<bool>() ? "true" : "false") << "\n";
  out << std::setw(4) << "#" << "  " << std::setw(6) << "size" << "  " << std::left
      << std::setw(16) << "order_multiset" << "representative\n" << std::right;
  std::size_t index = 0;
  for (const auto& c : j.at("classes")) {
    std::string rep;
    for (const auto& name : c.at("representative")) {
      if (!rep.empty()) rep += ',';
      rep += name.get<std::string>();
    }
    const OrderMultiset om(c.at("order_multiset").get<std::vector<std::size_t>>());
    out << std::setw(4) << ++index << "  " << std::setw(6) << c.at("size").get<std::size_t>()
        << "  " << std::left << std::setw(16) << om.to_string() << rep << "\n" << std::right;
  }
  out << "total: " << j.at("total").get<std::size_t>() << " sequences in " << index
      << (index == 1 ? " class" : " classes") << "\n";
  return out.str();
}

}  // namespace presclass
