#include "presclass/dicyclic_theory.hpp"

#include <algorithm>
#include <numeric>

#include "json.hpp"
#include "presclass/cayley_graph.hpp"
#include "presclass/coset_enumeration.hpp"
#include "presclass/element_expr.hpp"
#include "presclass/error.hpp"
#include "presclass/families.hpp"
#include "presclass/iso.hpp"

namespace presclass {
namespace {

void require_n(int n) {
  if (n < 2) throw InvalidParameter("dicyclic parameter n must be at least 2");
}

int gcd_abs(int a, int b) { return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b); }

int parity(int d) { return ((d % 2) + 2) % 2; }

void require_odd(int n, PiVariant variant) {
  if (variant != PiVariant::kOne && n % 2 == 0) {
    throw InvalidParameter("variant " + to_string(variant) + " needs odd n, got n=" +
                           std::to_string(n));
  }
}

}  // namespace

bool generates_pair_xx(int n, int k, int m) {
  require_n(n);
  return gcd_abs(n, k - m) == 1;
}

bool generates_pair_ax(int n, int k, int /*m*/) {
  require_n(n);
  return gcd_abs(n, k) == 1;
}

bool same_class_xx(int n, int k1, int m1, int k2, int m2) {
  if (!generates_pair_xx(n, k1, m1) || !generates_pair_xx(n, k2, m2)) {
    throw ContractViolation("same_class_xx needs two generating pairs");
  }
  if (n % 2 == 0) return true;
  return parity(k1 - m1) == parity(k2 - m2);
}

std::optional<std::size_t> order_constraint_ax(int n, int k) {
  require_n(n);
  const int g = gcd_abs(2 * n, k);
  if (g == 1) return static_cast<std::size_t>(2 * n);
  if (g == 2 && n % 2 == 1) return static_cast<std::size_t>(n);
  return std::nullopt;
}

TheoremPrediction predicted_classification(int n) {
  require_n(n);
  TheoremPrediction p;
  p.n = n;
  const auto two_n = static_cast<std::size_t>(2 * n);
  p.multisets = {OrderMultiset({two_n, 4}), OrderMultiset({4, 4})};
  p.representatives = {"a,x", "a*x,x"};
  if (n % 2 == 1) {
    p.multisets.push_back(OrderMultiset({4, 4}));
    p.multisets.push_back(OrderMultiset({static_cast<std::size_t>(n), 4}));
    p.representatives.push_back("a^2*x,x");
    p.representatives.push_back("a^2,x");
  }
  p.expected_class_count = p.multisets.size();
  return p;
}

std::string to_string(PiVariant variant) {
  switch (variant) {
    case PiVariant::kZero: return "0";
    case PiVariant::kOne: return "1";
    case PiVariant::kN: return "n";
  }
  return "?";
}

std::optional<PiVariant> parse_variant(std::string_view text) {
  if (text == "0") return PiVariant::kZero;
  if (text == "1") return PiVariant::kOne;
  if (text == "n") return PiVariant::kN;
  return std::nullopt;
}

std::string classical_presentation_text(int n) {
  require_n(n);
  const std::string ns = std::to_string(n);
  return "<a,x | a^" + std::to_string(2 * n) + ", x^2=a^" + ns + ", x^-1*a*x=a^-1>";
}

std::string pi_presentation_text(int n, PiVariant variant) {
  require_n(n);
  require_odd(n, variant);
  return detail::pi_presentation_text_unchecked(n, variant);
}

Presentation pi_presentation(int n, PiVariant variant) {
  return parse_presentation(pi_presentation_text(n, variant));
}

MorphismPair morphism_pair(int n, PiVariant variant) {
  require_n(n);
  require_odd(n, variant);
  return detail::morphism_pair_unchecked(n, variant);
}

namespace detail {

std::string pi_presentation_text_unchecked(int n, PiVariant variant) {
  const std::string ns = std::to_string(n);
  switch (variant) {
    case PiVariant::kOne: return "<u,v | u^2=v^2, u^4, u^2*(u^3*v)^" + ns + ">";
    case PiVariant::kZero: return "<u,v | u^2=v^2, u^4, u^2*(u*v)^" + ns + ">";
    case PiVariant::kN: return "<b,y | b^" + ns + ", y^4, y^-1*b*y=b^-1>";
  }
  return {};
}

MorphismPair morphism_pair_unchecked(int n, PiVariant variant) {
  MorphismPair pair;
  pair.n = n;
  pair.variant = variant;
  pair.presentation = pi_presentation_text_unchecked(n, variant);
  switch (variant) {
    case PiVariant::kOne:
      pair.phi.images = {{"a", "u^3*v"}, {"x", "v"}};
      pair.psi.images = {{"u", "a*x"}, {"v", "x"}};
      break;
    case PiVariant::kZero:
      pair.phi.images = {{"a", "v*u"}, {"x", "v"}};
      pair.psi.images = {{"u", "a^" + std::to_string(n - 1) + "*x"}, {"v", "x"}};
      break;
    case PiVariant::kN: {
      const int q = (n + 1) / 2;
      pair.phi.images = {{"a", "b^" + std::to_string(q) + "*y^2"}, {"x", "y"}};
      pair.psi.images = {{"b", "a^2"}, {"y", "x"}};
      break;
    }
  }
  return pair;
}

}  // namespace detail

MutualInverseCheck check_morphism_pair(const MorphismPair& pair) {
  const FiniteGroup group = dicyclic(pair.n);
  return check_mutual_inverse(group, parse_presentation(pair.presentation), pair.phi, pair.psi,
                              default_max_cosets(group.order()));
}

TheoremCheck verify_theorem(int n, const TheoremOptions& options) {
  if (n < 2 || n > options.max_n) {
    throw GuardError("verify_theorem needs 2 <= n <= " + std::to_string(options.max_n));
  }
  TheoremCheck check;
  check.n = n;
  check.predicted = predicted_classification(n);
  const FiniteGroup group = dicyclic(n).materialized();

  ClassifyOptions copts;
  copts.mode = EquivalenceMode::kDirected;
  copts.minimal_only = true;
  copts.jobs = options.jobs;
  copts.orbit_collapse = options.orbit_collapse;
  check.observed = classify(group, 2, copts);

  check.count_matches = check.observed.class_count() == check.predicted.expected_class_count;
  if (!check.count_matches) {
    check.diagnostics.push_back("expected " + std::to_string(check.predicted.expected_class_count) +
                                " classes, observed " +
                                std::to_string(check.observed.class_count()));
  }
  check.multisets_match = classify_summary_equal(check.observed, check.predicted.multisets);
  if (!check.multisets_match) check.diagnostics.push_back("order multiset profile differs");

  // Locate each predicted representative among the observed classes.
  std::vector<CayleyGraph> class_graphs;
  for (const auto& c : check.observed.classes) {
    class_graphs.push_back(build_cayley_graph(group, c.representative));
  }
  std::vector<std::size_t> hit;
  check.representatives_distinct = true;
  for (const std::string& rep : check.predicted.representatives) {
    const GeneratingSequence seq = parse_sequence(group, rep);
    if (!is_minimal_generating(group, seq)) {
      check.representatives_distinct = false;
      check.diagnostics.push_back("representative (" + rep + ") is not minimal generating");
      continue;
    }
    const CayleyGraph graph = build_cayley_graph(group, seq);
    std::optional<std::size_t> index;
    for (std::size_t c = 0; c < class_graphs.size() && !index; ++c) {
      if (directed_iso(graph, class_graphs[c])) index = c;
    }
    if (!index) {
      check.representatives_distinct = false;
      check.diagnostics.push_back("representative (" + rep + ") matches no observed class");
    } else if (std::find(hit.begin(), hit.end(), *index) != hit.end()) {
      check.representatives_distinct = false;
      check.diagnostics.push_back("representative (" + rep + ") shares class " +
                                  std::to_string(*index + 1) + " with an earlier one");
    } else {
      hit.push_back(*index);
    }
  }

  std::vector<PiVariant> variants{PiVariant::kOne};
  if (n % 2 == 1) {
    variants.push_back(PiVariant::kZero);
    variants.push_back(PiVariant::kN);
  }
  bool morphisms_ok = true;
  for (PiVariant v : variants) {
    const MutualInverseCheck m = check_morphism_pair(morphism_pair(n, v));
    check.morphisms.push_back({v, m.ok()});
    if (!m.ok()) {
      morphisms_ok = false;
      check.diagnostics.push_back("morphism pair for variant " + to_string(v) + " failed");
    }
  }

  check.pass = check.count_matches && check.multisets_match && check.representatives_distinct &&
               morphisms_ok;
  return check;
}

std::string theorem_check_to_json(const TheoremCheck& check) {
  auto multisets = [](const std::vector<OrderMultiset>& list) {
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (const auto& m : list) out.push_back(m.values());
    return out;
  };
  nlohmann::ordered_json j;
  j["n"] = check.n;
  nlohmann::ordered_json predicted;
  predicted["class_count"] = check.predicted.expected_class_count;
  predicted["order_multisets"] = multisets(check.predicted.multisets);
  predicted["representatives"] = check.predicted.representatives;
  j["predicted"] = std::move(predicted);
  nlohmann::ordered_json observed;
  std::vector<OrderMultiset> seen;
  nlohmann::ordered_json reps = nlohmann::ordered_json::array();
  for (const auto& c : check.observed.classes) {
    seen.push_back(c.order_multiset);
    std::string rep;
    for (const auto& name : c.representative_names) rep += (rep.empty() ? "" : ",") + name;
    reps.push_back(rep);
  }
  observed["class_count"] = check.observed.class_count();
  observed["order_multisets"] = multisets(seen);
  observed["representatives"] = std::move(reps);
  observed["total"] = check.observed.total;
  j["observed"] = std::move(observed);
  nlohmann::ordered_json morphisms = nlohmann::ordered_json::array();
  for (const auto& m : check.morphisms) {
    morphisms.push_back({{"variant", to_string(m.variant)}, {"pass", m.pass}});
  }
  j["morphisms_checked"] = std::move(morphisms);
  j["pass"] = check.pass;
  if (!check.diagnostics.empty()) j["diagnostics"] = check.diagnostics;
  return j.dump(2) + "\n";
}

}  // namespace presclass
