#include "presclass/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "presclass/cayley_graph.hpp"
#include "presclass/classify.hpp"
#include "presclass/coset_enumeration.hpp"
#include "presclass/descriptor.hpp"
#include "presclass/dicyclic_theory.hpp"
#include "presclass/element_expr.hpp"
#include "presclass/error.hpp"
#include "presclass/presentation.hpp"

namespace presclass::cli {
namespace {

// Thrown for bad option values discovered after CLI11 has parsed.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

constexpr int kMaxTheoremN = 12;

struct Settings {
  std::string group;
  std::size_t length = 2;
  std::string mode = "directed";
  bool minimal = false;
  std::string format = "json";
  std::string out;
  std::size_t jobs = 1;
  bool orbit_collapse = false;
  std::string n_range = "2..8";
  std::string seq;
  bool undirected = false;
  std::string presentation;
  std::size_t max_cosets = 0;
  std::optional<std::size_t> expect;
  int n = 0;
  std::string variant = "1";
};

std::string count_of(std::size_t count, const char* one, const char* many) {
  return std::to_string(count) + " " + (count == 1 ? one : many);
}

// Writes `text` to the --out path, or to `out` when no path was given.
void emit(const Settings& s, const std::string& text, std::ostream& out) {
  if (s.out.empty()) {
    out << text;
    return;
  }
  std::ofstream file(s.out, std::ios::binary | std::ios::trunc);
  if (!file) throw UsageError("cannot open output file " + s.out);
  file << text;
}

void require_format(const Settings& s) {
  if (s.format != "json" && s.format != "table") {
    throw UsageError("--format must be json or table");
  }
}

std::size_t max_group_order_from_env() {
  const char* value = std::getenv("CAYLEY_CLASSIFY_MAX_ORDER");
  if (!value || !*value) return kDefaultMaxGroupOrder;
  char* end = nullptr;
  const unsigned long long parsed = std::strtoull(value, &end, 10);
  if (*end != '\0' || parsed == 0) {
    throw UsageError("CAYLEY_CLASSIFY_MAX_ORDER must be a positive integer");
  }
  return static_cast<std::size_t>(parsed);
}

std::pair<int, int> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    std::size_t used = 0;
    if (dots == std::string::npos) {
      const int v = std::stoi(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
      return {v, v};
    }
    const std::string lo = text.substr(0, dots), hi = text.substr(dots + 2);
    const int a = std::stoi(lo, &used);
    if (used != lo.size()) throw std::invalid_argument(text);
    const int b = std::stoi(hi, &used);
    if (used != hi.size()) throw std::invalid_argument(text);
    return {a, b};
  } catch (const std::logic_error&) {
    throw UsageError("--n-range must look like 2..8");
  }
}

int cmd_classify(const Settings& s, std::ostream& out, std::ostream& err) {
  require_format(s);
  const auto mode = parse_mode(s.mode);
  if (!mode) throw UsageError("--mode must be directed or undirected");
  if (s.jobs < 1) throw UsageError("--jobs must be at least 1");
  const FiniteGroup group = parse_group(s.group);
  ClassifyOptions options;
  options.mode = *mode;
  options.minimal_only = s.minimal;
  options.jobs = s.jobs;
  options.orbit_collapse = s.orbit_collapse;
  options.max_group_order = max_group_order_from_env();
  const ClassificationReport report = classify(group, s.length, options);
  const std::string json = report_to_json(report);
  const std::string body = s.format == "json" ? json : report_to_table(json);
  emit(s, body, out);
  // Keep JSON on stdout parseable: the summary then goes to stderr.
  const bool json_on_stdout = s.format == "json" && s.out.empty();
  (json_on_stdout ? err : out) << count_of(report.class_count(), "class", "classes") << "\n";
  return kExitOk;
}

int cmd_verify_theorem(const Settings& s, std::ostream& out) {
  require_format(s);
  const auto [lo, hi] = parse_range(s.n_range);
  if (lo < 2 || lo > hi || hi > kMaxTheoremN) {
    throw UsageError("--n-range needs 2 <= min <= max <= " + std::to_string(kMaxTheoremN));
  }
  TheoremOptions options;
  options.jobs = std::max<std::size_t>(s.jobs, 1);
  options.orbit_collapse = s.orbit_collapse;
  options.max_n = kMaxTheoremN;
  bool all_pass = true;
  std::string lines;
  nlohmann::ordered_json results = nlohmann::ordered_json::array();
  for (int n = lo; n <= hi; ++n) {
    const TheoremCheck check = verify_theorem(n, options);
    all_pass = all_pass && check.pass;
    lines += "n=" + std::to_string(n) + ": " + count_of(check.observed.class_count(), "class", "classes") +
             (check.pass ? " PASS" : " FAIL");
    for (const std::string& d : check.diagnostics) lines += " [" + d + "]";
    lines += "\n";
    results.push_back(nlohmann::ordered_json::parse(theorem_check_to_json(check)));
  }
  emit(s, s.format == "json" ? results.dump(2) + "\n" : lines, out);
  if (!s.out.empty()) out << lines;
  return all_pass ? kExitOk : kExitFailure;
}

int cmd_export_dot(const Settings& s, std::ostream& out, std::ostream& err) {
  const FiniteGroup group = parse_group(s.group);
  const GeneratingSequence seq = parse_sequence(group, s.seq);
  const CayleyGraph graph = build_cayley_graph(group, seq);
  DotOptions options;
  options.undirected = s.undirected;
  const std::string dot = to_dot(graph, options);
  const std::size_t edges =
      s.undirected ? undirected_view(graph).edges().size() : graph.edge_count();
  const std::string summary = count_of(graph.vertex_count(), "vertex", "vertices") + ", " +
                              count_of(edges, "edge", "edges") + "\n";
  emit(s, dot, out);
  // With the DOT text on stdout the counts go to stderr.
  (s.out.empty() ? err : out) << summary;
  return kExitOk;
}

int cmd_check_presentation(const Settings& s, std::ostream& out) {
  const Presentation presentation = parse_presentation(s.presentation);
  const std::size_t cap = s.max_cosets ? s.max_cosets : default_max_cosets(s.expect);
  const CosetEnumeration result = todd_coxeter(presentation, cap);
  if (!result.complete) {
    out << "coset enumeration exceeded " << cap << " cosets\n";
    if (s.expect) out << "FAIL\n";
    return kExitFailure;
  }
  out << "order " << result.order() << "\n";
  if (s.expect) {
    const bool pass = result.order() == *s.expect;
    out << (pass ? "PASS" : "FAIL") << "\n";
    return pass ? kExitOk : kExitFailure;
  }
  return kExitOk;
}

int cmd_check_morphisms(const Settings& s, std::ostream& out) {
  const auto variant = parse_variant(s.variant);
  if (!variant) throw UsageError("--variant must be 0, 1 or n");
  const MorphismPair pair = morphism_pair(s.n, *variant);
  const MutualInverseCheck check = check_morphism_pair(pair);
  auto yes = [](bool b) { return b ? "yes" : "no"; };
  out << "presentation " << pair.presentation << "\n"
      << "group order " << check.group_order << ", presented order " << check.presented_order
      << "\n"
      << "phi homomorphism: " << yes(check.phi_homomorphism) << "\n"
      << "psi homomorphism: " << yes(check.psi_homomorphism) << "\n"
      << "psi after phi = id: " << yes(check.psi_after_phi_identity) << "\n"
      << "phi after psi = id: " << yes(check.phi_after_psi_identity) << "\n"
      << (check.ok() ? "PASS" : "FAIL") << "\n";
  return check.ok() ? kExitOk : kExitFailure;
}

int cmd_info(const Settings& s, std::ostream& out) {
  require_format(s);
  const FiniteGroup group = parse_group(s.group);
  std::map<std::size_t, std::size_t> histogram;
  for (ElementId g = 0; g < group.order(); ++g) ++histogram[element_order(group, g)];
  if (s.format == "json") {
    nlohmann::ordered_json j;
    j["group"] = group.descriptor();
    j["order"] = group.order();
    nlohmann::ordered_json orders = nlohmann::ordered_json::object();
    for (const auto& [order, count] : histogram) orders[std::to_string(order)] = count;
    j["element_orders"] = std::move(orders);
    emit(s, j.dump(2) + "\n", out);
    return kExitOk;
  }
  std::ostringstream text;
  text << "group " << group.descriptor() << "\n" << "order " << group.order() << "\n"
       << "element orders";
  for (const auto& [order, count] : histogram) text << " " << order << ":" << count;
  text << "\n";
  emit(s, text.str(), out);
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Classify presentations of finite groups by Cayley graph isomorphism"};
  app.name("presclass");
  app.require_subcommand(1, 1);
  Settings s;

  auto* classify_cmd = app.add_subcommand("classify", "Partition generating sequences into classes");
  classify_cmd->add_option("--group", s.group, "Group descriptor")->required();
  classify_cmd->add_option("--length", s.length, "Sequence length (1..4)");
  classify_cmd->add_option("--mode", s.mode, "directed or undirected");
  classify_cmd->add_flag("--minimal", s.minimal, "Only minimal generating sequences");
  classify_cmd->add_option("--format", s.format, "json or table");
  classify_cmd->add_option("--out", s.out, "Write the report to this file");
  classify_cmd->add_option("--jobs", s.jobs, "Worker threads");
  classify_cmd->add_flag("--orbit-collapse", s.orbit_collapse,
                         "Dicyclic groups: merge automorphism orbits before comparing");

  auto* verify_cmd = app.add_subcommand("verify-theorem", "Check the dicyclic classification");
  verify_cmd->add_option("--n-range", s.n_range, "Range min..max of n (2..12)");
  verify_cmd->add_option("--format", s.format, "json or table")->default_str("table");
  verify_cmd->add_option("--out", s.out, "Write the results to this file");
  verify_cmd->add_option("--jobs", s.jobs, "Worker threads");
  verify_cmd->add_flag("--orbit-collapse", s.orbit_collapse, "Merge automorphism orbits first");

  auto* dot_cmd = app.add_subcommand("export-dot", "Write a Cayley graph as Graphviz DOT");
  dot_cmd->add_option("--group", s.group, "Group descriptor")->required();
  dot_cmd->add_option("--seq", s.seq, "Comma-separated element expressions")->required();
  dot_cmd->add_flag("--undirected", s.undirected, "Forget edge directions");
  dot_cmd->add_option("--out", s.out, "Write the DOT text to this file");

  auto* pres_cmd = app.add_subcommand("check-presentation", "Enumerate a presented group");
  pres_cmd->add_option("presentation", s.presentation, "<gens | relations>")->required();
  pres_cmd->add_option("--max-cosets", s.max_cosets, "Coset cap");
  pres_cmd->add_option("--expect", s.expect, "Expected order");

  auto* morph_cmd = app.add_subcommand("check-morphisms", "Check a phi/psi isomorphism pair");
  morph_cmd->add_option("--n", s.n, "Dicyclic parameter")->required();
  morph_cmd->add_option("--variant", s.variant, "0, 1 or n");

  auto* info_cmd = app.add_subcommand("info", "Group order and element-order histogram");
  info_cmd->add_option("--group", s.group, "Group descriptor")->required();
  info_cmd->add_option("--format", s.format, "json or table");
  info_cmd->add_option("--out", s.out, "Write to this file");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    // verify-theorem and info print tables unless asked otherwise.
    const bool table_default = !args.empty() && (args[0] == "verify-theorem" || args[0] == "info");
    if (table_default) s.format = "table";
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (classify_cmd->parsed()) return cmd_classify(s, out, err);
    if (verify_cmd->parsed()) return cmd_verify_theorem(s, out);
    if (dot_cmd->parsed()) return cmd_export_dot(s, out, err);
    if (pres_cmd->parsed()) return cmd_check_presentation(s, out);
    if (morph_cmd->parsed()) return cmd_check_morphisms(s, out);
    if (info_cmd->parsed()) return cmd_info(s, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const EnumerationExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InvalidParameter& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const GuardError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ClosureLimitError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace presclass::cli
