#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <ostream>

#include "dmtree/document.hpp"
#include "dmtree/enumeration.hpp"
#include "dmtree/equivalences.hpp"
#include "dmtree/error.hpp"
#include "dmtree/format.hpp"
#include "dmtree/merge_tree.hpp"
#include "dmtree/star_realization.hpp"

namespace dmtree::cli {

namespace {

MorseFunction load_function(const std::string& path) { return document_function(load_document(path)); }

int cmd_validate(const std::string& path, std::ostream& out, std::ostream& err) {
  InputDocument doc;
  try {
    doc = load_document(path);
  } catch (const Error& e) {
    err << e.what() << '\n';
    return kExitInputError;
  }
  try {
    const MorseFunction f = document_function(doc);
    out << "valid: " << f.domain().vertex_count() << " vertices, " << f.domain().edge_count() << " edges, "
        << f.critical_simplices().size() << " critical simplices\n";
    return kExitOk;
  } catch (const Error& e) {
    err << "invalid: " << e.what() << '\n';
    return kExitNegative;
  }
}

int cmd_merge_tree(const std::string& path, const std::string& format, std::ostream& out) {
  const MergeTree tree = induce_merge_tree(load_function(path));
  if (format == "shape") {
    out << shape_code(tree).text << '\n';
  } else if (format == "dot") {
    out << to_dot(tree);
  } else {
    out << to_text(tree);
  }
  return kExitOk;
}

int cmd_invariants(const std::string& path, bool diagram_only, std::ostream& out) {
  const MorseFunction f = load_function(path);
  const PersistenceDiagram diagram = persistence_diagram(f);
  if (diagram_only) {
    write_diagram(out, diagram);
    return kExitOk;
  }
  const SimplicialTree& tree = f.domain();
  const MergeTree m = induce_merge_tree(f);
  const bool thin = is_thin(m);
  out << "vertices: " << tree.vertex_count() << '\n'
      << "edges: " << tree.edge_count() << '\n'
      << "critical simplices: " << f.critical_simplices().size() << '\n'
      << "merge tree: " << shape_code(m).text << '\n'
      << "impasses: " << impasse_count(m) << '\n'
      << "matching number: " << matching_number(tree) << '\n'
      << "thin: " << (thin ? "true" : "false") << '\n'
      << "homological sequence: " << format_b0(homological_sequence(f)) << '\n'
      << "persistence diagram: " << format_diagram(diagram) << '\n';
  if (thin) out << "lr sequence: " << lr_sequence(m).to_string() << '\n';
  return kExitOk;
}

int cmd_compare(const std::string& a, const std::string& b, const std::string& relation, std::ostream& out) {
  const MorseFunction f = load_function(a);
  const MorseFunction g = load_function(b);
  bool equivalent = false;
  if (relation == "forman") {
    equivalent = forman_equivalent(f, g);
  } else if (relation == "homological") {
    equivalent = homologically_equivalent(f, g);
  } else if (relation == "persistence") {
    equivalent = persistence_equivalent(f, g);
  } else {
    equivalent = merge_equivalent(f, g);
  }
  out << (equivalent ? "equivalent" : "not-equivalent") << '\n';
  return equivalent ? kExitOk : kExitNegative;
}

nlohmann::ordered_json report_json(const SimplicialTree& tree, const InvariantReport& report) {
  nlohmann::ordered_json j;
  j["functions"] = report.functions;
  j["matching_number"] = report.matching_number;
  j["min_impasses"] = report.min_impasses;
  j["max_impasses"] = report.max_impasses;
  j["properties"] = nlohmann::ordered_json::array();
  for (const auto& p : report.properties) {
    nlohmann::ordered_json entry{{"name", p.name}, {"checked", p.checked}, {"failed", p.failed}};
    if (p.witness) entry["witness"] = describe_labeling(tree, *p.witness);
    j["properties"].push_back(entry);
  }
  j["passed"] = report.all_passed();
  return j;
}

int cmd_enumerate(const std::string& path, bool count_classes, bool check, bool json, std::size_t budget,
                  std::ostream& out, std::ostream& err) {
  if (count_classes == check) {
    err << "enumerate needs exactly one of --count-classes or --check\n";
    return kExitInputError;
  }
  auto tree = std::make_shared<const SimplicialTree>(document_tree(load_document(path)));
  if (count_classes) {
    out << count_merge_classes(tree, budget) << '\n';
    return kExitOk;
  }
  const InvariantReport report = check_invariants(tree, budget);
  if (json) {
    out << report_json(*tree, report).dump(2) << '\n';
    return report.all_passed() ? kExitOk : kExitNegative;
  }
  out << "functions: " << report.functions << '\n'
      << "matching number: " << report.matching_number << '\n'
      << "impasses observed: " << report.min_impasses << ".." << report.max_impasses << '\n';
  constexpr int kNameWidth = 42;
  out << std::left;
  out.width(kNameWidth);
  out << "property" << "checked  failed\n";
  for (const auto& p : report.properties) {
    out.width(kNameWidth);
    out << p.name;
    const std::string checked = std::to_string(p.checked);
    out << checked << std::string(checked.size() < 9 ? 9 - checked.size() : 1, ' ') << p.failed << '\n';
    if (p.witness) out << "  witness: " << describe_labeling(*tree, *p.witness) << '\n';
  }
  out << "result: " << (report.all_passed() ? "pass" : "fail") << '\n';
  return report.all_passed() ? kExitOk : kExitNegative;
}

int cmd_star_realize(const std::string& lr, std::ostream& out) {
  const StarRealization r = realize_on_star(thin_from_lr(LRSequence::parse(lr)));
  out << write_document(r.function);
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Discrete Morse functions on trees and their merge trees", "dmtree"};
  app.require_subcommand(1);

  std::string path;
  std::string path_b;
  std::string format = "text";
  std::string relation = "merge";
  std::string lr;
  bool diagram_only = false;
  bool count_classes = false;
  bool check = false;
  bool json = false;
  std::size_t budget = kDefaultSimplexBudget;

  auto* validate = app.add_subcommand("validate", "Check a tree and discrete Morse function document");
  validate->add_option("file", path, "Input document")->required();

  auto* merge = app.add_subcommand("merge-tree", "Print the induced merge tree");
  merge->add_option("file", path, "Input document")->required();
  merge->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"dot", "shape", "text"}))
      ->capture_default_str();

  auto* invariants = app.add_subcommand("invariants", "Print impasses, matching number and equivalence data");
  invariants->add_option("file", path, "Input document")->required();
  invariants->add_flag("--diagram", diagram_only, "Print only the persistence diagram, one pair per line");

  auto* compare = app.add_subcommand("compare", "Decide an equivalence between two functions");
  compare->add_option("first", path, "First document")->required();
  compare->add_option("second", path_b, "Second document")->required();
  compare->add_option("--relation", relation, "Equivalence relation")
      ->check(CLI::IsMember({"merge", "forman", "homological", "persistence"}))
      ->capture_default_str();

  auto* enumerate = app.add_subcommand("enumerate", "Enumerate every critical function on a tree");
  enumerate->add_option("file", path, "Tree document; values are ignored")->required();
  enumerate->add_flag("--count-classes", count_classes, "Count merge equivalence classes");
  enumerate->add_flag("--check", check, "Check merge tree properties over every function");
  enumerate->add_flag("--json", json, "Machine-readable report for --check");
  enumerate->add_option("--budget", budget, "Largest simplex count to enumerate")->capture_default_str();

  auto* star = app.add_subcommand("star-realize", "Emit a star graph function for an LR sequence");
  star->add_option("lr", lr, "LR sequence without the leading (L), e.g. LRRL");

  std::vector<const char*> argv{"dmtree"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitInputError;
  }

  try {
    if (*validate) return cmd_validate(path, out, err);
    if (*merge) return cmd_merge_tree(path, format, out);
    if (*invariants) return cmd_invariants(path, diagram_only, out);
    if (*compare) return cmd_compare(path, path_b, relation, out);
    if (*enumerate) return cmd_enumerate(path, count_classes, check, json, budget, out, err);
    if (*star) return cmd_star_realize(lr, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace dmtree::cli
