// Command-line laboratory for finite fuzzy topological spaces.

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "fuzzytop/fuzzytop.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw fuzzytop::Error("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

fuzzytop::Space load_space_file(const std::string& path) {
  return fuzzytop::load_space(read_file(path));
}

int run_classify(const std::string& path, const std::string& set_name) {
  const fuzzytop::Space space = load_space_file(path);
  const fuzzytop::FuzzySet* set = space.find_set(set_name);
  if (!set) {
    std::string known;
    for (const auto& [name, value] : space.members()) {
      if (!known.empty()) known += ", ";
      known += name;
    }
    throw fuzzytop::ValidationError("no set named '" + set_name + "' in '" +
                                    space.name() + "' (known: " + known + ")");
  }
  const fuzzytop::Classifier clf(space.topology());
  fuzzytop::Json out = fuzzytop::to_json(clf.classify(*set, set_name));
  out["space"] = space.name();
  std::cout << out.dump(2) << "\n";
  return kExitOk;
}

int run_report(const std::string& path, std::size_t family_cap) {
  const fuzzytop::Space space = load_space_file(path);
  fuzzytop::CheckOptions options;
  options.family_cap = family_cap;
  std::cout << fuzzytop::space_report(space, options).dump(2) << "\n";
  return kExitOk;
}

int run_verify_diagram(const std::optional<std::string>& space_path,
                       bool all_small) {
  std::vector<std::pair<std::string, fuzzytop::Classifier>> spaces;
  if (space_path) {
    const fuzzytop::Space space = load_space_file(*space_path);
    spaces.emplace_back(space.name(), fuzzytop::Classifier(space.topology()));
  } else if (all_small) {
    const std::vector<std::string> point_pool = {"a", "b", "c"};
    for (std::size_t k = 1; k <= 3; ++k) {
      const auto carrier = fuzzytop::make_carrier(std::vector<std::string>(
          point_pool.begin(), point_pool.begin() + k));
      const auto topologies =
          fuzzytop::enumerate_topologies(carrier, fuzzytop::Grid::crisp());
      for (std::size_t i = 0; i < topologies.size(); ++i)
        spaces.emplace_back("crisp" + std::to_string(k) + "_" +
                                std::to_string(i),
                            fuzzytop::Classifier(topologies[i]));
    }
  } else {
    for (const auto& [name, text] : fuzzytop::corpus_texts()) {
      const fuzzytop::Space space = fuzzytop::load_space(text);
      spaces.emplace_back(name, fuzzytop::Classifier(space.topology()));
    }
  }

  std::size_t set_checks = 0;
  std::vector<fuzzytop::DiagramViolation> violations;
  for (const auto& [label, clf] : spaces) {
    set_checks += clf.universe_size();
    const auto found = fuzzytop::verify_diagram(clf, label);
    violations.insert(violations.end(), found.begin(), found.end());
  }
  for (const auto& violation : violations)
    std::cout << "violation: " << violation.edge << " fails on "
              << violation.space << " at " << violation.set << "\n";
  std::cout << "checked " << spaces.size() << " spaces, " << set_checks
            << " set-checks, " << violations.size() << " violations\n";
  return violations.empty() ? kExitOk : kExitViolation;
}

int run_mine(const std::string& id, std::size_t budget) {
  const fuzzytop::MineResult result = fuzzytop::mine(id, budget);
  std::cout << fuzzytop::to_json(result).dump(2) << "\n";
  return kExitOk;
}

int run_mine_list() {
  for (const fuzzytop::MineTarget& target : fuzzytop::mine_catalogue())
    std::cout << target.id << "  " << target.description << "\n";
  return kExitOk;
}

int run_check(const std::string& path, const std::string& theorem,
              const std::optional<std::string>& set_name,
              std::size_t family_cap) {
  bool known = false;
  for (const std::string& id : fuzzytop::theorem_catalogue())
    if (id == theorem) known = true;
  if (!known)
    throw fuzzytop::UnknownIdError("unknown claim id '" + theorem + "'");

  const fuzzytop::Space space = load_space_file(path);
  std::optional<fuzzytop::FuzzySet> u;
  if (set_name) {
    const fuzzytop::FuzzySet* set = space.find_set(*set_name);
    if (!set)
      throw fuzzytop::ValidationError("no set named '" + *set_name + "' in '" +
                                      space.name() + "'");
    u = *set;
  }
  const fuzzytop::Classifier clf(space.topology());
  fuzzytop::CheckOptions options;
  options.family_cap = family_cap;
  const auto verdict = fuzzytop::check_theorem(clf, theorem, u, options);
  fuzzytop::Json out = fuzzytop::to_json(verdict);
  out["space"] = space.name();
  std::cout << out.dump(2) << "\n";
  return verdict.status == fuzzytop::TheoremStatus::counterexample
             ? kExitViolation
             : kExitOk;
}

int run_corpus_list() {
  for (const std::string& name : fuzzytop::corpus_names())
    std::cout << name << "\n";
  return kExitOk;
}

int run_corpus_export(const std::string& dir) {
  std::filesystem::create_directories(dir);
  for (const auto& [name, text] : fuzzytop::corpus_texts()) {
    const std::filesystem::path path =
        std::filesystem::path(dir) / (name + ".fts");
    std::ofstream out(path, std::ios::binary);
    if (!out) throw fuzzytop::Error("cannot write '" + path.string() + "'");
    out << text;
    std::cout << path.string() << "\n";
  }
  return kExitOk;
}

int run_graph(std::size_t budget) {
  std::cout << fuzzytop::diagram_dot(budget);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"laboratory for finite fuzzy topological spaces"};
  app.require_subcommand(1);

  std::size_t cap_override = 0;
  app.add_option("--cap", cap_override,
                 "override the enumeration cap for this run");

  std::string classify_file, classify_set;
  auto* classify = app.add_subcommand(
      "classify", "classify one named set against every membership class");
  classify->add_option("file", classify_file, "space description file")
      ->required();
  classify->add_option("set", classify_set, "name of the set to classify")
      ->required();

  std::string report_file;
  std::size_t report_family_cap = 4;
  auto* report = app.add_subcommand(
      "report", "full classification/compactness/claims report for a space");
  report->add_option("file", report_file, "space description file")->required();
  report->add_option("--family-cap", report_family_cap,
                     "largest family size for family-quantified claims");

  std::optional<std::string> verify_space;
  bool verify_all_small = false;
  auto* verify = app.add_subcommand(
      "verify-diagram",
      "check every proved implication of the diagram (default: built-in spaces)");
  auto* verify_space_opt =
      verify->add_option("--space", verify_space, "space description file");
  verify->add_flag("--all-small", verify_all_small,
                   "check every crisp topology on up to three points")
      ->excludes(verify_space_opt);

  std::string mine_id;
  std::size_t mine_budget = fuzzytop::default_mine_budget();
  bool mine_list = false;
  auto* mine_cmd = app.add_subcommand(
      "mine", "search the built-in space universe for a claim witness");
  mine_cmd->add_option("id", mine_id, "claim id (see --list)");
  mine_cmd->add_option("--budget", mine_budget,
                       "candidate evaluations to spend before giving up");
  mine_cmd->add_flag("--list", mine_list, "list the mineable claim ids");

  std::string check_file, check_theorem_id;
  std::optional<std::string> check_set;
  std::size_t check_family_cap = 4;
  auto* check = app.add_subcommand(
      "check", "evaluate one catalogued claim on a space");
  check->add_option("file", check_file, "space description file")->required();
  check->add_option("--theorem", check_theorem_id, "claim id")->required();
  check->add_option("--set", check_set,
                    "named set for set-parameterized claims");
  check->add_option("--family-cap", check_family_cap,
                    "largest family size for family-quantified claims");

  auto* corpus = app.add_subcommand("corpus", "built-in reference spaces");
  corpus->require_subcommand(1);
  auto* corpus_list = corpus->add_subcommand("list", "list the space names");
  std::string export_dir;
  auto* corpus_export =
      corpus->add_subcommand("export", "write the spaces as .fts files");
  corpus_export->add_option("dir", export_dir, "output directory")->required();

  bool graph_dot = false;
  std::size_t graph_budget = fuzzytop::default_mine_budget();
  auto* graph = app.add_subcommand(
      "graph", "emit the implication diagram");
  graph->add_flag("--dot", graph_dot, "DOT output (required)");
  graph->add_option("--budget", graph_budget,
                    "mining budget for witness labels");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }

  if (cap_override > 0) {
    setenv("FUZZYTOP_CAP", std::to_string(cap_override).c_str(), 1);
  }

  try {
    if (classify->parsed()) return run_classify(classify_file, classify_set);
    if (report->parsed()) return run_report(report_file, report_family_cap);
    if (verify->parsed())
      return run_verify_diagram(verify_space, verify_all_small);
    if (mine_cmd->parsed()) {
      if (mine_list) return run_mine_list();
      if (mine_id.empty()) {
        std::cerr << "mine needs a claim id (or --list)\n";
        return kExitUsage;
      }
      return run_mine(mine_id, mine_budget);
    }
    if (check->parsed())
      return run_check(check_file, check_theorem_id, check_set,
                       check_family_cap);
    if (corpus->parsed()) {
      if (corpus_list->parsed()) return run_corpus_list();
      if (corpus_export->parsed()) return run_corpus_export(export_dir);
    }
    if (graph->parsed()) {
      if (!graph_dot) {
        std::cerr << "graph needs --dot\n";
        return kExitUsage;
      }
      return run_graph(graph_budget);
    }
  } catch (const fuzzytop::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
