// Command-line front end: counting, enumeration, verification, mutation and
// SVG rendering for the exceptional-sequence / non-crossing-tree toolkit.
//
// Exit codes: 0 success, 1 verification or domain failure, 2 usage error.

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "excseq/bijection.hpp"
#include "excseq/exceptional.hpp"
#include "excseq/json_io.hpp"
#include "excseq/mutation.hpp"
#include "excseq/nc_tree.hpp"
#include "excseq/svg.hpp"
#include "excseq/verify.hpp"

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

constexpr int kTreeEnumBound = 8;
constexpr int kSequenceEnumBound = 6;

struct GlobalOptions {
  std::string format = "";  // per-command default when empty
  std::string out_path;     // stdout when empty
  int jobs = 1;
  bool unsafe_large = false;
};

// Output sink honoring --out.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw std::runtime_error("cannot open output file " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

nlohmann::json read_json_input(const std::string& path) {
  std::stringstream buffer;
  if (path.empty() || path == "-") {
    buffer << std::cin.rdbuf();
  } else {
    std::ifstream file(path);
    if (!file) throw std::runtime_error("cannot open input file " + path);
    buffer << file.rdbuf();
  }
  try {
    return nlohmann::json::parse(buffer.str());
  } catch (const nlohmann::json::parse_error& error) {
    throw std::invalid_argument(std::string("malformed JSON input: ") + error.what());
  }
}

// Returns kExitUsage (after printing the bound) unless n is within `bound`
// or --unsafe-large was given; the override prints the expected sizes.
std::optional<int> enforce_bound(const GlobalOptions& global, int n, int bound,
                                 const std::string& what) {
  if (n <= bound) return std::nullopt;
  if (!global.unsafe_large) {
    std::cerr << "error: " << what << " is exhaustive and bounded at n <= " << bound
              << " (got n=" << n << "); pass --unsafe-large to override\n";
    return kExitUsage;
  }
  std::cerr << "warning: n=" << n << " exceeds the documented bound " << bound << " for " << what
            << "; expect about " << excseq::nc_tree_count(n).to_string() << " trees and "
            << excseq::sequence_count(n).to_string() << " sequences\n";
  return std::nullopt;
}

int cmd_count(const GlobalOptions& global, int from, int to, bool with_enumeration) {
  if (from < 1 || to < from) {
    std::cerr << "error: count needs 1 <= from <= to\n";
    return kExitUsage;
  }
  const std::string format = global.format.empty() ? "text" : global.format;
  Output output(global.out_path);

  nlohmann::json rows = nlohmann::json::array();
  for (int n = from; n <= to; ++n) {
    nlohmann::json row{{"n", n},
                       {"nc_tree_count", excseq::nc_tree_count(n).to_string()},
                       {"sequence_count", excseq::sequence_count(n).to_string()}};
    if (with_enumeration) {
      row["nc_tree_enumerated"] =
          n <= kTreeEnumBound
              ? nlohmann::json(excseq::enumerate_nc_trees(n, global.jobs).size())
              : nlohmann::json();
      row["sequence_enumerated"] =
          n <= kSequenceEnumBound
              ? nlohmann::json(excseq::enumerate_complete_sequences(n, global.jobs).size())
              : nlohmann::json();
    }
    rows.push_back(std::move(row));
  }

  if (format == "json") {
    output.stream() << rows.dump(2) << "\n";
  } else if (format == "lines") {
    for (const auto& row : rows) output.stream() << row.dump() << "\n";
  } else {
    output.stream() << "n\tnc_trees\tsequences";
    if (with_enumeration) output.stream() << "\ttrees_enum\tseqs_enum";
    output.stream() << "\n";
    for (const auto& row : rows) {
      output.stream() << row["n"].get<int>() << "\t" << row["nc_tree_count"].get<std::string>()
                      << "\t" << row["sequence_count"].get<std::string>();
      if (with_enumeration) {
        const auto cell = [](const nlohmann::json& value) {
          return value.is_null() ? std::string("-") : std::to_string(value.get<std::uint64_t>());
        };
        output.stream() << "\t" << cell(row["nc_tree_enumerated"]) << "\t"
                        << cell(row["sequence_enumerated"]);
      }
      output.stream() << "\n";
    }
  }
  return 0;
}

int cmd_enumerate(const GlobalOptions& global, int n, const std::string& kind) {
  const int bound = kind == "trees" ? kTreeEnumBound : kSequenceEnumBound;
  if (const auto usage = enforce_bound(global, n, bound, "enumerating " + kind)) return *usage;
  const std::string format = global.format.empty() ? "lines" : global.format;
  Output output(global.out_path);

  std::vector<nlohmann::json> items;
  std::vector<std::string> texts;
  if (kind == "trees") {
    for (const excseq::NCTree& tree : excseq::enumerate_nc_trees(n, global.jobs)) {
      items.push_back(excseq::to_json(tree));
      texts.push_back(tree.to_string());
    }
  } else if (kind == "sequences") {
    for (const excseq::ExceptionalSequence& seq :
         excseq::enumerate_complete_sequences(n, global.jobs)) {
      items.push_back(excseq::to_json(seq));
      texts.push_back(seq.to_string());
    }
  } else {  // classes, keyed with their trees
    std::map<excseq::ClassKey, excseq::NCTree> classes;
    for (const excseq::ExceptionalSequence& seq :
         excseq::enumerate_complete_sequences(n, global.jobs)) {
      classes.emplace(excseq::class_key(seq), excseq::tree_of_sequence(seq));
    }
    for (const auto& [key, tree] : classes) {
      items.push_back(nlohmann::json{{"n", n},
                                     {"key", excseq::class_key_to_json(key)},
                                     {"tree", excseq::to_json(tree)}});
      texts.push_back(excseq::to_string(key) + " -> " + tree.to_string());
    }
  }

  if (format == "json") {
    output.stream() << nlohmann::json(items).dump(2) << "\n";
  } else if (format == "text") {
    for (const std::string& line : texts) output.stream() << line << "\n";
  } else {
    for (const auto& item : items) output.stream() << item.dump() << "\n";
  }
  return 0;
}

int cmd_verify(const GlobalOptions& global, int n, const std::vector<std::string>& suites) {
  std::vector<std::string> selected = suites;
  if (selected.empty()) {
    for (const auto& [name, bound] : excseq::kVerifySuites) selected.emplace_back(name);
  }
  for (const std::string& suite : selected) {
    int bound = 0;
    try {
      bound = excseq::suite_bound(suite);
    } catch (const std::invalid_argument& error) {
      std::cerr << "error: " << error.what() << "\n";
      return kExitUsage;
    }
    if (const auto usage = enforce_bound(global, n, bound, "suite '" + suite + "'")) return *usage;
  }

  const excseq::SuiteResult result = excseq::run_verification(n, selected, global.jobs);
  const std::string format = global.format.empty() ? "json" : global.format;
  Output output(global.out_path);
  if (format == "text") {
    for (const excseq::CheckResult& check : result.checks) {
      output.stream() << (check.passed ? "pass" : "FAIL") << "  " << check.name << "  ("
                      << check.checked << " facts, " << check.elapsed_ms << " ms)  "
                      << check.detail << "\n";
    }
    output.stream() << (result.all_passed() ? "all passed" : "FAILURES") << "\n";
  } else {
    output.stream() << excseq::to_json(result).dump(2) << "\n";
  }
  return result.all_passed() ? 0 : kExitFailure;
}

int cmd_mutate(const GlobalOptions& global, const std::string& in_path, const std::string& word_text) {
  const nlohmann::json input = read_json_input(in_path);
  const excseq::ExceptionalSequence start = excseq::sequence_from_json(input);
  if (const auto bad = excseq::first_failing_pair(start)) {
    std::cerr << "error: not an exceptional sequence: pair ("
              << start.objects[static_cast<std::size_t>(bad->first)].to_string() << ", "
              << start.objects[static_cast<std::size_t>(bad->second)].to_string() << ") fails\n";
    return kExitFailure;
  }
  if (!start.complete()) {
    std::cerr << "error: the braid action needs a complete sequence of length " << start.n << "\n";
    return kExitFailure;
  }
  const excseq::BraidWord word = excseq::parse_braid_word(word_text, start.n);

  nlohmann::json steps = nlohmann::json::array();
  std::vector<std::string> text_lines;
  excseq::ExceptionalSequence current = start;
  for (const excseq::BraidLetter& letter : word) {
    excseq::MutationCase tag = excseq::MutationCase::Disjoint;
    current = excseq::braid_apply_letter(letter, current, &tag);
    const bool is_shift = letter.kind == excseq::BraidLetter::Kind::Shift ||
                          letter.kind == excseq::BraidLetter::Kind::ShiftInv;
    const std::string tag_name = is_shift ? "shift" : excseq::to_string(tag);
    steps.push_back(nlohmann::json{{"letter", letter.to_string()},
                                   {"case", tag_name},
                                   {"sequence", excseq::to_json(current)}});
    text_lines.push_back("after " + letter.to_string() + " [" + tag_name + "]: " +
                         current.to_string());
  }

  const std::string format = global.format.empty() ? "json" : global.format;
  Output output(global.out_path);
  if (format == "text") {
    output.stream() << "input: " << start.to_string() << "\n";
    for (const std::string& line : text_lines) output.stream() << line << "\n";
    output.stream() << "result: " << current.to_string() << "\n";
  } else {
    output.stream() << nlohmann::json{{"n", start.n},
                                      {"word", excseq::to_string(word)},
                                      {"input", excseq::to_json(start)},
                                      {"steps", std::move(steps)},
                                      {"result", excseq::to_json(current)}}
                           .dump(2)
                    << "\n";
  }
  return 0;
}

int cmd_render(const GlobalOptions& global, const std::string& in_path) {
  const nlohmann::json input = read_json_input(in_path);
  excseq::NCTree tree;
  if (input.is_object() && input.contains("objects")) {
    tree = excseq::tree_of_sequence(excseq::sequence_from_json(input));
  } else {
    tree = excseq::nc_tree_from_json(input);
  }
  const std::string svg = excseq::render_svg(tree);  // validates the tree
  Output output(global.out_path);
  output.stream() << svg;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exceptional sequences over linear type-A quivers, their non-crossing\n"
               "spanning trees, and the braid, shift and rotation actions."};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  GlobalOptions global;
  app.add_option("--format", global.format, "Output format: json, lines or text")
      ->check(CLI::IsMember({"json", "lines", "text"}));
  app.add_option("--out", global.out_path, "Write output to PATH instead of stdout");
  app.add_option("--jobs", global.jobs, "Worker count for enumerations")->check(CLI::Range(1, 256));
  app.add_flag("--unsafe-large", global.unsafe_large,
               "Override the per-command exhaustive bounds (prints the expected blowup)");
  bool seed_order = false;
  app.add_flag("--seed-order", seed_order,
               "Reserved; enumeration is deterministic and this flag currently has no effect");

  int n = 3;
  int from = 0, to = 0;
  std::string kind = "trees";
  std::vector<std::string> suites;
  std::string in_path = "-";
  std::string word_text;
  bool with_enumeration = false;

  CLI::App* count = app.add_subcommand(
      "count", "Closed-form counts of non-crossing spanning trees, C(3n,n)/(2n+1), and of\n"
               "complete exceptional sequences, (n+1)^(n-1)");
  count->add_option("--n", n, "Single rank (same as --from N --to N)")->check(CLI::PositiveNumber);
  count->add_option("--from", from, "First rank of the range")->check(CLI::PositiveNumber);
  count->add_option("--to", to, "Last rank of the range")->check(CLI::PositiveNumber);
  count->add_flag("--enumerate", with_enumeration,
                  "Add brute-force columns where feasible (trees n <= 8, sequences n <= 6)");

  CLI::App* enumerate = app.add_subcommand(
      "enumerate", "Exhaustive enumeration (trees: n <= 8, sequences and classes: n <= 6)");
  enumerate->add_option("--n", n, "Rank")->required();
  enumerate->add_option("--kind", kind, "trees, sequences, or classes")
      ->check(CLI::IsMember({"trees", "sequences", "classes"}));

  CLI::App* verify = app.add_subcommand(
      "verify", "Exhaustive verification suites; exit 0 iff every check passes.\n"
                "Bounds: homext 8, trichotomy 8, bijection 5, mutation 6, cyclic 4, transitivity 4");
  verify->add_option("--n", n, "Rank")->required();
  verify->add_option("--suite", suites,
                     "Subset of: homext trichotomy bijection mutation cyclic transitivity "
                     "(default: all)");

  CLI::App* mutate = app.add_subcommand(
      "mutate", "Apply a braid/shift word to a sequence read as JSON; prints each step");
  mutate->add_option("--in", in_path, "Sequence JSON file, or - for stdin");
  mutate->add_option("--word", word_text,
                     "Whitespace-separated letters: sK, sK' (braid), tK, tK' (shift)");

  CLI::App* render = app.add_subcommand("render", "Render a tree (or a sequence's tree) as SVG");
  render->add_option("--in", in_path, "Tree or sequence JSON file, or - for stdin");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& help) {
    return app.exit(help);
  } catch (const CLI::ParseError& error) {
    app.exit(error);
    return kExitUsage;
  }

  try {
    if (count->parsed()) {
      if (from == 0 && to == 0) { from = n; to = n; }
      if (from == 0) from = 1;
      if (to == 0) to = from;
      return cmd_count(global, from, to, with_enumeration);
    }
    if (enumerate->parsed()) return cmd_enumerate(global, n, kind);
    if (verify->parsed()) return cmd_verify(global, n, suites);
    if (mutate->parsed()) return cmd_mutate(global, in_path, word_text);
    if (render->parsed()) return cmd_render(global, in_path);
  } catch (const std::exception& error) {
    std::cerr << "error: " << error.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}
