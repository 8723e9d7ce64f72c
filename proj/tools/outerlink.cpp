// outerlink: classify graphs, emit link and minor certificates, and run the
// verification sweeps.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "outerlink/cli.hpp"

namespace {

using namespace outerlink;

struct InputSpec {
  std::string path;
  std::string name;  // --graph
};

std::string read_all(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  }
  std::ifstream in(path);
  if (!in) throw GraphError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<Graph> load_graphs(const InputSpec& in, std::string& source) {
  if (!in.name.empty()) {
    source = "graph:" + in.name;
    return {standard_graph(in.name)};
  }
  if (in.path.empty()) throw GraphError("no input: give a file, '-' for stdin, or --graph NAME");
  source = in.path == "-" ? "stdin" : in.path;
  return parse_graphs(read_all(in.path));
}

void emit(const cli::RunReport& rep, const std::string& format) {
  if (format == "json") std::cout << rep.document.dump(2) << '\n';
  else std::cout << rep.text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Intrinsic S^1-linking and outer-linking of graphs"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "text";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  InputSpec classify_in;
  auto* classify = app.add_subcommand("classify", "Five-flag classification with certificates");
  classify->add_option("input", classify_in.path, "Edge-list or graph6 file ('-' for stdin)");
  classify->add_option("--graph", classify_in.name, "Named graph (K4, K32, K5, K33, C6, ...)");

  std::string theorem;
  cli::VerifyOptions vopt;
  auto* verify = app.add_subcommand("verify", "Run a theorem verification sweep");
  verify->add_option("theorem", theorem, "Theorem to check")
      ->required()
      ->check(CLI::IsMember(cli::theorem_names()));
  verify->add_option("--n", vopt.n, "Largest graph order for exhaustive sweeps")
      ->check(CLI::Range(1, kEnumerateMaxOrder))
      ->capture_default_str();
  verify->add_option("--trials", vopt.trials, "Seeded trials per case")
      ->check(CLI::Range(1, 1000000))
      ->capture_default_str();
  verify->add_option("--seed", vopt.seed, "Master seed")->capture_default_str();
  verify->add_option("--jobs", vopt.jobs, "Worker threads")
      ->check(CLI::Range(1, 256))
      ->capture_default_str();

  InputSpec witness_in;
  std::string kind;
  std::vector<std::string> witness_args;
  auto* witness = app.add_subcommand("witness", "Emit one certificate for a graph");
  witness->add_option("--witness", kind, "Certificate kind")
      ->check(CLI::IsMember(cli::witness_kinds()));
  witness->add_option("args", witness_args, "[KIND] [INPUT]");
  witness->add_option("--graph", witness_in.name, "Named graph");

  InputSpec diagram_in;
  std::uint64_t diagram_seed = 0;
  bool diagram_random = false;
  auto* diagram = app.add_subcommand("diagram", "Convex outer diagram of a graph, in the diagram file format");
  diagram->add_option("input", diagram_in.path, "Edge-list or graph6 file");
  diagram->add_option("--graph", diagram_in.name, "Named graph");
  diagram->add_option("--seed", diagram_seed, "Random over/under assignment with this seed")
      ->each([&](const std::string&) { diagram_random = true; });

  std::string check_path;
  auto* check = app.add_subcommand("check-diagram", "Validate a diagram file and report its links");
  check->add_option("file", check_path, "Diagram file ('-' for stdin)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? cli::kSuccess : cli::kInputError;
  }

  try {
    if (classify->parsed()) {
      std::string source;
      auto graphs = load_graphs(classify_in, source);
      emit(cli::cmd_classify(graphs, source), format);
      return cli::kSuccess;
    }
    if (verify->parsed()) {
      auto rep = cli::cmd_verify(theorem, vopt);
      emit(rep, format);
      return rep.exit_code;
    }
    if (witness->parsed()) {
      std::size_t next = 0;
      if (kind.empty()) {
        if (witness_args.empty()) throw GraphError("missing witness kind");
        kind = witness_args[next++];
      }
      if (next < witness_args.size()) witness_in.path = witness_args[next++];
      if (next < witness_args.size()) throw GraphError("too many arguments");
      std::string source;
      auto graphs = load_graphs(witness_in, source);
      if (graphs.size() != 1) throw GraphError("witness takes exactly one graph");
      emit(cli::cmd_witness(graphs.front(), kind, source), format);
      return cli::kSuccess;
    }
    if (diagram->parsed()) {
      std::string source;
      auto graphs = load_graphs(diagram_in, source);
      if (graphs.size() != 1) throw GraphError("diagram takes exactly one graph");
      const Graph& g = graphs.front();
      OverRule rule = LexicographicOver{};
      if (diagram_random) rule = RandomOver{diagram_seed};
      OuterDiagram d = convex_diagram(g, natural_order(g.order()), rule);
      if (format == "json") {
        cli::Json doc;
        doc["command"] = "diagram";
        doc["input"] = source;
        if (diagram_random) doc["seed"] = diagram_seed;
        doc["diagram"] = cli::diagram_json(d);
        std::cout << doc.dump(2) << '\n';
      } else {
        std::cout << to_diagram_text(d);
      }
      return cli::kSuccess;
    }
    if (check->parsed()) {
      OuterDiagram d = parse_diagram_text(read_all(check_path));
      const int parity = link_parity_sum(d);
      auto link = find_nonsplit_outer_link(d);
      if (format == "json") {
        cli::Json doc;
        doc["command"] = "check-diagram";
        doc["input"] = check_path;
        doc["valid"] = true;
        doc["crossings"] = d.crossings().size();
        doc["link_parity_sum"] = parity;
        doc["nonsplit_link"] = link ? cli::outer_link_json(d.graph(), *link) : cli::Json(nullptr);
        std::cout << doc.dump(2) << '\n';
      } else {
        std::cout << "valid diagram, " << cli::count_of(d.crossings().size(), "crossing")
                  << ", link parity sum "
                  << parity << '\n';
        if (link) std::cout << "non-split link " << link->to_string(d.graph()) << '\n';
        else std::cout << "every cycle-edge link splits\n";
      }
      return cli::kSuccess;
    }
  } catch (const CrossValidationError& e) {
    std::cerr << "internal consistency failure: " << e.what() << '\n';
    return cli::kFailure;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return cli::kInputError;
  } catch (const std::length_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return cli::kInputError;
  }
  return cli::kSuccess;
}
