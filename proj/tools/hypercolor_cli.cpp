// hypercolor: analyze subsets of the Boolean n-cube.
//
//   hypercolor analyze [FILE] [--text] [--allow-complement on|off]
//   hypercolor construct hamming 3 | affine v=110 eps=0 | half-cube n=4 coord=1
//   hypercolor search -n 7 -b 7 -c 1 [--budget N] [--canonical on|off] [--enumerate]
//   hypercolor sweep 4

#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "hypercolor/commands.hpp"

namespace {

using namespace hypercolor::cli;

bool apply_construct_params(ConstructArgs& args, const std::vector<std::string>& params) {
  for (const auto& p : params) {
    const auto eq = p.find('=');
    try {
      if (eq == std::string::npos) {
        args.m = static_cast<unsigned>(std::stoul(p));
        continue;
      }
      const auto key = p.substr(0, eq);
      const auto value = p.substr(eq + 1);
      if (key == "n")
        args.n = static_cast<unsigned>(std::stoul(value));
      else if (key == "m")
        args.m = static_cast<unsigned>(std::stoul(value));
      else if (key == "coord" || key == "coordinate")
        args.coordinate = static_cast<unsigned>(std::stoul(value));
      else if (key == "v")
        args.normal = value;
      else if (key == "eps")
        args.eps = static_cast<unsigned>(std::stoul(value));
      else {
        std::cerr << "error: unknown construct parameter '" << key << "'\n";
        return false;
      }
    } catch (const std::exception&) {
      std::cerr << "error: bad construct parameter '" << p << "'\n";
      return false;
    }
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Walsh spectrum, correlation immunity and perfect 2-colorings of the Boolean n-cube"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string("hypercolor ") + "1.0.0");

  bool text = false;
  auto add_format = [&text](CLI::App* sub) { sub->add_flag("--text,!--json", text, "Plain text instead of JSON"); };

  AnalyzeArgs analyze;
  std::string allow_complement = "on";
  auto* analyze_cmd = app.add_subcommand("analyze", "Analyze a set document (file or stdin)");
  analyze_cmd->add_option("input", analyze.input, "Set document path, '-' for stdin");
  analyze_cmd->add_option("--allow-complement", allow_complement, "Analyze the complement when density > 1/2")
      ->check(CLI::IsMember({"on", "off"}));
  add_format(analyze_cmd);

  ConstructArgs construct;
  std::vector<std::string> construct_params;
  auto* construct_cmd = app.add_subcommand("construct", "Emit a known perfect coloring as a set document");
  construct_cmd->add_option("kind", construct.kind, "hamming | affine | half-cube")->required();
  construct_cmd->add_option("params", construct_params, "m (hamming), key=value pairs: n, m, v, eps, coord");
  construct_cmd->add_flag("--mask", construct.mask_hex, "Emit mask_hex instead of a vertex list");
  add_format(construct_cmd);

  SearchArgs search;
  std::string canonical = "off";
  auto* search_cmd = app.add_subcommand("search", "Find perfect colorings with matrix ((n-b,b),(c,n-c))");
  search_cmd->add_option("-n", search.n, "Cube dimension")->required();
  search_cmd->add_option("-b", search.b, "Neighbors outside S of each vertex in S")->required();
  search_cmd->add_option("-c", search.c, "Neighbors inside S of each vertex outside S")->required();
  search_cmd->add_option("--budget", search.budget, "Backtracking node limit");
  search_cmd->add_option("--max-results", search.max_results, "Stop after this many colorings (0 = all)");
  search_cmd->add_option("--canonical", canonical, "One representative per translation class")
      ->check(CLI::IsMember({"on", "off"}));
  search_cmd->add_flag("--enumerate", search.enumerate, "Exhaustive subset enumeration (n <= 4)");
  search_cmd->add_flag("--mask", search.mask_hex, "Emit mask_hex documents");
  add_format(search_cmd);

  SweepArgs sweep;
  auto* sweep_cmd = app.add_subcommand("sweep", "Check the inequality on every subset of E^n (n <= 4)");
  sweep_cmd->add_option("n", sweep.n, "Cube dimension")->required();
  add_format(sweep_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (*analyze_cmd) {
    analyze.json = !text;
    analyze.allow_complement = allow_complement == "on";
    return cmd_analyze(analyze, std::cin, std::cout, std::cerr);
  }
  if (*construct_cmd) {
    construct.json = !text;
    if (!apply_construct_params(construct, construct_params)) return kExitUsage;
    return cmd_construct(construct, std::cout, std::cerr);
  }
  if (*search_cmd) {
    search.json = !text;
    search.canonical = canonical == "on";
    return cmd_search(search, std::cout, std::cerr);
  }
  sweep.json = !text;
  return cmd_sweep(sweep, std::cout, std::cerr);
}
