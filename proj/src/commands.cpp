#include "hypercolor/commands.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "hypercolor/document.hpp"
#include "hypercolor/search.hpp"
#include "hypercolor/theorem.hpp"

namespace hypercolor::cli {

namespace {

void emit(std::ostream& out, const Json& doc, bool json) {
  if (json)
    out << doc.dump(2) << '\n';
  else
    out << render_text(doc);
}

std::string read_all(std::istream& in) {
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

SetDocument::Form form(bool mask_hex) { return mask_hex ? SetDocument::Form::mask_hex : SetDocument::Form::vertices; }

}  // namespace

int cmd_analyze(const AnalyzeArgs& args, std::istream& in, std::ostream& out, std::ostream& err) {
  std::string text;
  if (args.input.empty() || args.input == "-") {
    text = read_all(in);
  } else {
    std::ifstream file(args.input);
    if (!file) {
      err << "error: cannot open " << args.input << '\n';
      return kExitUsage;
    }
    text = read_all(file);
  }

  try {
    const auto doc = parse_document(text);
    emit(out, build_report(doc.set, VerifyOptions{args.allow_complement}), args.json);
    return kExitOk;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ConstantSetError& e) {
    err << "error: " << e.what() << '\n';
    return kExitConstant;
  } catch (const DensityError& e) {
    err << "error: " << e.what() << '\n';
    return kExitConstant;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

int cmd_construct(const ConstructArgs& args, std::ostream& out, std::ostream& err) {
  try {
    Construction c;
    if (args.kind == "hamming") {
      c = HammingConstruction{args.m};
    } else if (args.kind == "affine") {
      const auto v = parse_vertex(args.normal);
      if (args.n != 0 && args.n != v.dim)
        throw InvalidArgument("affine: normal vector length differs from n");
      if (args.eps > 1) throw InvalidArgument("affine: eps must be 0 or 1");
      c = AffineConstruction{v, args.eps == 1};
    } else if (args.kind == "half-cube") {
      c = HalfCubeConstruction{args.n, args.coordinate};
    } else {
      throw InvalidArgument("unknown construction '" + args.kind + "' (expected hamming, affine, half-cube)");
    }
    emit(out, to_json(SetDocument{construct(c), form(args.mask_hex)}), args.json);
    return kExitOk;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

int cmd_search(const SearchArgs& args, std::ostream& out, std::ostream& err) {
  const ParameterMatrix target{args.n, args.b, args.c};
  try {
    check_dimension(args.n);
    feasible_size(target);
  } catch (const InfeasibleParameters& e) {
    err << "error: infeasible parameters (b=" << args.b << ", c=" << args.c << "): " << e.what() << '\n';
    return kExitInfeasible;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    SearchResult result;
    if (args.enumerate) {
      result = enumerate_perfect(args.n, target, args.canonical);
    } else {
      result = backtrack_search(target, BacktrackOptions{args.budget, args.max_results, args.canonical});
    }

    Json doc;
    doc["n"] = args.n;
    doc["matrix"] = to_json(target);
    doc["mode"] = args.enumerate ? "enumerate" : "backtrack";
    doc["canonical"] = args.canonical;
    doc["exhaustive"] = result.exhaustive;
    doc["nodes"] = result.nodes;
    doc["count"] = result.found.size();
    Json list = Json::array();
    for (const auto& s : result.found) list.push_back(to_json(SetDocument{s, form(args.mask_hex)}));
    doc["colorings"] = std::move(list);
    emit(out, doc, args.json);
    return kExitOk;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

int cmd_sweep(const SweepArgs& args, std::ostream& out, std::ostream& err) {
  SweepSummary summary;
  try {
    summary = sweep(args.n);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  Json doc;
  doc["n"] = summary.n;
  doc["subsets"] = summary.subsets;
  doc["equality_cases"] = summary.equality_cases;
  doc["perfect_colorings"] = summary.perfect_colorings;
  doc["bf_equality_cases"] = summary.bf_equality_cases;
  doc["violations"] = summary.violation_mask ? 1 : 0;
  doc["seconds"] = summary.seconds;
  if (summary.violation_mask) {
    const VertexSet s(summary.n, {*summary.violation_mask});
    doc["counterexample"] = Json{{"mask_hex", encode_mask_hex(s)}, {"check", summary.violation}};
  }
  emit(out, doc, args.json);

  if (summary.violation_mask) {
    err << "violation: " << summary.violation << " (mask_hex " << doc["counterexample"]["mask_hex"].get<std::string>()
        << ")\n";
    return kExitViolation;
  }
  return kExitOk;
}

}  // namespace hypercolor::cli
