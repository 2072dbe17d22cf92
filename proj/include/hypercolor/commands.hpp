#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

namespace hypercolor::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 2,       // parse error or invalid parameters
  kExitConstant = 3,    // constant set, or density above 1/2 without complementing
  kExitInfeasible = 4,  // (b, c) cannot be the matrix of a perfect coloring
  kExitViolation = 5,   // sweep found a counterexample
};

struct AnalyzeArgs {
  std::string input = "-";  // path, or "-" for standard input
  bool json = true;
  bool allow_complement = true;
};

struct ConstructArgs {
  std::string kind;  // hamming | affine | half-cube
  unsigned n = 0;
  unsigned m = 0;
  unsigned coordinate = 1;
  std::string normal;  // affine normal vector as a {0,1} string
  unsigned eps = 0;
  bool mask_hex = false;
  bool json = true;
};

struct SearchArgs {
  unsigned n = 0;
  unsigned b = 0;
  unsigned c = 0;
  bool enumerate = false;
  std::uint64_t budget = 10'000'000;
  std::size_t max_results = 0;
  bool canonical = false;
  bool mask_hex = false;
  bool json = true;
};

struct SweepArgs {
  unsigned n = 0;
  bool json = true;
};

int cmd_analyze(const AnalyzeArgs& args, std::istream& in, std::ostream& out, std::ostream& err);
int cmd_construct(const ConstructArgs& args, std::ostream& out, std::ostream& err);
int cmd_search(const SearchArgs& args, std::ostream& out, std::ostream& err);
int cmd_sweep(const SweepArgs& args, std::ostream& out, std::ostream& err);

}  // namespace hypercolor::cli
