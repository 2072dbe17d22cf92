#include "hypercolor/theorem.hpp"

#include <chrono>

#include "hypercolor/spectral.hpp"

namespace hypercolor {

namespace {

void require_non_constant(const VertexSet& s, const char* what) {
  if (s.is_constant()) throw ConstantSetError(std::string(what) + ": S is empty or the whole cube");
}

bool above_half(const VertexSet& s) { return 2 * s.size() > s.cube_size(); }

/// Integer-cleared slack, n|S|2^n - N_1 2^n - 2(cor+1)|S|(2^n - |S|),
/// where N_1 counts ordered distance-1 pairs in S.
std::int64_t scaled_slack(unsigned n, std::int64_t size, std::int64_t pairs_at_one, unsigned cor) {
  const std::int64_t points = std::int64_t{1} << n;
  return std::int64_t{n} * size * points - pairs_at_one * points -
         2 * (std::int64_t{cor} + 1) * size * (points - size);
}

/// N_1 2^n == |S|(|S| n + (n - 2(cor+1))(2^n - |S|)).
bool scaled_equality_form(unsigned n, std::int64_t size, std::int64_t pairs_at_one, unsigned cor) {
  const std::int64_t points = std::int64_t{1} << n;
  const std::int64_t free = std::int64_t{n} - 2 * (std::int64_t{cor} + 1);
  return pairs_at_one * points == size * (size * std::int64_t{n} + free * (points - size));
}

std::int64_t pairs_at_distance_one(const VertexSet& s) {
  const auto st = stats(s);
  return static_cast<std::int64_t>(st.neighbor_sum - st.size);
}

}  // namespace

TheoremReport verify(const VertexSet& original, VerifyOptions options) {
  require_non_constant(original, "verify");
  const bool swap = above_half(original);
  if (swap && !options.allow_complement)
    throw DensityError("verify: density above 1/2 and complementing is disabled");
  const VertexSet s = swap ? complement(original) : original;

  const unsigned n = s.dimension();
  const auto size = static_cast<std::int64_t>(s.size());
  const std::int64_t points = std::int64_t{1} << n;
  const auto pairs = pairs_at_distance_one(s);

  TheoremReport r;
  r.n = n;
  r.size = s.size();
  r.complemented = swap;
  r.rho = Rational(size, points);
  r.cor = cor_order(s);
  r.nei = Rational(pairs, size);
  r.lhs = r.nei + Rational(2 * (std::int64_t{r.cor} + 1)) * (Rational(1) - r.rho);
  r.slack_scaled = scaled_slack(n, size, pairs, r.cor);
  r.slack = Rational(r.slack_scaled, size * points);
  r.equality_form = scaled_equality_form(n, size, pairs, r.cor);

  const auto verdict = check_perfect(s);
  r.is_perfect = verdict.is_perfect;
  r.matrix = verdict.matrix;
  r.fdf_bound_ok = fdf_bound_holds(n, s.size(), r.cor);
  r.bf_bound_ok = bf_bound_holds(n, s.size(), r.cor);
  return r;
}

bool equality_form(const VertexSet& original) {
  require_non_constant(original, "equality_form");
  const VertexSet s = above_half(original) ? complement(original) : original;
  return scaled_equality_form(s.dimension(), static_cast<std::int64_t>(s.size()), pairs_at_distance_one(s),
                              cor_order(s));
}

bool fdf_bound(const VertexSet& s) {
  require_non_constant(s, "fdf_bound");
  return fdf_bound_holds(s.dimension(), s.size(), cor_order(s));
}

bool bf_bound(const VertexSet& s) {
  require_non_constant(s, "bf_bound");
  return bf_bound_holds(s.dimension(), s.size(), cor_order(s));
}

bool bf_tight(const VertexSet& s) {
  require_non_constant(s, "bf_tight");
  return bf_bound_tight(s.dimension(), s.size(), cor_order(s));
}

bool code_rigidity(const VertexSet& s, unsigned reference_n) {
  const unsigned n = s.dimension();
  if (reference_n != n) throw DimensionError("code_rigidity: reference length differs from set dimension");
  if (((n + 1) & n) != 0) throw InvalidArgument("code_rigidity: n is not of the form 2^m - 1");

  // Perfect codes have |H| = 2^n / (n+1) and cor(H) = (n-1)/2.
  if (s.size() * (std::uint64_t{n} + 1) != s.cube_size()) return true;
  if (cor_order(s) != (n - 1) / 2) return true;
  return is_perfect_code(s);
}

SweepSummary sweep(unsigned n) {
  if (n < 1 || n > kMaxSweepDimension)
    throw DimensionError("sweep: n must be in [1, " + std::to_string(kMaxSweepDimension) + "]");
  const auto start = std::chrono::steady_clock::now();

  SweepSummary out;
  out.n = n;
  const std::uint64_t last = (std::uint64_t{1} << (std::uint64_t{1} << n)) - 1;
  auto fail = [&](std::uint64_t mask, const char* what) {
    if (!out.violation_mask) {
      out.violation_mask = mask;
      out.violation = what;
    }
  };

  for (std::uint64_t mask = 1; mask < last && !out.violation_mask; ++mask) {
    const VertexSet s(n, {mask});
    ++out.subsets;

    const auto report = verify(s);
    const bool perfect = check_perfect(s).is_perfect;
    const bool equal = report.slack_scaled == 0;

    if (report.slack_scaled < 0) fail(mask, "slack is negative");
    if (equal != perfect) fail(mask, "slack = 0 disagrees with the perfect-coloring scan");
    if (report.equality_form != equal) fail(mask, "equality form disagrees with slack = 0");
    if (!fdf_bound_holds(n, s.size(), report.cor)) fail(mask, "Fon-Der-Flaass bound violated");
    if (!bf_bound_holds(n, s.size(), report.cor)) fail(mask, "Bierbrauer-Friedman bound violated");
    if (bf_bound_tight(n, s.size(), report.cor)) {
      ++out.bf_equality_cases;
      if (!perfect) fail(mask, "Bierbrauer-Friedman equality case is not a perfect coloring");
    }
    out.equality_cases += equal;
    out.perfect_colorings += perfect;
  }

  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

}  // namespace hypercolor
