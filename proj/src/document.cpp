#include "hypercolor/document.hpp"

#include <sstream>

#include "hypercolor/coloring.hpp"
#include "hypercolor/macwilliams.hpp"
#include "hypercolor/spectral.hpp"

namespace hypercolor {

namespace {

std::size_t hex_digits(unsigned n) { return ((std::size_t{1} << n) + 3) / 4; }

unsigned hex_value(char ch) {
  if (ch >= '0' && ch <= '9') return static_cast<unsigned>(ch - '0');
  if (ch >= 'a' && ch <= 'f') return static_cast<unsigned>(ch - 'a' + 10);
  if (ch >= 'A' && ch <= 'F') return static_cast<unsigned>(ch - 'A' + 10);
  throw ParseError(std::string("mask_hex: invalid hex digit '") + ch + "'");
}

void render_leaf(std::ostringstream& out, const std::string& key, const Json& value) {
  if (value.is_object()) {
    for (const auto& [k, v] : value.items()) render_leaf(out, key.empty() ? k : key + "." + k, v);
    return;
  }
  out << key << ": ";
  if (value.is_string()) {
    out << value.get<std::string>();
  } else if (value.is_array()) {
    bool first = true;
    for (const auto& item : value) {
      if (!first) out << ' ';
      first = false;
      out << (item.is_string() ? item.get<std::string>() : item.dump());
    }
  } else {
    out << value.dump();
  }
  out << '\n';
}

}  // namespace

std::string encode_mask_hex(const VertexSet& s) {
  static constexpr char kDigits[] = "0123456789abcdef";
  const unsigned n = s.dimension();
  auto words = s.words();
  if (n <= 2) return std::string(1, kDigits[words[0] & 0xf]);

  std::string out;
  out.reserve(hex_digits(n));
  const std::size_t bytes = (std::size_t{1} << n) / 8;
  for (std::size_t k = 0; k < bytes; ++k) {
    const auto byte = static_cast<unsigned>((words[k / 8] >> (8 * (k % 8))) & 0xff);
    out.push_back(kDigits[byte >> 4]);
    out.push_back(kDigits[byte & 0xf]);
  }
  return out;
}

VertexSet decode_mask_hex(unsigned n, std::string_view hex) {
  try {
    check_dimension(n);
  } catch (const DimensionError& e) {
    throw ParseError(e.what());
  }
  if (hex.size() != hex_digits(n))
    throw ParseError("mask_hex: expected " + std::to_string(hex_digits(n)) + " hex digits for n = " +
                     std::to_string(n) + ", got " + std::to_string(hex.size()));

  std::vector<std::uint64_t> words(VertexSet::word_count(n), 0);
  if (n <= 2) {
    const auto value = hex_value(hex[0]);
    if ((value >> (1u << n)) != 0) throw ParseError("mask_hex: bits set beyond 2^n");
    words[0] = value;
  } else {
    for (std::size_t k = 0; 2 * k < hex.size(); ++k) {
      const std::uint64_t byte = (hex_value(hex[2 * k]) << 4) | hex_value(hex[2 * k + 1]);
      words[k / 8] |= byte << (8 * (k % 8));
    }
  }
  return VertexSet(n, std::move(words));
}

SetDocument parse_document(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("set document is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("set document must be a JSON object");
  if (!doc.contains("n") || !doc["n"].is_number_integer()) throw ParseError("set document needs an integer 'n'");
  const auto n_value = doc["n"].get<std::int64_t>();
  if (n_value < 1 || n_value > kMaxDimension)
    throw ParseError("set document: n = " + std::to_string(n_value) + " outside [1, " +
                     std::to_string(kMaxDimension) + "]");
  const auto n = static_cast<unsigned>(n_value);

  const bool has_vertices = doc.contains("vertices");
  const bool has_mask = doc.contains("mask_hex");
  if (has_vertices == has_mask) throw ParseError("set document needs exactly one of 'vertices' or 'mask_hex'");

  if (has_mask) {
    if (!doc["mask_hex"].is_string()) throw ParseError("'mask_hex' must be a string");
    return {decode_mask_hex(n, doc["mask_hex"].get<std::string>()), SetDocument::Form::mask_hex};
  }

  if (!doc["vertices"].is_array()) throw ParseError("'vertices' must be an array of strings");
  std::vector<std::string> vertices;
  for (const auto& item : doc["vertices"]) {
    if (!item.is_string()) throw ParseError("'vertices' must be an array of strings");
    vertices.push_back(item.get<std::string>());
  }
  return {make_set(n, vertices), SetDocument::Form::vertices};
}

Json to_json(const SetDocument& doc) {
  const auto& s = doc.set;
  Json out;
  out["n"] = s.dimension();
  if (doc.form == SetDocument::Form::mask_hex) {
    out["mask_hex"] = encode_mask_hex(s);
  } else {
    Json list = Json::array();
    for (auto idx : s.members()) list.push_back(to_string(Vertex{s.dimension(), idx}));
    out["vertices"] = std::move(list);
  }
  return out;
}

Json to_json(const Rational& r) { return to_string(r); }

Json to_json(const ParameterMatrix& m) {
  const auto rows = m.rows();
  return Json{{"b", m.b}, {"c", m.c}, {"rows", {{rows[0][0], rows[0][1]}, {rows[1][0], rows[1][1]}}}};
}

Json build_report(const VertexSet& s, const VerifyOptions& options) {
  const auto theorem = verify(s, options);
  const unsigned n = s.dimension();

  const auto distances = distance_distribution(s);
  const auto dual = macwilliams_from_distances(distances, krawtchouk(n));
  const auto verdict = check_perfect(s);

  Json report;
  report["tool"] = "hypercolor";
  report["version"] = kToolVersion;
  report["n"] = n;
  report["input_size"] = s.size();
  report["complemented"] = theorem.complemented;
  report["size"] = theorem.size;
  report["rho"] = to_json(theorem.rho);
  report["cor"] = theorem.cor;
  report["nei"] = to_json(theorem.nei);
  report["lhs"] = to_json(theorem.lhs);
  report["slack"] = to_json(theorem.slack);
  report["equality_form"] = theorem.equality_form;
  report["is_perfect"] = theorem.is_perfect;
  report["matrix"] = theorem.matrix ? to_json(*theorem.matrix) : Json(nullptr);
  report["fdf_bound_ok"] = theorem.fdf_bound_ok;
  report["bf_bound_ok"] = theorem.bf_bound_ok;

  Json b = Json::array(), bp = Json::array();
  for (unsigned i = 0; i <= n; ++i) {
    b.push_back(to_json(distances.normalized(i)));
    bp.push_back(to_json(dual.normalized(i)));
  }
  report["distance_counts"] = distances.counts;
  report["distance_distribution"] = std::move(b);
  report["dual_counts"] = dual.duals;
  report["dual_distribution"] = std::move(bp);
  report["spectral_support"] = spectral_support(s);

  Json coloring;
  coloring["is_perfect"] = verdict.is_perfect;
  coloring["matrix"] = verdict.matrix ? to_json(*verdict.matrix) : Json(nullptr);
  if (verdict.witness) {
    const auto& w = *verdict.witness;
    coloring["witness"] = Json{{"vertex", to_string(w.vertex)},
                               {"in_set", w.in_set},
                               {"opposite_neighbors", w.observed},
                               {"expected", w.expected}};
  } else {
    coloring["witness"] = nullptr;
  }
  report["coloring"] = std::move(coloring);
  return report;
}

std::string render_text(const Json& report) {
  std::ostringstream out;
  render_leaf(out, "", report);
  return out.str();
}

}  // namespace hypercolor
