#pragma once

#include <string>
#include <string_view>

#include "json.hpp"

#include "hypercolor/cube.hpp"
#include "hypercolor/theorem.hpp"

namespace hypercolor {

using Json = nlohmann::ordered_json;

inline constexpr const char* kToolVersion = "1.0.0";

/**
 * JSON set document. Exactly one representation is present:
 *
 *     {"n": 3, "vertices": ["000", "011"]}
 *     {"n": 3, "mask_hex": "09"}
 *
 * mask_hex has ceil(2^n / 4) hex digits. Pairs of digits form bytes
 * (high nibble first), byte 0 leftmost; bit i of the little-endian byte
 * sequence is the membership of the vertex with index i. For n <= 2 the
 * single digit is byte 0.
 */
struct SetDocument {
  enum class Form { vertices, mask_hex };

  VertexSet set;
  Form form = Form::vertices;
};

SetDocument parse_document(std::string_view text);
Json to_json(const SetDocument& doc);

std::string encode_mask_hex(const VertexSet& s);
VertexSet decode_mask_hex(unsigned n, std::string_view hex);

Json to_json(const Rational& r);
Json to_json(const ParameterMatrix& m);

/// Full analysis report. Throws ConstantSetError for constant S and
/// DensityError when ρ(S) > 1/2 and complementing is disabled.
Json build_report(const VertexSet& s, const VerifyOptions& options = {});

/// One "key: value" line per leaf, nested keys joined with '.'.
std::string render_text(const Json& report);

}  // namespace hypercolor
