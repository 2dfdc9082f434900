#pragma once

#include <optional>
#include <string>
#include <vector>

#include "amalgam/matrix.hpp"
#include "json.hpp"

namespace amalgam {

using Json = nlohmann::ordered_json;

/// Parsed descriptor document: a ring plus optional matrix and elements.
struct Document {
  RingPtr ring;
  std::optional<Matrix> matrix;
  std::vector<RingValue> elements;
};

/// ParseError on malformed JSON text.
Json parse_json_text(const std::string& text);

/// Ring object with a "kind" tag; series precisions absent from the
/// document default to `default_precision`. Unknown fields are rejected.
RingPtr parse_ring(const Json& j, std::size_t default_precision);
RingValue parse_value(const Json& j, const RingPtr& ring);
/// Rows of entries; all rows must have the same length.
Matrix parse_matrix(const Json& j, const RingPtr& ring);
std::vector<RingValue> parse_elements(const Json& j, const RingPtr& ring);
/// {"ring": ..., "matrix"?: ..., "elements"?: ...}
Document parse_document(const Json& j, std::size_t default_precision);

Json ring_to_json(const RingDescriptor& ring);
Json value_to_json(const RingValue& v);
Json matrix_to_json(const Matrix& m);

}  // namespace amalgam
