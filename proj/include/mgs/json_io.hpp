#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mgs/orbifold.hpp"
#include "mgs/seed.hpp"

namespace mgs {

// Serialized diagram: exchange pairs (never display weights), symmetrizer
// entries per vertex, optional originating parameters and frozen rows.
struct DiagramDocument {
  std::string version = "1.0";
  std::optional<OrbifoldParams> params;  // nullopt serializes as "custom"
  ExchangeMatrix matrix;
  std::optional<std::vector<Int>> frozen_rows;  // row-major n x n C block

  bool operator==(const DiagramDocument&) const = default;
};

DiagramDocument make_document(const ExchangeMatrix& m,
                              std::optional<OrbifoldParams> params = std::nullopt);
DiagramDocument make_document(const FramedSeed& s,
                              std::optional<OrbifoldParams> params = std::nullopt);

// Deterministic rendering: fixed key order, two-space indent.
std::string to_json(const DiagramDocument& doc);

// Validating parse; the stored symmetrizer must keep diag(d)·B skew-symmetric.
// Throws ParseError (and matrix construction errors for bad pair data).
DiagramDocument document_from_json(const std::string& text);

// Stored frozen rows, or a fresh framing when none are present.
FramedSeed seed_from_document(const DiagramDocument& doc);

}  // namespace mgs
