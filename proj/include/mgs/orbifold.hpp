#pragma once

#include <string>

#include "mgs/matrix.hpp"

namespace mgs {

// Surface data: genus n >= 0, punctures p >= 1, orbifold points q >= 1.
struct OrbifoldParams {
  int genus = 0;
  int punctures = 1;
  int orbifold_points = 1;

  bool operator==(const OrbifoldParams&) const = default;
};

enum class ParamRejection { PunctureOne, TooSmall, NoOrbifoldPoints };

struct ParamCheck {
  bool ok = true;
  ParamRejection reason = ParamRejection::TooSmall;
  std::string message;
};

// p == 1 -> PunctureOne; q < 1 -> NoOrbifoldPoints; degenerate or
// genus-0 with p + q < 4 -> TooSmall.
ParamCheck validate_params(const OrbifoldParams& params);

struct UnsupportedParams : Error {
  ParamRejection reason;
  UnsupportedParams(ParamRejection why, const std::string& what)
      : Error(what), reason(why) {}
};

// Triangulation diagram for the parameters. Vertices appear in canonical
// label order. Throws UnsupportedParams when validate_params rejects.
ExchangeMatrix build_diagram(const OrbifoldParams& params);

// Canonical position of a label inside the diagram. Throws UnknownVertex.
int label_index(const ExchangeMatrix& m, const VertexLabel& v);

}  // namespace mgs
