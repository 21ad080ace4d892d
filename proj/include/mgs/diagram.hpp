#pragma once

#include <vector>

#include "mgs/seed.hpp"

namespace mgs {

// Directed weighted arrow; at most one arrow per unordered vertex pair.
struct DiagramArrow {
  VertexLabel from;
  VertexLabel to;
  Int weight = 1;

  bool operator==(const DiagramArrow&) const = default;
  auto operator<=>(const DiagramArrow&) const = default;
};

// Weighted directed graph view. Vertices are kept in canonical order and
// arrows sorted, so equal views compare equal member-wise. colors / frozen
// run parallel to vertices and stay empty for plain matrix views.
struct Diagram {
  std::vector<VertexLabel> vertices;
  std::vector<DiagramArrow> arrows;
  std::vector<VertexColor> colors;
  std::vector<bool> frozen;

  bool operator==(const Diagram&) const = default;
};

// Arrow i -> j iff b_ij > 0, weight -b_ij * b_ji.
Diagram diagram_view(const ExchangeMatrix& m);

// Mutable part as above plus vertex colors; with include_frozen, companion
// vertices named with a trailing prime whose arrow weights are |c_ij| and
// whose direction follows the sign of c_ij.
Diagram diagram_view(const FramedSeed& s, bool include_frozen = false);

// Diagram-level mutation at k. Arrow orientations in d carry all the
// orientation data the weight rule needs. Throws UnknownVertex and, when a
// weight update would need an irrational square root, NonIntegerWeight.
Diagram diagram_mutate(const Diagram& d, const VertexLabel& k);

// Companion name with a trailing prime.
VertexLabel frozen_companion(const VertexLabel& v);

}  // namespace mgs
