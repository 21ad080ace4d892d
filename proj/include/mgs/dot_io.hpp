#pragma once

#include <string>

#include "mgs/diagram.hpp"

namespace mgs {

struct DotOptions {
  bool colors = false;  // fill green/red vertices when the view carries colors
  bool frozen = true;   // keep frozen companions (boxes) when present
};

// Deterministic Graphviz rendering: vertices in canonical order, arrows in
// sorted order, byte-identical across runs for equal diagrams.
std::string to_dot(const Diagram& d, const DotOptions& opts = {});

}  // namespace mgs
