#include "mgs/dot_io.hpp"

#include <sstream>

namespace mgs {

std::string to_dot(const Diagram& d, const DotOptions& opts) {
  const bool have_colors = opts.colors && d.colors.size() == d.vertices.size();
  const bool have_frozen = d.frozen.size() == d.vertices.size();
  auto keep = [&](const VertexLabel& v) {
    if (opts.frozen || !have_frozen) return true;
    for (std::size_t i = 0; i < d.vertices.size(); ++i) {
      if (d.vertices[i] == v) return !d.frozen[i];
    }
    return true;
  };

  std::ostringstream out;
  out << "digraph diagram {\n";
  for (std::size_t i = 0; i < d.vertices.size(); ++i) {
    const bool frozen = have_frozen && d.frozen[i];
    if (frozen && !opts.frozen) continue;
    out << "  \"" << d.vertices[i].name() << "\"";
    std::string attrs;
    if (frozen) attrs += "shape=box";
    if (have_colors && !frozen) {
      if (!attrs.empty()) attrs += " ";
      attrs += "style=filled fillcolor=";
      attrs += d.colors[i] == VertexColor::Green ? "green" : "red";
    }
    if (!attrs.empty()) out << " [" << attrs << "]";
    out << ";\n";
  }
  for (const DiagramArrow& a : d.arrows) {
    if (!keep(a.from) || !keep(a.to)) continue;
    out << "  \"" << a.from.name() << "\" -> \"" << a.to.name() << "\"";
    if (a.weight != 1) out << " [label=\"" << a.weight << "\"]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace mgs
