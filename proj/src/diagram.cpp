#include "mgs/diagram.hpp"

#include <algorithm>
#include <numeric>

namespace mgs {

namespace {

void sort_arrows(std::vector<DiagramArrow>& arrows) {
  std::sort(arrows.begin(), arrows.end());
}

// Sorts vertices canonically, keeping colors / frozen aligned.
void sort_vertices(Diagram& d) {
  const std::size_t n = d.vertices.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return d.vertices[a] < d.vertices[b];
  });
  Diagram out;
  out.arrows = std::move(d.arrows);
  out.vertices.reserve(n);
  for (std::size_t i : order) out.vertices.push_back(std::move(d.vertices[i]));
  if (!d.colors.empty()) {
    out.colors.reserve(n);
    for (std::size_t i : order) out.colors.push_back(d.colors[i]);
  }
  if (!d.frozen.empty()) {
    out.frozen.reserve(n);
    for (std::size_t i : order) out.frozen.push_back(d.frozen[i]);
  }
  d = std::move(out);
}

}  // namespace

VertexLabel frozen_companion(const VertexLabel& v) {
  return VertexLabel::parse(v.name() + "'");
}

Diagram diagram_view(const ExchangeMatrix& m) {
  Diagram d;
  d.vertices = m.labels();
  const int n = m.size();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      Int bij = m.b(i, j);
      if (bij == 0) continue;
      Int weight = -bij * m.b(j, i);
      if (bij > 0) {
        d.arrows.push_back({m.label(i), m.label(j), weight});
      } else {
        d.arrows.push_back({m.label(j), m.label(i), weight});
      }
    }
  }
  sort_vertices(d);
  sort_arrows(d.arrows);
  return d;
}

Diagram diagram_view(const FramedSeed& s, bool include_frozen) {
  Diagram d = diagram_view(s.base_matrix());
  const int n = s.size();
  d.colors.reserve(d.vertices.size());
  d.frozen.assign(d.vertices.size(), false);
  for (const auto& v : d.vertices) d.colors.push_back(color_of(s, v));
  if (include_frozen) {
    for (int j = 0; j < n; ++j) {
      d.vertices.push_back(frozen_companion(s.label(j)));
      d.colors.push_back(VertexColor::Red);
      d.frozen.push_back(true);
      for (int i = 0; i < n; ++i) {
        Int cij = s.c(i, j);
        if (cij > 0) {
          d.arrows.push_back({s.label(i), frozen_companion(s.label(j)), cij});
        } else if (cij < 0) {
          d.arrows.push_back({frozen_companion(s.label(j)), s.label(i), -cij});
        }
      }
    }
    sort_vertices(d);
    sort_arrows(d.arrows);
  }
  return d;
}

Diagram diagram_mutate(const Diagram& d, const VertexLabel& k) {
  const int n = static_cast<int>(d.vertices.size());
  int v = -1;
  for (int i = 0; i < n; ++i) {
    if (d.vertices[i] == k) v = i;
  }
  if (v < 0) throw UnknownVertex("unknown vertex '" + k.name() + "'");

  std::vector<Int> w(static_cast<std::size_t>(n) * n, 0);
  auto at = [&](int i, int j) -> Int& { return w[static_cast<std::size_t>(i) * n + j]; };
  for (const auto& arrow : d.arrows) {
    int i = -1;
    int j = -1;
    for (int t = 0; t < n; ++t) {
      if (d.vertices[t] == arrow.from) i = t;
      if (d.vertices[t] == arrow.to) j = t;
    }
    if (i < 0 || j < 0) throw UnknownVertex("arrow endpoint not in vertex list");
    at(i, j) = arrow.weight;
  }

  std::vector<Int> out = w;
  auto result = [&](int i, int j) -> Int& { return out[static_cast<std::size_t>(i) * n + j]; };
  for (int j = 0; j < n; ++j) {
    if (at(j, v) <= 0) continue;
    for (int i = 0; i < n; ++i) {
      if (at(v, i) <= 0) continue;
      const Int a = at(j, v);
      const Int b = at(v, i);
      Int c = 0;
      int sc = 0;
      // sc = +1 when the j -> v -> i path closes into an oriented cycle.
      if (at(i, j) > 0) {
        c = at(i, j);
        sc = 1;
      } else if (at(j, i) > 0) {
        c = at(j, i);
        sc = -1;
      }
      const Int prod = a * b * c;
      const Int root = isqrt(prod);
      if (root * root != prod) {
        throw NonIntegerWeight("mutation at '" + k.name() + "' needs sqrt(" +
                               std::to_string(prod) + ") between '" +
                               d.vertices[j].name() + "' and '" +
                               d.vertices[i].name() + "'");
      }
      const Int weight = a * b + c - 2 * sc * root;
      // Sign of sqrt(a*b) - sc * sqrt(c) fixes the new direction.
      int dir;
      if (sc <= 0) {
        dir = 1;
      } else if (a * b > c) {
        dir = 1;
      } else if (a * b < c) {
        dir = -1;
      } else {
        dir = 0;
      }
      result(i, j) = 0;
      result(j, i) = 0;
      if (weight > 0 && dir > 0) {
        result(j, i) = weight;
      } else if (weight > 0 && dir < 0) {
        result(i, j) = weight;
      }
    }
  }
  for (int u = 0; u < n; ++u) {
    if (u == v) continue;
    result(u, v) = at(v, u);
    result(v, u) = at(u, v);
  }

  Diagram mutated;
  mutated.vertices = d.vertices;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (out[static_cast<std::size_t>(i) * n + j] > 0) {
        mutated.arrows.push_back({d.vertices[i], d.vertices[j],
                                  out[static_cast<std::size_t>(i) * n + j]});
      }
    }
  }
  sort_vertices(mutated);
  sort_arrows(mutated.arrows);
  return mutated;
}

}  // namespace mgs
