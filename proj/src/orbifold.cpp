#include "mgs/orbifold.hpp"

namespace mgs {

namespace {

using vl::a;
using vl::b;
using vl::c;
using vl::d;
using vl::e;
using vl::f;
using vl::g;
using vl::h;
using vl::l;
using vl::m;
using vl::r;
using vl::s;

struct Builder {
  std::vector<VertexLabel> vertices;
  std::vector<ArrowSpec> arrows;

  void ord(VertexLabel u, VertexLabel v) { arrows.push_back({u, v, 1, -1}); }
  // Arrow into a pending vertex.
  void into_pending(VertexLabel u, VertexLabel v) { arrows.push_back({u, v, 2, -1}); }
  // Arrow out of a pending vertex.
  void from_pending(VertexLabel u, VertexLabel v) { arrows.push_back({u, v, 1, -2}); }
  void dbl(VertexLabel u, VertexLabel v) { arrows.push_back({u, v, 2, -2}); }
};

// Rungs h_i -> g_i -> h_(i+1) -> h_i for the orbifold-point band.
void core_band(Builder& out, int q, bool wrap) {
  for (int i = 1; i <= q; ++i) {
    int next = wrap ? (i % q) + 1 : i + 1;
    out.into_pending(h(i), g(i));
    out.from_pending(g(i), h(next));
    out.ord(h(next), h(i));
  }
}

// Two triangles around m_1; l_1 / r_1 legs only when those vertices exist.
void inner_cycles(Builder& out, int q, bool with_l1_r1) {
  out.ord(h(1), m(1));
  out.ord(m(1), h(q + 1));
  if (with_l1_r1) {
    out.ord(m(1), l(1));
    out.ord(l(1), h(1));
    out.ord(h(q + 1), r(1));
    out.ord(r(1), m(1));
  }
}

// Full rungs k = 1..kmax of the l / m / r ladder.
void ladder(Builder& out, int kmax) {
  for (int k = 1; k <= kmax; ++k) {
    out.ord(l(k), m(k + 1));
    out.ord(m(k + 1), l(k + 1));
    out.ord(l(k + 1), l(k));
    out.ord(m(k + 1), r(k));
    out.ord(r(k), r(k + 1));
    out.ord(r(k + 1), m(k + 1));
  }
}

ExchangeMatrix build_genus0(int p, int q) {
  Builder out;
  if (p == 2) {
    for (int i = 1; i <= q; ++i) out.vertices.push_back(g(i));
    for (int i = 1; i <= q; ++i) out.vertices.push_back(h(i));
    if (q == 2) {
      // The two band closures cancel the h_1 - h_2 arrows exactly.
      out.into_pending(h(1), g(1));
      out.from_pending(g(1), h(2));
      out.into_pending(h(2), g(2));
      out.from_pending(g(2), h(1));
    } else {
      core_band(out, q, /*wrap=*/true);
    }
    return matrix_from_arrows(out.vertices, out.arrows);
  }
  for (int i = 1; i <= q; ++i) out.vertices.push_back(g(i));
  for (int i = 1; i <= q + 1; ++i) out.vertices.push_back(h(i));
  for (int k = 1; k <= p - 2; ++k) out.vertices.push_back(m(k));
  for (int k = 1; k <= p - 3; ++k) out.vertices.push_back(l(k));
  for (int k = 1; k <= p - 3; ++k) out.vertices.push_back(r(k));
  out.vertices.push_back(s());
  core_band(out, q, /*wrap=*/false);
  inner_cycles(out, q, /*with_l1_r1=*/p >= 4);
  ladder(out, p - 4);
  if (p == 3) {
    // l_0 and r_0 coincide with h_1 and h_(q+1); the tail folds onto them.
    out.ord(h(q + 1), s());
    out.ord(s(), h(1));
  } else {
    out.ord(l(p - 3), m(p - 2));
    out.ord(m(p - 2), r(p - 3));
    out.ord(r(p - 3), s());
    out.ord(s(), l(p - 3));
  }
  return matrix_from_arrows(out.vertices, out.arrows);
}

ExchangeMatrix build_genus1(int p, int q) {
  Builder out;
  for (int i = 1; i <= q; ++i) out.vertices.push_back(g(i));
  for (int i = 1; i <= q + 1; ++i) out.vertices.push_back(h(i));
  for (int k = 1; k <= p - 1; ++k) out.vertices.push_back(m(k));
  for (int k = 1; k <= p - 1; ++k) out.vertices.push_back(l(k));
  for (int k = 1; k <= p - 1; ++k) out.vertices.push_back(r(k));
  out.vertices.push_back(f(1));
  out.vertices.push_back(f(2));
  core_band(out, q, /*wrap=*/false);
  inner_cycles(out, q, /*with_l1_r1=*/true);
  ladder(out, p - 2);
  out.ord(l(p - 1), f(1));
  out.ord(r(p - 1), f(1));
  out.dbl(f(1), f(2));
  out.ord(f(2), l(p - 1));
  out.ord(f(2), r(p - 1));
  return matrix_from_arrows(out.vertices, out.arrows);
}

ExchangeMatrix build_higher_genus(int n, int p, int q) {
  Builder out;
  for (int i = 1; i <= q; ++i) out.vertices.push_back(g(i));
  for (int i = 1; i <= q + 1; ++i) out.vertices.push_back(h(i));
  for (int k = 1; k <= p - 1; ++k) out.vertices.push_back(m(k));
  for (int k = 1; k <= p - 2; ++k) out.vertices.push_back(l(k));
  for (int k = 1; k <= p - 2; ++k) out.vertices.push_back(r(k));
  for (int k = 1; k <= n - 2; ++k) out.vertices.push_back(f(k));
  for (int k = 1; k <= n; ++k) out.vertices.push_back(e(k));
  for (int k = 1; k <= n; ++k) out.vertices.push_back(a(k));
  for (int k = 1; k <= n; ++k) out.vertices.push_back(b(k));
  for (int k = 1; k <= n; ++k) out.vertices.push_back(c(k));
  for (int k = 1; k <= n; ++k) out.vertices.push_back(d(k));
  core_band(out, q, /*wrap=*/false);
  inner_cycles(out, q, /*with_l1_r1=*/p >= 3);
  ladder(out, p - 3);
  if (p >= 3) {
    out.ord(l(p - 2), m(p - 1));
    out.ord(m(p - 1), r(p - 2));
  }
  // With p == 2 the ladder ends fold onto h_1 and h_(q+1).
  VertexLabel left = p >= 3 ? l(p - 2) : h(1);
  VertexLabel right = p >= 3 ? r(p - 2) : h(q + 1);
  if (n == 2) {
    out.ord(m(p - 1), e(1));
    out.ord(e(1), left);
    out.ord(right, e(2));
    out.ord(e(2), m(p - 1));
  } else {
    out.ord(m(p - 1), e(1));
    out.ord(e(1), left);
    out.ord(right, f(1));
    out.ord(f(1), m(p - 1));
    for (int k = 1; k <= n - 3; ++k) out.ord(f(k + 1), f(k));
    for (int k = 2; k <= n - 2; ++k) {
      out.ord(f(k - 1), e(k));
      out.ord(e(k), f(k));
    }
    out.ord(f(n - 2), e(n - 1));
    out.ord(e(n - 1), e(n));
    out.ord(e(n), f(n - 2));
  }
  for (int k = 1; k <= n; ++k) {
    out.ord(e(k), a(k));
    out.ord(a(k), d(k));
    out.ord(d(k), e(k));
    out.ord(d(k), c(k));
    out.ord(a(k), c(k));
    out.dbl(c(k), b(k));
    out.ord(b(k), d(k));
    out.ord(b(k), a(k));
  }
  return matrix_from_arrows(out.vertices, out.arrows);
}

}  // namespace

ParamCheck validate_params(const OrbifoldParams& params) {
  const int n = params.genus;
  const int p = params.punctures;
  const int q = params.orbifold_points;
  if (p == 1) {
    return {false, ParamRejection::PunctureOne,
            "p = 1: no triangulation of a once-punctured closed orbifold admits "
            "a maximal green sequence"};
  }
  if (q < 1) {
    return {false, ParamRejection::NoOrbifoldPoints,
            "q >= 1 orbifold points required"};
  }
  if (n < 0 || p < 1) {
    return {false, ParamRejection::TooSmall, "genus >= 0 and p >= 1 required"};
  }
  if (n == 0 && p + q < 4) {
    return {false, ParamRejection::TooSmall, "genus 0 requires p + q >= 4"};
  }
  return {};
}

ExchangeMatrix build_diagram(const OrbifoldParams& params) {
  ParamCheck check = validate_params(params);
  if (!check.ok) throw UnsupportedParams(check.reason, check.message);
  if (params.genus == 0) return build_genus0(params.punctures, params.orbifold_points);
  if (params.genus == 1) return build_genus1(params.punctures, params.orbifold_points);
  return build_higher_genus(params.genus, params.punctures, params.orbifold_points);
}

int label_index(const ExchangeMatrix& m, const VertexLabel& v) {
  return m.require_index(v);
}

}  // namespace mgs
