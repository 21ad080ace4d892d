#include "mgs/sequence.hpp"

#include <algorithm>

namespace mgs {

namespace {

using vl::f;
using vl::g;
using vl::h;
using vl::l;
using vl::m;
using vl::r;
using vl::s;

int sgn(int x) { return (x > 0) - (x < 0); }

std::vector<VertexLabel> h_desc(int from, int to) {
  std::vector<VertexLabel> out;
  for (int i = from; i >= to; --i) out.push_back(h(i));
  return out;
}

std::vector<VertexLabel> h_asc(int from, int to) {
  std::vector<VertexLabel> out;
  for (int i = from; i <= to; ++i) out.push_back(h(i));
  return out;
}

std::vector<VertexLabel> g_run(int q) {
  std::vector<VertexLabel> out;
  for (int i = 1; i <= q; ++i) out.push_back(g(i));
  return out;
}

std::vector<VertexLabel> f_run(int from, int to) {
  std::vector<VertexLabel> out;
  if (from < 1 || to < 1) return out;  // f-indices start at 1; empty run
  if (from <= to) {
    for (int k = from; k <= to; ++k) out.push_back(f(k));
  } else {
    for (int k = from; k >= to; --k) out.push_back(f(k));
  }
  return out;
}

void append(std::vector<VertexLabel>& into, const std::vector<VertexLabel>& tail) {
  into.insert(into.end(), tail.begin(), tail.end());
}

struct SeqBuilder {
  MutationSequence seq;

  void span(std::string id, std::vector<VertexLabel> steps) {
    std::size_t begin = seq.steps.size();
    for (auto& v : steps) seq.steps.push_back(std::move(v));
    seq.provenance.push_back({begin, seq.steps.size(), std::move(id)});
  }
};

// Vertex ranges that exist for the given parameters.
int m_max(const OrbifoldParams& P) { return P.genus >= 1 ? P.punctures - 1 : P.punctures - 2; }
int l_max(const OrbifoldParams& P) {
  if (P.genus == 1) return P.punctures - 1;
  if (P.genus >= 2) return P.punctures - 2;
  return P.punctures >= 3 ? P.punctures - 3 : 0;
}
int h_max(const OrbifoldParams& P) {
  return (P.genus >= 1 || P.punctures > 2) ? P.orbifold_points + 1 : P.orbifold_points;
}

// Steps 1 through 4(b), shared by every sequence with genus >= 1.
void opening_steps(SeqBuilder& sb, const OrbifoldParams& P) {
  const int p = P.punctures;
  const int q = P.orbifold_points;
  std::vector<VertexLabel> s1;
  for (int k = p - 2; k >= p - 2 * ((p - 1) / 2); k -= 2) {
    append(s1, subsequence(SubseqKind::Alpha, k, P));
  }
  sb.span("step 1", std::move(s1));

  std::vector<VertexLabel> s2 = h_desc(q + 1, 1);
  s2.push_back(m(p + 1 - 2 * (p / 2)));
  append(s2, h_asc(2, q + 1 - p + 2 * (p / 2)));
  sb.span("step 2", std::move(s2));

  std::vector<VertexLabel> s3;
  for (int k = p - 3; k >= std::max(1, p + 1 - 2 * (p / 2)); k -= 2) {
    append(s3, subsequence(SubseqKind::Beta, k, P));
  }
  sb.span("step 3", std::move(s3));

  std::vector<VertexLabel> s4a = g_run(q);
  append(s4a, h_desc(q + sgn(p - 2), 2));
  append(s4a, subsequence(SubseqKind::Mu, 0, P));
  sb.span("step 4(a)", std::move(s4a));

  std::vector<VertexLabel> s4b;
  for (int k = p - 2 * ((p - 1) / 2); k <= p - 4; k += 2) {
    s4b.push_back(l(k));
    s4b.push_back(r(k));
  }
  sb.span("step 4(b)", std::move(s4b));
}

std::vector<VertexLabel> delta_chain(const OrbifoldParams& P) {
  const int p = P.punctures;
  std::vector<VertexLabel> out;
  for (int k = p - 4; k >= std::max(1, p - 2 * ((p - 1) / 2)); k -= 2) {
    append(out, subsequence(SubseqKind::Delta, k, P));
  }
  return out;
}

std::vector<VertexLabel> core_return(const OrbifoldParams& P) {
  std::vector<VertexLabel> out = subsequence(SubseqKind::Mu, 0, P);
  append(out, subsequence(SubseqKind::Epsilon, 0, P));
  append(out, g_run(P.orbifold_points));
  append(out, subsequence(SubseqKind::Omega, 0, P));
  return out;
}

// Genus-1 translated tables, one branch per case.
MutationSequence delta_genus1_cases(const OrbifoldParams& P) {
  const int p = P.punctures;
  const int q = P.orbifold_points;
  SeqBuilder sb;
  auto alpha = [&](int k) { return subsequence(SubseqKind::Alpha, k, P); };
  auto beta = [&](int k) { return subsequence(SubseqKind::Beta, k, P); };
  auto deltak = [&](int k) { return subsequence(SubseqKind::Delta, k, P); };
  if (p == 2 && q == 1) {
    sb.span("step 1", {});
    sb.span("step 2", {h(2), h(1), m(1), h(2)});
    sb.span("step 3", {});
    sb.span("step 4(a)", {g(1)});
    sb.span("step 4(b)", {});
    sb.span("step 4(c)", {l(1), f(1), r(1), f(2), l(1), f(1)});
    sb.span("step 5", {h(1), m(1), h(2), h(1)});
    sb.span("step 6(a)", {f(1), l(1), f(2), r(1), f(1), l(1)});
    sb.span("step 6(b)", {});
    sb.span("step 6(c)", {g(1)});
    sb.span("step 6(d)", {});
    return sb.seq;
  }
  if (p == 2) {
    std::vector<VertexLabel> s2 = h_desc(q + 1, 1);
    s2.push_back(m(1));
    append(s2, h_asc(2, q + 1));
    std::vector<VertexLabel> s4a = g_run(q);
    append(s4a, h_desc(q, 2));
    std::vector<VertexLabel> s6c = h_asc(2, q);
    append(s6c, g_run(q));
    sb.span("step 1", {});
    sb.span("step 2", std::move(s2));
    sb.span("step 3", {});
    sb.span("step 4(a)", std::move(s4a));
    sb.span("step 4(b)", {});
    sb.span("step 4(c)", {l(1), f(1), r(1), f(2), l(1), f(1)});
    sb.span("step 5", {h(1), m(1), h(q + 1), h(1)});
    sb.span("step 6(a)", {f(1), l(1), f(2), r(1), f(1), l(1)});
    sb.span("step 6(b)", {});
    sb.span("step 6(c)", std::move(s6c));
    sb.span("step 6(d)", {});
    return sb.seq;
  }
  if (p == 3) {
    std::vector<VertexLabel> s2 = h_desc(q + 1, 1);
    s2.push_back(m(2));
    append(s2, h_asc(2, q));
    std::vector<VertexLabel> s4a = g_run(q);
    append(s4a, h_desc(q + 1, 2));
    s4a.push_back(m(2));
    std::vector<VertexLabel> s6c = {m(2)};
    append(s6c, h_asc(2, q));
    append(s6c, g_run(q));
    s6c.push_back(h(q + 1));
    s6c.push_back(g(q));
    sb.span("step 1", alpha(1));
    sb.span("step 2", std::move(s2));
    sb.span("step 3", {});
    sb.span("step 4(a)", std::move(s4a));
    sb.span("step 4(b)", {});
    sb.span("step 4(c)", {l(2), f(1), r(2), f(2), l(2), f(1)});
    sb.span("step 5", {m(1), l(1), r(1), m(1)});
    sb.span("step 6(a)", {f(1), l(2), f(2), r(2), f(1), l(2)});
    sb.span("step 6(b)", {});
    sb.span("step 6(c)", std::move(s6c));
    sb.span("step 6(d)", {});
    return sb.seq;
  }
  if (p == 4) {
    std::vector<VertexLabel> s2 = h_desc(q + 1, 1);
    s2.push_back(m(1));
    append(s2, h_asc(2, q + 1));
    std::vector<VertexLabel> s4a = g_run(q);
    append(s4a, h_desc(q + 1, 2));
    s4a.push_back(m(1));
    std::vector<VertexLabel> s6c = {m(1)};
    append(s6c, h_asc(2, q + 1));
    append(s6c, g_run(q));
    sb.span("step 1", alpha(2));
    sb.span("step 2", std::move(s2));
    sb.span("step 3", beta(1));
    sb.span("step 4(a)", std::move(s4a));
    sb.span("step 4(b)", {});
    sb.span("step 4(c)", {l(3), f(1), r(3), f(2), l(3), f(1)});
    sb.span("step 5", {m(2), l(2), r(2), m(2)});
    sb.span("step 6(a)", {f(1), l(3), f(2), r(3), f(1), l(3)});
    sb.span("step 6(b)", {});
    sb.span("step 6(c)", std::move(s6c));
    sb.span("step 6(d)", {l(1), r(1)});
    return sb.seq;
  }
  const bool even = p % 2 == 0;
  std::vector<VertexLabel> s1;
  for (int k = p - 2; k >= (even ? 2 : 1); k -= 2) append(s1, alpha(k));
  std::vector<VertexLabel> s2 = h_desc(q + 1, 1);
  s2.push_back(even ? m(1) : m(2));
  append(s2, h_asc(2, even ? q + 1 : q));
  std::vector<VertexLabel> s3;
  for (int k = p - 3; k >= (even ? 1 : 2); k -= 2) append(s3, beta(k));
  std::vector<VertexLabel> s4a = g_run(q);
  append(s4a, h_desc(q + 1, 2));
  s4a.push_back(even ? m(1) : m(2));
  std::vector<VertexLabel> s4b;
  for (int k = (even ? 2 : 1); k <= p - 4; k += 2) {
    s4b.push_back(l(k));
    s4b.push_back(r(k));
  }
  std::vector<VertexLabel> s6b;
  for (int k = p - 4; k >= (even ? 2 : 1); k -= 2) append(s6b, deltak(k));
  std::vector<VertexLabel> s6c = {even ? m(1) : m(2)};
  append(s6c, h_asc(2, even ? q + 1 : q));
  append(s6c, g_run(q));
  if (!even) {
    s6c.push_back(h(q + 1));
    s6c.push_back(g(q));
  }
  sb.span("step 1", std::move(s1));
  sb.span("step 2", std::move(s2));
  sb.span("step 3", std::move(s3));
  sb.span("step 4(a)", std::move(s4a));
  sb.span("step 4(b)", std::move(s4b));
  sb.span("step 4(c)", {l(p - 1), f(1), r(p - 1), f(2), l(p - 1), f(1)});
  sb.span("step 5", {m(p - 2), l(p - 2), r(p - 2), m(p - 2)});
  sb.span("step 6(a)", {f(1), l(p - 1), f(2), r(p - 1), f(1), l(p - 1)});
  sb.span("step 6(b)", std::move(s6b));
  sb.span("step 6(c)", std::move(s6c));
  sb.span("step 6(d)", even ? std::vector<VertexLabel>{l(1), r(1)}
                            : std::vector<VertexLabel>{});
  return sb.seq;
}

MutationSequence delta_genus0_two_punctures(const OrbifoldParams& P) {
  const int q = P.orbifold_points;
  SeqBuilder sb;
  std::vector<VertexLabel> s1 = h_desc(q, 1);
  append(s1, h_asc(3, q));
  sb.span("step 1", std::move(s1));
  sb.span("step 2", g_run(q));
  std::vector<VertexLabel> s3 = {h(2), h(1)};
  append(s3, h_asc(3, q));
  append(s3, h_desc(q - 2, 3));
  // at q == 3 the ascent already re-notches h_1, so the closing pair
  // degenerates to the single mutation at h_2
  if (q != 3) s3.push_back(h(1));
  s3.push_back(h(2));
  sb.span("step 3", std::move(s3));
  sb.span("step 4", g_run(q));
  return sb.seq;
}

MutationSequence delta_genus0_many_punctures(const OrbifoldParams& P) {
  const int p = P.punctures;
  const int q = P.orbifold_points;
  SeqBuilder sb;
  std::vector<VertexLabel> s1;
  for (int k = p - 3; k >= p - 1 - 2 * ((p - 2) / 2); k -= 2) {
    append(s1, subsequence(SubseqKind::Alpha, k, P));
  }
  sb.span("step 1", std::move(s1));

  const int inner_m = p - 2 * ((p - 1) / 2);
  std::vector<VertexLabel> s2 = h_desc(q + 1, 1);
  s2.push_back(m(inner_m));
  append(s2, h_asc(2, q + 2 - p + 2 * ((p - 1) / 2)));
  sb.span("step 2", std::move(s2));

  std::vector<VertexLabel> s3;
  for (int k = p - 4; k >= std::max(1, p - 2 * ((p - 1) / 2)); k -= 2) {
    append(s3, subsequence(SubseqKind::Beta, k, P));
  }
  sb.span("step 3", std::move(s3));

  std::vector<VertexLabel> s4a = g_run(q);
  append(s4a, h_desc(q + sgn(p - 3), 2));
  if (p > 3) s4a.push_back(m(inner_m));
  sb.span("step 4(a)", std::move(s4a));

  std::vector<VertexLabel> s4b;
  for (int k = p - 1 - 2 * ((p - 2) / 2); k <= p - 5; k += 2) {
    s4b.push_back(l(k));
    s4b.push_back(r(k));
  }
  sb.span("step 4(b)", std::move(s4b));

  std::vector<VertexLabel> s5;
  if (p > 3) {
    s5 = {s(), l(p - 3), r(p - 3), m(p - 3)};
  } else {
    s5 = {s(), m(1), h(q + 1), h(1)};
  }
  sb.span("step 5", std::move(s5));

  std::vector<VertexLabel> s6a;
  for (int k = p - 5; k >= std::max(1, p - 1 - 2 * ((p - 2) / 2)); k -= 2) {
    append(s6a, subsequence(SubseqKind::Delta, k, P));
  }
  sb.span("step 6(a)", std::move(s6a));

  std::vector<VertexLabel> s6b;
  if (p > 3) s6b.push_back(m(inner_m));
  append(s6b, h_asc(2, (p > 3 && p % 2 == 1) ? q + 1 : q));
  append(s6b, g_run(q));
  if (p % 2 == 0) {
    s6b.push_back(h(q + 1));
    s6b.push_back(g(q));
  }
  sb.span("step 6(b)", std::move(s6b));

  sb.span("step 6(c)", (p > 3 && p % 2 == 1)
                           ? std::vector<VertexLabel>{l(1), r(1)}
                           : std::vector<VertexLabel>{});
  return sb.seq;
}

MutationSequence delta_higher_genus(const OrbifoldParams& P) {
  const int n = P.genus;
  SeqBuilder sb;
  opening_steps(sb, P);
  sb.span("step 4(c)", f_run(1, n - 2));
  std::vector<VertexLabel> s4d;
  for (int k = 1; k <= n; ++k) append(s4d, subsequence(SubseqKind::Iota, k, P));
  sb.span("step 4(d)", std::move(s4d));
  sb.span("step 4(e)", f_run(n - 2, 1));
  sb.span("step 5", subsequence(SubseqKind::Gamma, 0, P));
  sb.span("step 6(a)", f_run(1, n - 2));
  std::vector<VertexLabel> s6b;
  for (int k = 1; k <= n; ++k) append(s6b, subsequence(SubseqKind::Pi, k, P));
  sb.span("step 6(b)", std::move(s6b));
  sb.span("step 6(c)", f_run(n - 2, 1));
  sb.span("step 6(d)", delta_chain(P));
  sb.span("step 6(e)", core_return(P));
  sb.span("step 6(f)", (P.punctures > 2 && P.punctures % 2 == 0)
                           ? std::vector<VertexLabel>{l(1), r(1)}
                           : std::vector<VertexLabel>{});
  return sb.seq;
}

}  // namespace

std::vector<VertexLabel> subsequence(SubseqKind kind, int k,
                                     const OrbifoldParams& P) {
  const int p = P.punctures;
  const int q = P.orbifold_points;
  const int n = P.genus;
  auto need = [&](bool ok, const std::string& what) {
    if (!ok) throw OutOfRange(what + " undefined for these parameters");
  };
  switch (kind) {
    case SubseqKind::Alpha:
      need(k >= 1 && k <= l_max(P) && k + 1 <= m_max(P), "alpha_" + std::to_string(k));
      return {r(k), l(k), m(k + 1), m(k), l(k), r(k)};
    case SubseqKind::Beta:
      need(k >= 1 && k <= l_max(P) && k + 2 <= m_max(P), "beta_" + std::to_string(k));
      if (k == 1) return {r(1), l(1), m(3), h(1)};
      return {r(k), l(k), m(k + 2), m(k - 1)};
    case SubseqKind::Gamma:
      if (p > 2) {
        need(p - 2 <= m_max(P) && p - 2 <= l_max(P), "gamma");
        return {m(p - 2), l(p - 2), r(p - 2), m(p - 2)};
      }
      need(h_max(P) >= q + 1, "gamma");
      return {h(1), m(1), h(q + 1), h(1)};
    case SubseqKind::Delta:
      need(k >= 1 && k + 1 <= l_max(P), "delta_" + std::to_string(k));
      return {r(k), r(k + 1), l(k), l(k + 1)};
    case SubseqKind::Epsilon:
      if (p > 2 && p % 2 == 0) {
        need(h_max(P) >= q + 1, "epsilon");
        return h_asc(2, q + 1);
      }
      return h_asc(2, q);
    case SubseqKind::Mu: {
      if (p == 2) return {};
      const int idx = p + 1 - 2 * (p / 2);
      need(idx <= m_max(P), "mu");
      return {m(idx)};
    }
    case SubseqKind::Omega:
      if (p % 2 == 0) return {};
      need(h_max(P) >= q + 1 && q >= 1, "omega");
      return {h(q + 1), g(q)};
    case SubseqKind::Iota:
      need(n >= 2 && k >= 1 && k <= n, "iota_" + std::to_string(k));
      return {vl::a(k), vl::e(k), vl::c(k), vl::b(k), vl::a(k),
              vl::d(k), vl::e(k), vl::c(k), vl::b(k)};
    case SubseqKind::Pi:
      need(n >= 2 && k >= 1 && k <= n, "pi_" + std::to_string(k));
      return {vl::b(k), vl::c(k), vl::e(k), vl::d(k), vl::b(k),
              vl::a(k), vl::c(k), vl::e(k), vl::b(k)};
  }
  throw OutOfRange("unknown subsequence kind");
}

MutationSequence delta(const OrbifoldParams& P) {
  ParamCheck check = validate_params(P);
  if (!check.ok) throw UnsupportedParams(check.reason, check.message);
  if (P.genus == 0) {
    return P.punctures == 2 ? delta_genus0_two_punctures(P)
                            : delta_genus0_many_punctures(P);
  }
  if (P.genus == 1) return delta_genus1_cases(P);
  return delta_higher_genus(P);
}

MutationSequence delta_genus1_formula(const OrbifoldParams& P) {
  if (P.genus != 1) throw OutOfRange("formula form requires genus 1");
  ParamCheck check = validate_params(P);
  if (!check.ok) throw UnsupportedParams(check.reason, check.message);
  const int p = P.punctures;
  SeqBuilder sb;
  opening_steps(sb, P);
  sb.span("step 4(c)", {l(p - 1), f(1), r(p - 1), f(2), l(p - 1), f(1)});
  sb.span("step 5", subsequence(SubseqKind::Gamma, 0, P));
  sb.span("step 6(a)", {f(1), l(p - 1), f(2), r(p - 1), f(1), l(p - 1)});
  sb.span("step 6(b)", delta_chain(P));
  sb.span("step 6(c)", core_return(P));
  sb.span("step 6(d)", (p > 2 && p % 2 == 0) ? std::vector<VertexLabel>{l(1), r(1)}
                                             : std::vector<VertexLabel>{});
  return sb.seq;
}

std::size_t span_end(const MutationSequence& seq, const std::string& step_id) {
  for (const auto& span : seq.provenance) {
    if (span.step_id == step_id) return span.end;
  }
  throw OutOfRange("no span named '" + step_id + "'");
}

}  // namespace mgs
