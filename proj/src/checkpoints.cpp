#include "mgs/checkpoints.hpp"

#include <cstdlib>
#include <utility>

#include "mgs/sequence.hpp"
#include "mgs/verify.hpp"

namespace mgs {

namespace {

using vl::f;
using vl::g;
using vl::h;
using vl::l;
using vl::m;
using vl::r;

using Printed = std::vector<std::pair<VertexLabel, Int>>;

constexpr VertexColor kGreen = VertexColor::Green;
constexpr VertexColor kRed = VertexColor::Red;

ExpectedVertexState st(VertexLabel v, VertexColor color, Printed printed) {
  return {std::move(v), color, std::move(printed)};
}

// Superscript multiset of one c-row as displayed: nonzero slots only.
Printed printed_row(const FramedSeed& s, const VertexLabel& v) {
  const int vi = s.require_index(v);
  Printed out;
  for (int u = 0; u < s.size(); ++u) {
    if (s.c(vi, u) != 0) out.emplace_back(s.label(u), printed_weight(s, vi, u));
  }
  return out;
}

std::vector<Int> abs_c_row(const FramedSeed& s, const VertexLabel& v) {
  const int vi = s.require_index(v);
  std::vector<Int> out(static_cast<std::size_t>(s.size()));
  for (int u = 0; u < s.size(); ++u) out[u] = std::llabs(s.c(vi, u));
  return out;
}

// small must be contained in big entry-wise at the |c| level.
bool row_contains(const std::vector<Int>& big, const std::vector<Int>& small) {
  for (std::size_t u = 0; u < big.size(); ++u) {
    if (small[u] > big[u]) return false;
  }
  return true;
}

// Entry-wise |c| difference big - small, displayed from the target vertex:
// multiplicity (d_target / d_u) * diff^2. Returns an error message when a
// multiplicity would be fractional.
std::string print_difference(const FramedSeed& probe, const VertexLabel& target,
                             const std::vector<Int>& big,
                             const std::vector<Int>& small, Printed& out) {
  const int ti = probe.require_index(target);
  for (int u = 0; u < probe.size(); ++u) {
    const Int diff = big[static_cast<std::size_t>(u)] - small[static_cast<std::size_t>(u)];
    if (diff == 0) continue;
    const Int raw = probe.d(ti) * diff * diff;
    if (raw % probe.d(u) != 0) {
      return "difference at slot '" + probe.label(u).name() +
             "' has no integer display multiplicity";
    }
    out.emplace_back(probe.label(u), raw / probe.d(u));
  }
  return {};
}

CheckpointResult check_state(std::string name, const FramedSeed& seed,
                             const StateAssertion& expected) {
  CheckpointResult out{std::move(name), true, {}};
  if (auto mismatch = assert_state(seed, expected)) {
    out.passed = false;
    out.detail = *mismatch;
  }
  return out;
}

std::vector<CheckpointResult> core_band_suite(const OrbifoldParams& P) {
  const ExchangeMatrix mat = build_diagram(P);
  const MutationSequence seq = delta(P);
  const FramedSeed at2 = replay_prefix(mat, seq, span_end(seq, "step 2"));
  StateAssertion expected = {
      st(g(1), kGreen, {{g(1), 1}, {h(2), 2}}),
      st(g(2), kGreen, {{g(2), 1}, {h(3), 2}}),
      st(g(3), kGreen, {{g(3), 1}, {h(4), 2}}),
      st(m(1), kRed, {{h(2), 1}}),
      st(h(2), kRed, {{h(3), 1}}),
      st(h(3), kRed, {{h(4), 1}}),
      st(h(4), kRed, {{m(1), 1}}),
      st(h(1), kRed, {{h(1), 1}}),
      st(l(1), kGreen, {{l(1), 1}, {h(1), 1}}),
      st(r(1), kGreen, {{r(1), 1}, {m(1), 1}}),
      st(f(1), kGreen, {{f(1), 1}}),
      st(f(2), kGreen, {{f(2), 1}}),
  };
  return {check_state("core band after step 2", at2, expected)};
}

StateAssertion ladder_142_after_4a() {
  return {
      st(g(1), kRed, {{g(1), 1}, {h(2), 2}}),
      st(g(2), kRed, {{g(2), 1}, {h(3), 2}}),
      st(m(1), kRed,
         {{h(2), 1}, {h(3), 1}, {g(1), 2}, {g(2), 2}, {r(1), 1}, {r(2), 1}}),
      st(h(2), kGreen, {{h(2), 1}, {g(1), 2}}),
      st(h(3), kGreen, {{h(3), 1}, {g(2), 2}}),
      st(r(1), kGreen, {{r(1), 1}}),
      st(l(1), kRed, {{h(1), 1}}),
      st(r(2), kRed, {{m(3), 1}}),
      st(l(2), kGreen,
         {{l(1), 1},
          {h(1), 1},
          {h(2), 1},
          {h(3), 1},
          {g(1), 2},
          {g(2), 2},
          {r(1), 1},
          {r(2), 1}}),
      st(h(1), kRed, {{m(2), 1}, {l(1), 1}}),
      st(m(3), kRed, {{m(1), 1}, {r(1), 1}}),
      st(m(2), kRed, {{l(2), 1}}),
      st(l(3), kGreen, {{l(3), 1}, {l(2), 1}}),
      st(r(3), kGreen, {{r(3), 1}, {m(3), 1}}),
      st(f(1), kGreen, {{f(1), 1}}),
      st(f(2), kGreen, {{f(2), 1}}),
  };
}

std::vector<CheckpointResult> ladder_and_corner_suite(const OrbifoldParams& P) {
  const ExchangeMatrix mat = build_diagram(P);
  const MutationSequence seq = delta(P);
  std::vector<CheckpointResult> out;

  const FramedSeed at4a = replay_prefix(mat, seq, span_end(seq, "step 4(a)"));
  out.push_back(check_state("ladder after step 4(a)", at4a, ladder_142_after_4a()));

  // Corner block: capture the frozen rows it starts from, then replay on.
  const FramedSeed at4b = replay_prefix(mat, seq, span_end(seq, "step 4(b)"));
  const std::vector<Int> w_abs = abs_c_row(at4b, m(1));
  const std::vector<Int> y_abs = abs_c_row(at4b, l(2));
  const Printed y_printed = printed_row(at4b, l(2));
  const Printed x_old = printed_row(at4b, m(2));
  const Printed z_old = printed_row(at4b, r(2));

  CheckpointResult corner{"corner block after step 6(a)", true, {}};
  if (!row_contains(y_abs, w_abs)) {
    corner.passed = false;
    corner.detail = "captured row of m_1 is not contained in the row of l_2";
  } else {
    Printed w_diff;
    std::string err = print_difference(at4b, m(1), y_abs, w_abs, w_diff);
    if (!err.empty()) {
      corner.passed = false;
      corner.detail = err;
    } else {
      const FramedSeed at6a = replay_prefix(mat, seq, span_end(seq, "step 6(a)"));
      StateAssertion expected = {
          st(m(1), kGreen, w_diff),
          st(l(2), kRed, y_printed),
          st(r(2), kRed, x_old),
          st(m(2), kRed, z_old),
          st(l(3), kRed, {{l(3), 1}}),
          st(r(3), kRed, {{r(3), 1}}),
          st(f(1), kRed, {{f(1), 1}}),
          st(f(2), kRed, {{f(2), 1}}),
      };
      corner = check_state(corner.name, at6a, expected);
    }
  }
  out.push_back(std::move(corner));
  return out;
}

std::vector<CheckpointResult> ladder_132_suite(const OrbifoldParams& P) {
  const ExchangeMatrix mat = build_diagram(P);
  const MutationSequence seq = delta(P);
  const FramedSeed at4a = replay_prefix(mat, seq, span_end(seq, "step 4(a)"));
  StateAssertion expected = {
      st(g(1), kRed, {{g(1), 1}, {h(2), 2}}),
      st(g(2), kGreen, {{g(2), 1}, {h(3), 2}}),
      st(m(2), kRed, {{h(2), 1}, {h(3), 1}, {g(1), 2}, {g(2), 2}, {r(1), 1}}),
      st(h(2), kGreen, {{h(2), 1}, {g(1), 2}}),
      st(h(3), kRed, {{h(3), 1}}),
      st(h(1), kRed, {{h(1), 1}, {m(1), 1}}),
      st(l(1), kGreen,
         {{r(1), 1}, {h(1), 1}, {h(2), 1}, {h(3), 1}, {g(1), 2}, {g(2), 2}}),
      st(r(1), kRed, {{m(2), 1}}),
  };
  return {check_state("ladder after step 4(a)", at4a, expected)};
}

std::vector<CheckpointResult> handle_loop_suite(const OrbifoldParams& P) {
  using vl::a;
  using vl::b;
  using vl::c;
  using vl::d;
  using vl::e;
  const ExchangeMatrix mat = build_diagram(P);
  const MutationSequence seq = delta(P);
  std::vector<CheckpointResult> out;

  const FramedSeed at4b = replay_prefix(mat, seq, span_end(seq, "step 4(b)"));
  const std::vector<Int> w_abs = abs_c_row(at4b, m(2));
  const std::vector<Int> y_abs = abs_c_row(at4b, l(1));
  const Printed w_printed = printed_row(at4b, m(2));
  const Printed y_printed = printed_row(at4b, l(1));

  const FramedSeed at4d = replay_prefix(mat, seq, span_end(seq, "step 4(d)"));
  StateAssertion loop_expected = {
      st(m(2), kRed, w_printed),
      st(l(1), kGreen, y_printed),
      st(r(1), kGreen,
         {{e(2), 4}, {a(2), 4}, {c(2), 4}, {b(2), 4}, {d(2), 4}, {m(2), 1}}),
      st(m(1), kGreen,
         {{e(1), 4}, {a(1), 4}, {c(1), 4}, {b(1), 4}, {d(1), 4}, {l(1), 1}}),
      st(b(1), kRed, {{e(1), 1}, {l(1), 1}}),
      st(b(2), kRed, {{e(2), 1}, {m(2), 1}}),
      st(c(1), kRed, {{d(1), 1}}),
      st(c(2), kRed, {{d(2), 1}}),
      st(a(1), kRed, {{a(1), 1}}),
      st(a(2), kRed, {{a(2), 1}}),
      st(d(1), kRed, {{c(1), 1}}),
      st(d(2), kRed, {{c(2), 1}}),
      st(e(1), kRed, {{b(1), 1}}),
      st(e(2), kRed, {{b(2), 1}}),
  };
  out.push_back(check_state("handle loops after step 4(d)", at4d, loop_expected));

  CheckpointResult unwind{"handle loops after step 6(b)", true, {}};
  if (!row_contains(y_abs, w_abs)) {
    unwind.passed = false;
    unwind.detail = "captured row of m_2 is not contained in the row of l_1";
  } else {
    Printed w_diff;
    std::string err = print_difference(at4b, m(2), y_abs, w_abs, w_diff);
    if (!err.empty()) {
      unwind.passed = false;
      unwind.detail = err;
    } else {
      const FramedSeed at6b = replay_prefix(mat, seq, span_end(seq, "step 6(b)"));
      StateAssertion expected = {
          st(m(2), kGreen, w_diff),
          st(r(1), kRed, {{l(1), 1}}),
          st(l(1), kRed, y_printed),
          st(b(1), kRed, {{e(1), 1}}),
          st(m(1), kRed, {{m(2), 1}}),
          st(b(2), kRed, {{e(2), 1}}),
          st(d(1), kRed, {{d(1), 1}}),
          st(d(2), kRed, {{d(2), 1}}),
          st(e(1), kRed, {{a(1), 1}}),
          st(e(2), kRed, {{a(2), 1}}),
          st(c(1), kRed, {{c(1), 1}}),
          st(c(2), kRed, {{c(2), 1}}),
          st(a(1), kRed, {{b(1), 1}}),
          st(a(2), kRed, {{b(2), 1}}),
      };
      unwind = check_state(unwind.name, at6b, expected);
    }
  }
  out.push_back(std::move(unwind));
  return out;
}

std::vector<CheckpointResult> tail_suite(const OrbifoldParams& P) {
  const ExchangeMatrix mat = build_diagram(P);
  const MutationSequence seq = delta(P);
  const FramedSeed at4b = replay_prefix(mat, seq, span_end(seq, "step 4(b)"));
  StateAssertion expected = {
      st(m(2), kRed, {{h(2), 1}, {h(3), 1}, {g(1), 2}, {g(2), 2}, {r(1), 1}}),
      st(l(1), kGreen,
         {{r(1), 1}, {h(1), 1}, {h(2), 1}, {h(3), 1}, {g(1), 2}, {g(2), 2}}),
      st(r(1), kRed, {{m(2), 1}}),
      st(m(1), kRed, {{l(1), 1}}),
      st(vl::s(), kGreen, {{vl::s(), 1}, {l(1), 1}, {m(2), 1}}),
      st(g(1), kRed, {{g(1), 1}, {h(2), 2}}),
      st(g(2), kGreen, {{g(2), 1}, {h(3), 2}}),
      st(h(2), kGreen, {{h(2), 1}, {g(1), 2}}),
      st(h(3), kRed, {{h(3), 1}}),
      st(h(1), kRed, {{h(1), 1}, {m(1), 1}}),
  };
  return {check_state("tail after step 4(b)", at4b, expected)};
}

}  // namespace

bool has_checkpoints(const OrbifoldParams& params) {
  return params == OrbifoldParams{1, 2, 3} || params == OrbifoldParams{1, 4, 2} ||
         params == OrbifoldParams{1, 3, 2} || params == OrbifoldParams{2, 3, 1} ||
         params == OrbifoldParams{0, 4, 2};
}

std::vector<CheckpointResult> run_checkpoints(const OrbifoldParams& params) {
  if (params == OrbifoldParams{1, 2, 3}) return core_band_suite(params);
  if (params == OrbifoldParams{1, 4, 2}) return ladder_and_corner_suite(params);
  if (params == OrbifoldParams{1, 3, 2}) return ladder_132_suite(params);
  if (params == OrbifoldParams{2, 3, 1}) return handle_loop_suite(params);
  if (params == OrbifoldParams{0, 4, 2}) return tail_suite(params);
  throw OutOfRange("no checkpoint data for these parameters");
}

}  // namespace mgs
