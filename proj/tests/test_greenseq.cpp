#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>
#include <vector>

#include "mgs/orbifold.hpp"
#include "mgs/sequence.hpp"

using namespace mgs;
using namespace mgs::vl;

namespace {

std::vector<std::string> names(const std::vector<VertexLabel>& steps) {
  std::vector<std::string> out;
  for (const auto& v : steps) out.push_back(v.name());
  return out;
}

std::vector<OrbifoldParams> grid() {
  std::vector<OrbifoldParams> pts;
  for (int n = 0; n <= 4; ++n) {
    for (int p = 2; p <= 7; ++p) {
      for (int q = 1; q <= 4; ++q) {
        if (n == 0 && p + q < 4) continue;
        pts.push_back({n, p, q});
      }
    }
  }
  return pts;
}

}  // namespace

TEST_CASE("the 22-step sequence for genus 1, two punctures, one orbifold point") {
  MutationSequence seq = delta({1, 2, 1});
  CHECK(names(seq.steps) ==
        std::vector<std::string>{"h_2", "h_1", "m_1", "h_2",              // step 2
                                 "g_1",                                   // step 4(a)
                                 "l_1", "f_1", "r_1", "f_2", "l_1", "f_1",  // step 4(c)
                                 "h_1", "m_1", "h_2", "h_1",              // step 5
                                 "f_1", "l_1", "f_2", "r_1", "f_1", "l_1",  // step 6(a)
                                 "g_1"});                                 // step 6(c)
  CHECK(span_end(seq, "step 2") == 4);
  CHECK(span_end(seq, "step 4(a)") == 5);
  CHECK(span_end(seq, "step 4(b)") == 5);
  CHECK(span_end(seq, "step 4(c)") == 11);
  CHECK(span_end(seq, "step 5") == 15);
  CHECK(span_end(seq, "step 6(a)") == 21);
  CHECK(span_end(seq, "step 6(c)") == 22);
  CHECK_THROWS_AS(span_end(seq, "step 9"), OutOfRange);
}

TEST_CASE("two-puncture genus-1 openings sweep the whole band") {
  MutationSequence seq = delta({1, 2, 3});
  // step 2 walks down h_4..h_1, hits m_1, walks back up to h_4
  CHECK(names(std::vector<VertexLabel>(seq.steps.begin(), seq.steps.begin() + 8)) ==
        std::vector<std::string>{"h_4", "h_3", "h_2", "h_1", "m_1", "h_2", "h_3",
                                 "h_4"});
  CHECK(span_end(seq, "step 2") == 8);
  // step 4(a): all pending vertices then h_q..h_2
  CHECK(names(std::vector<VertexLabel>(seq.steps.begin() + 8,
                                       seq.steps.begin() + 13)) ==
        std::vector<std::string>{"g_1", "g_2", "g_3", "h_3", "h_2"});
  CHECK(span_end(seq, "step 4(a)") == 13);
}

TEST_CASE("per-case genus-1 tables agree with the closed-form layout") {
  for (int p = 2; p <= 7; ++p) {
    for (int q = 1; q <= 4; ++q) {
      CAPTURE(p);
      CAPTURE(q);
      CHECK(delta({1, p, q}) == delta_genus1_formula({1, p, q}));
    }
  }
  CHECK_THROWS_AS(delta_genus1_formula({0, 4, 2}), OutOfRange);
}

TEST_CASE("sequence lengths at fixed reference points") {
  CHECK(delta({0, 2, 3}).steps.size() == 14);
  CHECK(delta({0, 3, 1}).steps.size() == 10);
  CHECK(delta({0, 4, 2}).steps.size() == 26);
  CHECK(delta({1, 2, 1}).steps.size() == 22);
  CHECK(delta({2, 2, 1}).steps.size() == 46);
  CHECK(delta({2, 3, 1}).steps.size() == 56);
}

TEST_CASE("the 14-step sphere-like sequence") {
  MutationSequence seq = delta({0, 2, 3});
  CHECK(names(seq.steps) ==
        std::vector<std::string>{"h_3", "h_2", "h_1", "h_3",  // step 1
                                 "g_1", "g_2", "g_3",         // step 2
                                 "h_2", "h_1", "h_3", "h_2",  // step 3
                                 "g_1", "g_2", "g_3"});       // step 4
  CHECK(span_end(seq, "step 1") == 4);
  CHECK(span_end(seq, "step 4") == 14);
}

TEST_CASE("the 26-step sequence pauses after its tail block") {
  MutationSequence seq = delta({0, 4, 2});
  CHECK(span_end(seq, "step 4(b)") == 16);
  CHECK(names(std::vector<VertexLabel>(seq.steps.begin() + 16,
                                       seq.steps.begin() + 20)) ==
        std::vector<std::string>{"s", "l_1", "r_1", "m_1"});  // step 5
}

TEST_CASE("the 56-step two-handle sequence") {
  MutationSequence seq = delta({2, 3, 1});
  CHECK(span_end(seq, "step 4(b)") == 12);
  CHECK(span_end(seq, "step 4(d)") == 30);
  CHECK(span_end(seq, "step 6(b)") == 52);
  CHECK(names(std::vector<VertexLabel>(seq.steps.begin(), seq.steps.begin() + 12)) ==
        std::vector<std::string>{"r_1", "l_1", "m_2", "m_1", "l_1", "r_1",  // step 1
                                 "h_2", "h_1", "m_2",                       // step 2
                                 "g_1", "h_2", "m_2"});                     // step 4(a)
  CHECK(names(std::vector<VertexLabel>(seq.steps.begin() + 12,
                                       seq.steps.begin() + 21)) ==
        std::vector<std::string>{"a_1", "e_1", "c_1", "b_1", "a_1", "d_1", "e_1",
                                 "c_1", "b_1"});  // first handle loop
  CHECK(names(std::vector<VertexLabel>(seq.steps.begin() + 52, seq.steps.end())) ==
        std::vector<std::string>{"m_2", "g_1", "h_2", "g_1"});  // step 6(e)
}

TEST_CASE("provenance spans partition the whole sequence in order") {
  for (const OrbifoldParams& P : grid()) {
    CAPTURE(P.genus);
    CAPTURE(P.punctures);
    CAPTURE(P.orbifold_points);
    MutationSequence seq = delta(P);
    REQUIRE_FALSE(seq.provenance.empty());
    CHECK(seq.provenance.front().begin == 0);
    CHECK(seq.provenance.back().end == seq.steps.size());
    for (std::size_t i = 0; i + 1 < seq.provenance.size(); ++i) {
      CHECK(seq.provenance[i].end == seq.provenance[i + 1].begin);
    }
  }
}

TEST_CASE("every step names a vertex of the matching diagram") {
  for (const OrbifoldParams& P : grid()) {
    CAPTURE(P.genus);
    CAPTURE(P.punctures);
    CAPTURE(P.orbifold_points);
    ExchangeMatrix mat = build_diagram(P);
    for (const VertexLabel& step : delta(P).steps) {
      CHECK(mat.index_of(step).has_value());
    }
  }
}

TEST_CASE("no immediate repeats outside the known two-orbifold-point case") {
  for (const OrbifoldParams& P : grid()) {
    if (P.genus == 0 && P.punctures == 2 && P.orbifold_points == 2) continue;
    CAPTURE(P.genus);
    CAPTURE(P.punctures);
    CAPTURE(P.orbifold_points);
    MutationSequence seq = delta(P);
    for (std::size_t i = 0; i + 1 < seq.steps.size(); ++i) {
      CHECK(seq.steps[i] != seq.steps[i + 1]);
    }
  }
  // The emitted literal for that case does repeat h_1 back to back.
  MutationSequence open_case = delta({0, 2, 2});
  CHECK(names(open_case.steps) ==
        std::vector<std::string>{"h_2", "h_1", "g_1", "g_2", "h_2", "h_1", "h_1",
                                 "h_2", "g_1", "g_2"});
}

TEST_CASE("named building blocks") {
  OrbifoldParams P{1, 4, 1};
  CHECK(names(subsequence(SubseqKind::Alpha, 1, P)) ==
        std::vector<std::string>{"r_1", "l_1", "m_2", "m_1", "l_1", "r_1"});
  CHECK(names(subsequence(SubseqKind::Beta, 1, P)) ==
        std::vector<std::string>{"r_1", "l_1", "m_3", "h_1"});
  CHECK(names(subsequence(SubseqKind::Gamma, 0, P)) ==
        std::vector<std::string>{"m_2", "l_2", "r_2", "m_2"});
  CHECK(names(subsequence(SubseqKind::Gamma, 0, {1, 2, 1})) ==
        std::vector<std::string>{"h_1", "m_1", "h_2", "h_1"});
  CHECK(names(subsequence(SubseqKind::Delta, 1, {1, 6, 1})) ==
        std::vector<std::string>{"r_1", "r_2", "l_1", "l_2"});
  CHECK(names(subsequence(SubseqKind::Iota, 2, {2, 3, 1})) ==
        std::vector<std::string>{"a_2", "e_2", "c_2", "b_2", "a_2", "d_2", "e_2",
                                 "c_2", "b_2"});
  CHECK(names(subsequence(SubseqKind::Pi, 1, {2, 3, 1})) ==
        std::vector<std::string>{"b_1", "c_1", "e_1", "d_1", "b_1", "a_1", "c_1",
                                 "e_1", "b_1"});
  CHECK(subsequence(SubseqKind::Mu, 0, {1, 2, 1}).empty());
  CHECK(names(subsequence(SubseqKind::Mu, 0, {1, 3, 1})) ==
        std::vector<std::string>{"m_2"});
  CHECK(subsequence(SubseqKind::Omega, 0, {1, 4, 1}).empty());
  CHECK(names(subsequence(SubseqKind::Omega, 0, {1, 3, 2})) ==
        std::vector<std::string>{"h_3", "g_2"});

  CHECK_THROWS_AS(subsequence(SubseqKind::Alpha, 1, {1, 2, 1}), OutOfRange);
  CHECK_THROWS_AS(subsequence(SubseqKind::Alpha, 9, {1, 4, 1}), OutOfRange);
  CHECK_THROWS_AS(subsequence(SubseqKind::Iota, 1, {1, 2, 1}), OutOfRange);
  CHECK_THROWS_AS(subsequence(SubseqKind::Beta, 1, {1, 3, 1}), OutOfRange);
}

TEST_CASE("unsupported parameters are rejected up front") {
  CHECK_THROWS_AS(delta({0, 1, 4}), UnsupportedParams);
  CHECK_THROWS_AS(delta({1, 1, 1}), UnsupportedParams);
  CHECK_THROWS_AS(delta({0, 2, 1}), UnsupportedParams);
}
