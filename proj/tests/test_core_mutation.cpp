#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "mgs/diagram.hpp"
#include "mgs/matrix.hpp"
#include "mgs/seed.hpp"

using namespace mgs;

namespace {

VertexLabel L(const char* text) { return VertexLabel::parse(text); }

// Rank-3 example with weights 2,2,1 and symmetrizer (2,1,1).
ExchangeMatrix rank3_example() {
  return matrix_from_arrows({L("a"), L("b"), L("c")},
                            {{L("a"), L("c"), 1, -2},
                             {L("b"), L("a"), 2, -1},
                             {L("c"), L("b"), 1, -1}});
}

std::vector<Int> c_block_of(const FramedSeed& s) { return s.c_block(); }

}  // namespace

TEST_CASE("label parsing accepts letter and letter_index forms") {
  CHECK(L("g_1").family() == Family::G);
  CHECK(L("g_1").index() == 1);
  CHECK(L("g_12").index() == 12);
  CHECK(L("s").family() == Family::S);
  CHECK(L("s").index() == 0);
  CHECK(L("a").name() == "a");

  // Anything off the strict grammar stays usable as an ad-hoc name.
  CHECK(L("g_0").family() == Family::Other);
  CHECK(L("g_01").family() == Family::Other);
  CHECK(L("x").family() == Family::Other);
  CHECK(L("a'").family() == Family::Other);
  CHECK(L("a'").name() == "a'");
}

TEST_CASE("label order runs g,h,m,l,r,f,s,e,a,b,c,d then ad-hoc names") {
  std::vector<VertexLabel> order = {L("g_1"), L("h_1"), L("m_1"), L("l_1"),
                                    L("r_1"), L("f_1"), L("s"),   L("e_1"),
                                    L("a_1"), L("b_1"), L("c_1"), L("d_1"),
                                    L("x")};
  for (std::size_t i = 0; i + 1 < order.size(); ++i) {
    CHECK(order[i] < order[i + 1]);
  }
  CHECK(L("h_2") < L("h_10"));
  CHECK(L("g_9") < L("h_1"));
}

TEST_CASE("matrix_from_arrows builds the rank-3 example") {
  ExchangeMatrix m = rank3_example();
  CHECK(m.size() == 3);
  CHECK(m.symmetrizer() == std::vector<Int>{2, 1, 1});
  // row a
  CHECK(m.b(0, 0) == 0);
  CHECK(m.b(0, 1) == -1);
  CHECK(m.b(0, 2) == 1);
  // row b
  CHECK(m.b(1, 0) == 2);
  CHECK(m.b(1, 1) == 0);
  CHECK(m.b(1, 2) == -1);
  // row c
  CHECK(m.b(2, 0) == -2);
  CHECK(m.b(2, 1) == 1);
  CHECK(m.b(2, 2) == 0);
  // diag(d) * B is skew-symmetric
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      CHECK(m.d(i) * m.b(i, j) == -m.d(j) * m.b(j, i));
    }
  }
}

TEST_CASE("matrix_from_arrows rejects malformed input") {
  CHECK_THROWS_AS(matrix_from_arrows({L("a"), L("a")}, {}), DuplicateLabel);
  CHECK_THROWS_AS(matrix_from_arrows({L("a")}, {{L("a"), L("b"), 1, -1}}),
                  UnknownVertex);
  CHECK_THROWS_AS(matrix_from_arrows({L("a")}, {{L("a"), L("a"), 1, -1}}),
                  SelfLoop);
  CHECK_THROWS_AS(matrix_from_arrows({L("a"), L("b")},
                                     {{L("a"), L("b"), 1, -1},
                                      {L("b"), L("a"), 1, -1}}),
                  DuplicatePair);
  CHECK_THROWS_AS(matrix_from_arrows({L("a"), L("b")}, {{L("a"), L("b"), 0, -1}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(matrix_from_arrows({L("a"), L("b")}, {{L("a"), L("b"), 1, 1}}),
                  std::invalid_argument);
  // Inconsistent ratio cycle: d would need 1 = 2 around the triangle.
  CHECK_THROWS_AS(matrix_from_arrows({L("a"), L("b"), L("c")},
                                     {{L("a"), L("b"), 2, -1},
                                      {L("b"), L("c"), 1, -1},
                                      {L("c"), L("a"), 1, -1}}),
                  NoSymmetrizer);
}

TEST_CASE("symmetrizer is minimal and per-component") {
  ExchangeMatrix m = matrix_from_arrows(
      {L("a"), L("b"), L("x"), L("y")},
      {{L("a"), L("b"), 2, -1}, {L("x"), L("y"), 1, -1}});
  CHECK(m.symmetrizer() == std::vector<Int>{1, 2, 1, 1});
}

TEST_CASE("isqrt is exact") {
  CHECK(isqrt(0) == 0);
  CHECK(isqrt(1) == 1);
  CHECK(isqrt(2) == 1);
  CHECK(isqrt(3) == 1);
  CHECK(isqrt(4) == 2);
  CHECK(isqrt(99) == 9);
  CHECK(isqrt(100) == 10);
  CHECK(isqrt(1'000'000'000'000) == 1'000'000);
}

TEST_CASE("framing attaches an identity c-block") {
  FramedSeed s = frame(rank3_example());
  CHECK(s.size() == 3);
  CHECK(c_block_of(s) == std::vector<Int>{1, 0, 0, 0, 1, 0, 0, 0, 1});
  for (int i = 0; i < 3; ++i) CHECK(color_of(s, i) == VertexColor::Green);
  CHECK_FALSE(is_final(s));
}

TEST_CASE("mutation at b updates both blocks of the rank-3 example") {
  FramedSeed s = mutate_at(frame(rank3_example()), L("b"));
  // B block
  CHECK(s.b(0, 0) == 0);
  CHECK(s.b(0, 1) == 1);
  CHECK(s.b(0, 2) == 0);
  CHECK(s.b(1, 0) == -2);
  CHECK(s.b(1, 1) == 0);
  CHECK(s.b(1, 2) == 1);
  CHECK(s.b(2, 0) == 0);
  CHECK(s.b(2, 1) == -1);
  CHECK(s.b(2, 2) == 0);
  // C block: a keeps e_a, b flips, c picks up e_b
  CHECK(c_block_of(s) == std::vector<Int>{1, 0, 0, 0, -1, 0, 0, 1, 1});
  CHECK(color_of(s, L("a")) == VertexColor::Green);
  CHECK(color_of(s, L("b")) == VertexColor::Red);
  CHECK(color_of(s, L("c")) == VertexColor::Green);
}

TEST_CASE("mutation is an involution and preserves the symmetrizer") {
  FramedSeed start = frame(rank3_example());
  for (int k = 0; k < 3; ++k) {
    FramedSeed twice = mutate_at(mutate_at(start, k), k);
    CHECK(twice == start);
    CHECK(mutate_at(start, k).symmetrizer() == start.symmetrizer());
  }
  CHECK_THROWS_AS(mutate_at(start, 5), UnknownVertex);
  CHECK_THROWS_AS(mutate_at(start, L("zz")), UnknownVertex);
}

TEST_CASE("color_of rejects mixed-sign and zero rows") {
  ExchangeMatrix m =
      matrix_from_arrows({L("a"), L("b")}, {{L("a"), L("b"), 1, -1}});
  FramedSeed mixed = seed_with_c_block(m, {1, -1, 0, 1});
  CHECK_THROWS_AS(color_of(mixed, 0), MixedSign);
  FramedSeed zero = seed_with_c_block(m, {0, 0, 0, 1});
  CHECK_THROWS_AS(color_of(zero, 0), ZeroRow);
}

TEST_CASE("is_final and is_neg_permutation") {
  ExchangeMatrix m =
      matrix_from_arrows({L("a"), L("b")}, {{L("a"), L("b"), 1, -1}});
  CHECK(is_final(seed_with_c_block(m, {-1, 0, 0, -1})));
  CHECK(is_neg_permutation(seed_with_c_block(m, {-1, 0, 0, -1})));
  CHECK(is_neg_permutation(seed_with_c_block(m, {0, -1, -1, 0})));
  CHECK(is_final(seed_with_c_block(m, {-2, 0, 0, -1})));
  CHECK_FALSE(is_neg_permutation(seed_with_c_block(m, {-2, 0, 0, -1})));
  CHECK_FALSE(is_neg_permutation(seed_with_c_block(m, {-1, -1, 0, -1})));
  CHECK_FALSE(is_neg_permutation(seed_with_c_block(m, {-1, 0, -1, 0})));
  CHECK_FALSE(is_final(seed_with_c_block(m, {1, 0, 0, -1})));
  // Vacuously final: no rows at all.
  CHECK(is_final(frame(matrix_from_arrows({}, {}))));
}

TEST_CASE("diagram_view reads arrows off b signs") {
  Diagram d = diagram_view(rank3_example());
  CHECK(d.vertices == std::vector<VertexLabel>{L("a"), L("b"), L("c")});
  CHECK(d.arrows == std::vector<DiagramArrow>{{L("a"), L("c"), 2},
                                              {L("b"), L("a"), 2},
                                              {L("c"), L("b"), 1}});
  CHECK(d.colors.empty());
}

TEST_CASE("framed diagram_view carries colors and companion arrows") {
  FramedSeed s = mutate_at(frame(rank3_example()), L("b"));
  Diagram plain = diagram_view(s);
  CHECK(plain.colors == std::vector<VertexColor>{VertexColor::Green,
                                                 VertexColor::Red,
                                                 VertexColor::Green});
  CHECK(plain.arrows == std::vector<DiagramArrow>{{L("a"), L("b"), 2},
                                                  {L("b"), L("c"), 1}});

  Diagram full = diagram_view(s, true);
  CHECK(full.vertices.size() == 6);
  CHECK(full.frozen == std::vector<bool>{false, false, false, true, true, true});
  // c_a = e_a, c_b = -e_b, c_c = e_b + e_c at |c| weight 1 each
  auto has = [&](DiagramArrow a) {
    return std::find(full.arrows.begin(), full.arrows.end(), a) != full.arrows.end();
  };
  CHECK(has({L("a"), L("a'"), 1}));
  CHECK(has({L("b'"), L("b"), 1}));
  CHECK(has({L("c"), L("b'"), 1}));
  CHECK(has({L("c"), L("c'"), 1}));
}

TEST_CASE("diagram mutation matches matrix mutation on the rank-3 example") {
  ExchangeMatrix m = rank3_example();
  Diagram before = diagram_view(m);
  Diagram after = diagram_mutate(before, L("b"));
  FramedSeed s = mutate_at(frame(m), L("b"));
  Diagram expected = diagram_view(s.base_matrix());
  CHECK(after.vertices == expected.vertices);
  CHECK(after.arrows == expected.arrows);
  // The a--c edge cancels: weights 2 and 2 with aligned orientation.
  CHECK(after.arrows == std::vector<DiagramArrow>{{L("a"), L("b"), 2},
                                                  {L("b"), L("c"), 1}});
  CHECK_THROWS_AS(diagram_mutate(before, L("zz")), UnknownVertex);
}

TEST_CASE("diagram mutation rejects irrational weight updates") {
  // In-arrow weight 2 meets out-arrow weight 1 over an existing weight-1
  // edge pointing j -> i: update needs sqrt(2).
  Diagram d;
  d.vertices = {L("a"), L("b"), L("c")};
  d.arrows = {{L("a"), L("b"), 2}, {L("b"), L("c"), 1}, {L("a"), L("c"), 1}};
  CHECK_THROWS_AS(diagram_mutate(d, L("b")), NonIntegerWeight);
}
