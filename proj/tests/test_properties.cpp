#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <string>
#include <vector>

#include "mgs/diagram.hpp"
#include "mgs/orbifold.hpp"
#include "mgs/seed.hpp"

using namespace mgs;

namespace {

// Full verification grid: n in 0..4, p in 2..7, q in 1..4, minus the
// genus-0 diagrams that are too small and the open (0,2,2) case.
std::vector<OrbifoldParams> grid() {
  std::vector<OrbifoldParams> out;
  for (int n = 0; n <= 4; ++n) {
    for (int p = 2; p <= 7; ++p) {
      for (int q = 1; q <= 4; ++q) {
        if (n == 0 && (p + q < 4 || (p == 2 && q == 2))) continue;
        out.push_back({n, p, q});
      }
    }
  }
  return out;
}

bool skew_with_same_d(const FramedSeed& s) {
  for (int i = 0; i < s.size(); ++i) {
    for (int j = 0; j < s.size(); ++j) {
      if (s.d(i) * s.b(i, j) != -s.d(j) * s.b(j, i)) return false;
    }
  }
  return true;
}

std::vector<int> green_indices(const FramedSeed& s) {
  std::vector<int> out;
  for (int i = 0; i < s.size(); ++i) {
    if (color_of(s, i) == VertexColor::Green) out.push_back(i);
  }
  return out;
}

Diagram mutable_view(const FramedSeed& s) {
  Diagram d = diagram_view(s);
  d.colors.clear();  // compare shape only; colors live in the c-rows
  d.frozen.clear();
  return d;
}

}  // namespace

TEST_CASE("randomized green walks preserve the mutation invariants") {
  const std::vector<OrbifoldParams> pool = grid();
  REQUIRE(pool.size() == 118);
  std::vector<ExchangeMatrix> built;
  built.reserve(pool.size());
  for (const auto& P : pool) built.push_back(build_diagram(P));

  std::mt19937_64 rng(0x6d677321u);
  int trials_run = 0;
  int involution_bad = 0;
  int symmetrizer_bad = 0;
  int commutation_bad = 0;
  int sign_faults = 0;
  std::string first_fault;

  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t pick = static_cast<std::size_t>(rng() % built.size());
    const ExchangeMatrix& m = built[pick];
    FramedSeed s = frame(m);
    const int walk_len = 1 + static_cast<int>(rng() % 24);
    ++trials_run;

    for (int step = 0; step < walk_len; ++step) {
      std::vector<int> greens;
      try {
        greens = green_indices(s);
      } catch (const Error& err) {
        ++sign_faults;
        if (first_fault.empty()) first_fault = err.what();
        break;
      }
      if (greens.empty()) break;  // reached an all-red state
      const int k = greens[static_cast<std::size_t>(rng() % greens.size())];

      FramedSeed twice = s;
      mutate_in_place(twice, k);
      mutate_in_place(twice, k);
      if (twice.cells() != s.cells()) ++involution_bad;

      Diagram before = mutable_view(s);
      mutate_in_place(s, k);
      if (!skew_with_same_d(s)) ++symmetrizer_bad;
      try {
        Diagram advanced = diagram_mutate(before, s.label(k));
        advanced.colors.clear();
        if (advanced != mutable_view(s)) ++commutation_bad;
      } catch (const Error& err) {
        ++commutation_bad;
        if (first_fault.empty()) first_fault = err.what();
      }
    }

    // every visited endpoint state still has sign-pure rows
    try {
      (void)green_indices(s);
    } catch (const Error& err) {
      ++sign_faults;
      if (first_fault.empty()) first_fault = err.what();
    }
  }

  CAPTURE(first_fault);
  CHECK(trials_run == 1000);
  CHECK(involution_bad == 0);
  CHECK(symmetrizer_bad == 0);
  CHECK(commutation_bad == 0);
  CHECK(sign_faults == 0);
}

TEST_CASE("mutation only touches the mutated row, column, and crossing terms") {
  // spot-check: entries with j != k and both b_jk and b_kl zero stay put
  ExchangeMatrix m = build_diagram({1, 3, 1});
  FramedSeed s = frame(m);
  const int k = s.require_index(vl::m(1));
  FramedSeed t = mutate_at(s, k);
  for (int j = 0; j < s.size(); ++j) {
    if (j == k || s.b(j, k) != 0) continue;
    for (int l = 0; l < s.size(); ++l) {
      if (l == k || s.b(k, l) != 0) continue;
      CHECK(t.b(j, l) == s.b(j, l));
    }
  }
}
