#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "mgs/checkpoints.hpp"

using namespace mgs;

TEST_CASE("checkpoint coverage is exactly the five pinned parameter sets") {
  CHECK(has_checkpoints({1, 2, 3}));
  CHECK(has_checkpoints({1, 4, 2}));
  CHECK(has_checkpoints({1, 3, 2}));
  CHECK(has_checkpoints({2, 3, 1}));
  CHECK(has_checkpoints({0, 4, 2}));
  CHECK_FALSE(has_checkpoints({1, 2, 1}));
  CHECK_FALSE(has_checkpoints({0, 2, 3}));
  CHECK_FALSE(has_checkpoints({3, 2, 1}));
}

TEST_CASE("every mid-walk checkpoint state matches its table") {
  const std::vector<OrbifoldParams> covered{
      {1, 2, 3}, {1, 4, 2}, {1, 3, 2}, {2, 3, 1}, {0, 4, 2}};
  for (const auto& P : covered) {
    CAPTURE(P.genus);
    CAPTURE(P.punctures);
    CAPTURE(P.orbifold_points);
    std::vector<CheckpointResult> results = run_checkpoints(P);
    CHECK_FALSE(results.empty());
    for (const auto& r : results) {
      CAPTURE(r.name);
      CAPTURE(r.detail);
      CHECK(r.passed);
    }
  }
}

TEST_CASE("unsupported checkpoint parameters throw") {
  CHECK_THROWS_AS(run_checkpoints({1, 2, 1}), OutOfRange);
}
