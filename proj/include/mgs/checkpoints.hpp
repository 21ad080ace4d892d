#pragma once

#include <string>
#include <vector>

#include "mgs/orbifold.hpp"

namespace mgs {

struct CheckpointResult {
  std::string name;
  bool passed = false;
  std::string detail;  // empty when passed

  bool operator==(const CheckpointResult&) const = default;
};

// True when intermediate-state checkpoints are on file for these parameters.
bool has_checkpoints(const OrbifoldParams& params);

// Replays the full sequence for the parameters, pausing at recorded step
// boundaries and comparing the framed state against the expected colors and
// superscript multisets. Expected sets that depend on the run (captured
// frozen rows, row differences) are taken from the run itself at the earlier
// boundary they reference. Throws OutOfRange when no data is on file.
std::vector<CheckpointResult> run_checkpoints(const OrbifoldParams& params);

}  // namespace mgs
