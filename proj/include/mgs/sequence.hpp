#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "mgs/orbifold.hpp"

namespace mgs {

// Half-open range of steps carrying one step id, e.g. "step 4(a)".
// Empty ranges are kept so every structural step stays addressable.
struct ProvenanceSpan {
  std::size_t begin = 0;
  std::size_t end = 0;
  std::string step_id;

  bool operator==(const ProvenanceSpan&) const = default;
};

// Mutation steps plus ordered spans partitioning [0, steps.size()).
struct MutationSequence {
  std::vector<VertexLabel> steps;
  std::vector<ProvenanceSpan> provenance;

  bool operator==(const MutationSequence&) const = default;
};

enum class SubseqKind { Alpha, Beta, Gamma, Delta, Epsilon, Mu, Omega, Iota, Pi };

// Named building blocks of the long sequences. k is ignored by the kinds
// that take none (Gamma, Epsilon, Mu, Omega). Throws OutOfRange when the
// referenced vertices do not exist for the given parameters.
std::vector<VertexLabel> subsequence(SubseqKind kind, int k,
                                     const OrbifoldParams& params);

// The full mutation sequence for the parameters. Throws UnsupportedParams.
MutationSequence delta(const OrbifoldParams& params);

// Closed-form counterpart of the genus-1 per-case tables, used as a
// self-check. Requires genus == 1.
MutationSequence delta_genus1_formula(const OrbifoldParams& params);

// End offset of the span with the given id. Throws OutOfRange.
std::size_t span_end(const MutationSequence& seq, const std::string& step_id);

}  // namespace mgs
