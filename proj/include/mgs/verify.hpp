#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mgs/seed.hpp"
#include "mgs/sequence.hpp"

namespace mgs {

enum class Outcome { Valid, NotGreenAt, NotAllRedAtEnd, EngineFault };

enum class ApplyMode { Strict, Permissive };

// One executed mutation: state inspected just before mutating.
struct StepRecord {
  std::size_t index = 0;  // 1-based position in the sequence
  VertexLabel vertex;
  VertexColor color_before = VertexColor::Green;
  std::vector<Int> c_row_before;

  bool operator==(const StepRecord&) const = default;
};

struct VerificationReport {
  Outcome outcome = Outcome::Valid;
  std::size_t failure_step = 0;  // 1-based, set for NotGreenAt / EngineFault
  std::string fault_reason;
  std::size_t violations = 0;  // non-green mutations executed (permissive)
  std::vector<StepRecord> steps;
  std::vector<std::vector<Int>> c_after;  // C snapshot after each executed step
  std::vector<Int> final_c;               // row-major n x n
  std::vector<VertexLabel> labels;
  std::vector<Int> symmetrizer;
  double duration_ms = 0.0;
};

// Runs the sequence. Strict stops at the first non-green mutation;
// permissive logs it and keeps mutating. A strict Valid run and the
// permissive run of the same input carry identical step records.
std::pair<FramedSeed, VerificationReport> apply_sequence(const FramedSeed& start,
                                                         const MutationSequence& seq,
                                                         ApplyMode mode);

// Builds the diagram, frames it and strictly applies delta(params).
VerificationReport verify_mgs(const OrbifoldParams& params);

// Expected state of one vertex: color plus the printed superscript
// multiset. Printed multiplicity of slot u on vertex v is
// (d_v / d_u) * c_vu^2; entries absent from the list must be zero.
struct ExpectedVertexState {
  VertexLabel vertex;
  VertexColor color = VertexColor::Green;
  std::vector<std::pair<VertexLabel, Int>> printed;
};

using StateAssertion = std::vector<ExpectedVertexState>;

// nullopt when the seed matches; otherwise a mismatch report.
// Throws UnknownVertex for assertion vertices not in the seed.
std::optional<std::string> assert_state(const FramedSeed& seed,
                                        const StateAssertion& expected);

enum class TraceStyle { Superscript, Matrix };

// One line per executed step showing the state after it; deterministic.
std::string render_trace(const VerificationReport& report, TraceStyle style);

// Frames the matrix and applies the first prefix_len steps, requiring each
// mutated vertex to be green.
FramedSeed replay_prefix(const ExchangeMatrix& m, const MutationSequence& seq,
                         std::size_t prefix_len);

// Printed multiplicity of slot u on vertex v (see ExpectedVertexState).
Int printed_weight(const FramedSeed& seed, int v, int u);

}  // namespace mgs
