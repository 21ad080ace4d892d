#include "mgs/verify.hpp"

#include <chrono>
#include <sstream>

namespace mgs {

namespace {

const char* color_word(VertexColor c) {
  return c == VertexColor::Green ? "green" : "red";
}

}  // namespace

std::pair<FramedSeed, VerificationReport> apply_sequence(const FramedSeed& start,
                                                         const MutationSequence& seq,
                                                         ApplyMode mode) {
  const auto t0 = std::chrono::steady_clock::now();
  FramedSeed s = start;
  VerificationReport rep;
  rep.labels = s.labels();
  rep.symmetrizer = s.symmetrizer();
  bool faulted = false;
  for (std::size_t i = 0; i < seq.steps.size(); ++i) {
    const VertexLabel& v = seq.steps[i];
    int idx = 0;
    VertexColor color = VertexColor::Green;
    try {
      idx = s.require_index(v);
      color = color_of(s, idx);
    } catch (const Error& err) {
      rep.outcome = Outcome::EngineFault;
      rep.failure_step = i + 1;
      rep.fault_reason = err.what();
      faulted = true;
      break;
    }
    rep.steps.push_back({i + 1, v, color, s.c_row(idx)});
    if (color != VertexColor::Green) {
      if (rep.violations == 0) rep.failure_step = i + 1;
      ++rep.violations;
      if (mode == ApplyMode::Strict) {
        rep.outcome = Outcome::NotGreenAt;
        break;
      }
    }
    mutate_in_place(s, idx);
    rep.c_after.push_back(s.c_block());
  }
  rep.final_c = s.c_block();
  if (!faulted) {
    if (rep.violations > 0) {
      rep.outcome = Outcome::NotGreenAt;
    } else if (!is_final(s)) {
      rep.outcome = Outcome::NotAllRedAtEnd;
    } else {
      rep.outcome = Outcome::Valid;
    }
  }
  const auto t1 = std::chrono::steady_clock::now();
  rep.duration_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
  return {std::move(s), std::move(rep)};
}

VerificationReport verify_mgs(const OrbifoldParams& params) {
  ExchangeMatrix m = build_diagram(params);
  MutationSequence seq = delta(params);
  return apply_sequence(frame(m), seq, ApplyMode::Strict).second;
}

Int printed_weight(const FramedSeed& seed, int v, int u) {
  const Int c = seed.c(v, u);
  const Int scaled = seed.d(v) * c * c;
  if (scaled % seed.d(u) != 0) {
    throw Error("printed weight of '" + seed.label(u).name() + "' on '" +
                seed.label(v).name() + "' is not integral");
  }
  return scaled / seed.d(u);
}

std::optional<std::string> assert_state(const FramedSeed& seed,
                                        const StateAssertion& expected) {
  std::ostringstream bad;
  bool ok = true;
  for (const auto& entry : expected) {
    const int v = seed.require_index(entry.vertex);
    const VertexColor actual_color = color_of(seed, v);
    if (actual_color != entry.color) {
      ok = false;
      bad << entry.vertex.name() << ": expected " << color_word(entry.color)
          << ", got " << color_word(actual_color) << "\n";
    }
    std::vector<Int> want(static_cast<std::size_t>(seed.size()), 0);
    for (const auto& [slot, printed] : entry.printed) {
      const int u = seed.require_index(slot);
      // |c_vu| from the printed multiplicity: c^2 = printed * d_u / d_v.
      const Int num = printed * seed.d(u);
      if (num % seed.d(v) != 0) {
        ok = false;
        bad << entry.vertex.name() << ": printed " << printed << " at slot "
            << slot.name() << " is not expressible\n";
        continue;
      }
      const Int c2 = num / seed.d(v);
      const Int root = isqrt(c2);
      if (root * root != c2) {
        ok = false;
        bad << entry.vertex.name() << ": printed " << printed << " at slot "
            << slot.name() << " is not a framed weight\n";
        continue;
      }
      want[static_cast<std::size_t>(u)] += root;
    }
    for (int u = 0; u < seed.size(); ++u) {
      const Int got = seed.c(v, u) < 0 ? -seed.c(v, u) : seed.c(v, u);
      if (got != want[static_cast<std::size_t>(u)]) {
        ok = false;
        bad << entry.vertex.name() << ": slot " << seed.label(u).name()
            << " expected |c| = " << want[static_cast<std::size_t>(u)]
            << ", got " << got << "\n";
      }
    }
  }
  if (ok) return std::nullopt;
  return bad.str();
}

std::string render_trace(const VerificationReport& report, TraceStyle style) {
  const int n = static_cast<int>(report.labels.size());
  std::ostringstream out;
  out << "step |";
  for (const auto& v : report.labels) out << " " << v.name() << " |";
  out << "\n";
  for (std::size_t i = 0; i < report.c_after.size(); ++i) {
    const auto& c = report.c_after[i];
    out << (i + 1) << " μ_" << report.steps[i].vertex.name();
    for (int v = 0; v < n; ++v) {
      bool pos = false;
      bool neg = false;
      for (int u = 0; u < n; ++u) {
        pos = pos || c[static_cast<std::size_t>(v) * n + u] > 0;
        neg = neg || c[static_cast<std::size_t>(v) * n + u] < 0;
      }
      const char* color = (pos && neg) ? "?" : (pos ? "green" : "red");
      out << " | " << report.labels[v].name() << ": " << color << " ";
      if (style == TraceStyle::Matrix) {
        out << "[";
        for (int u = 0; u < n; ++u) {
          if (u) out << " ";
          out << c[static_cast<std::size_t>(v) * n + u];
        }
        out << "]";
      } else {
        out << "{";
        bool first = true;
        auto emit = [&](int u) {
          const Int cv = c[static_cast<std::size_t>(v) * n + u];
          if (cv == 0) return;
          const Int scaled = report.symmetrizer[v] * cv * cv;
          const Int du = report.symmetrizer[u];
          if (!first) out << ",";
          first = false;
          if (scaled % du == 0) {
            const Int printed = scaled / du;
            if (printed != 1) out << printed;
            out << report.labels[u].name();
          } else {
            out << "?" << report.labels[u].name();
          }
        };
        emit(v);  // own slot first, then canonical order
        for (int u = 0; u < n; ++u) {
          if (u != v) emit(u);
        }
        out << "}";
      }
    }
    out << "\n";
  }
  return out.str();
}

FramedSeed replay_prefix(const ExchangeMatrix& m, const MutationSequence& seq,
                         std::size_t prefix_len) {
  FramedSeed s = frame(m);
  for (std::size_t i = 0; i < prefix_len && i < seq.steps.size(); ++i) {
    const int idx = s.require_index(seq.steps[i]);
    if (color_of(s, idx) != VertexColor::Green) {
      throw Error("replay hit a non-green mutation at step " + std::to_string(i + 1) +
                  " ('" + seq.steps[i].name() + "')");
    }
    mutate_in_place(s, idx);
  }
  return s;
}

}  // namespace mgs
