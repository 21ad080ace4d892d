#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "mgs/checkpoints.hpp"
#include "mgs/diagram.hpp"
#include "mgs/dot_io.hpp"
#include "mgs/json_io.hpp"
#include "mgs/orbifold.hpp"
#include "mgs/search.hpp"
#include "mgs/seed.hpp"
#include "mgs/sequence.hpp"
#include "mgs/verify.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kUnsupported = 2;
constexpr int kExhausted = 3;
constexpr int kBudget = 4;

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw mgs::Error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Exits with the rejection message when the parameters are unsupported.
bool supported(const mgs::OrbifoldParams& params, int& code) {
  const mgs::ParamCheck check = mgs::validate_params(params);
  if (check.ok) return true;
  std::cerr << check.message << "\n";
  code = kUnsupported;
  return false;
}

// Every parameter point the verifier is expected to certify.
std::vector<mgs::OrbifoldParams> grid_points() {
  std::vector<mgs::OrbifoldParams> pts;
  for (int n = 0; n <= 4; ++n) {
    for (int p = 2; p <= 7; ++p) {
      for (int q = 1; q <= 4; ++q) {
        if (n == 0 && p + q < 4) continue;
        if (n == 0 && p == 2 && q == 2) continue;  // open case, reported separately
        pts.push_back({n, p, q});
      }
    }
  }
  return pts;
}

std::string outcome_text(const mgs::VerificationReport& rep) {
  switch (rep.outcome) {
    case mgs::Outcome::Valid:
      return "Valid";
    case mgs::Outcome::NotGreenAt:
      return "not green at step " + std::to_string(rep.failure_step);
    case mgs::Outcome::NotAllRedAtEnd:
      return "not all red at end";
    case mgs::Outcome::EngineFault:
      return "engine fault: " + rep.fault_reason;
  }
  return "unknown";
}

int run_build(const mgs::OrbifoldParams& params, const std::string& format,
              bool frozen) {
  int code = kOk;
  if (!supported(params, code)) return code;
  const mgs::ExchangeMatrix mat = mgs::build_diagram(params);
  if (format == "json") {
    const mgs::DiagramDocument doc = frozen
                                         ? mgs::make_document(mgs::frame(mat), params)
                                         : mgs::make_document(mat, params);
    std::cout << mgs::to_json(doc);
  } else {
    mgs::DotOptions opts;
    opts.colors = frozen;
    if (frozen) {
      std::cout << mgs::to_dot(mgs::diagram_view(mgs::frame(mat), true), opts);
    } else {
      std::cout << mgs::to_dot(mgs::diagram_view(mat), opts);
    }
  }
  return kOk;
}

int run_sequence(const mgs::OrbifoldParams& params, bool annotate) {
  int code = kOk;
  if (!supported(params, code)) return code;
  const mgs::MutationSequence seq = mgs::delta(params);
  if (annotate) {
    for (const auto& span : seq.provenance) {
      std::cout << "# " << span.step_id << "\n";
      for (std::size_t i = span.begin; i < span.end; ++i) {
        std::cout << seq.steps[i].name() << "\n";
      }
    }
  } else {
    for (const auto& step : seq.steps) std::cout << step.name() << "\n";
  }
  return kOk;
}

int run_grid() {
  const auto pts = grid_points();
  std::size_t valid = 0;
  for (const auto& params : pts) {
    const mgs::ExchangeMatrix mat = mgs::build_diagram(params);
    const mgs::MutationSequence seq = mgs::delta(params);
    const auto [fin, rep] =
        mgs::apply_sequence(mgs::frame(mat), seq, mgs::ApplyMode::Strict);
    const bool ok = rep.outcome == mgs::Outcome::Valid && mgs::is_neg_permutation(fin);
    std::cout << "(n=" << params.genus << ", p=" << params.punctures
              << ", q=" << params.orbifold_points << "): ";
    if (ok) {
      std::cout << "Valid, " << rep.violations
                << " violations, final C = -permutation\n";
      ++valid;
    } else {
      std::cout << outcome_text(rep) << "\n";
    }
  }
  std::cout << valid << "/" << pts.size() << " Valid\n";
  return valid == pts.size() ? kOk : kUsage;
}

int run_verify(const mgs::OrbifoldParams& params, bool have_params,
               const std::string& input, const std::string& trace,
               bool checkpoints) {
  mgs::ExchangeMatrix mat;
  mgs::OrbifoldParams effective = params;
  if (!input.empty()) {
    const mgs::DiagramDocument doc = mgs::document_from_json(slurp(input));
    if (!doc.params) {
      std::cerr << "document stores no surface parameters; nothing to verify\n";
      return kUsage;
    }
    effective = *doc.params;
    int code = kOk;
    if (!supported(effective, code)) return code;
    mat = doc.matrix;
  } else {
    if (!have_params) {
      std::cerr << "verify needs either -n/-p/-q or --input\n";
      return kUsage;
    }
    int code = kOk;
    if (!supported(effective, code)) return code;
    mat = mgs::build_diagram(effective);
  }
  const mgs::MutationSequence seq = mgs::delta(effective);
  const auto [fin, rep] =
      mgs::apply_sequence(mgs::frame(mat), seq, mgs::ApplyMode::Strict);
  if (!trace.empty()) {
    std::cout << mgs::render_trace(rep, trace == "matrix"
                                            ? mgs::TraceStyle::Matrix
                                            : mgs::TraceStyle::Superscript);
  }
  bool checks_ok = true;
  if (checkpoints) {
    if (!mgs::has_checkpoints(effective)) {
      std::cerr << "no checkpoint data for these parameters\n";
      return kUnsupported;
    }
    for (const auto& result : mgs::run_checkpoints(effective)) {
      std::cout << "checkpoint " << result.name << ": "
                << (result.passed ? "pass" : "FAIL") << "\n";
      if (!result.passed) {
        std::cout << result.detail;
        checks_ok = false;
      }
    }
  }
  const bool valid = rep.outcome == mgs::Outcome::Valid && mgs::is_neg_permutation(fin);
  if (valid) {
    std::cout << "Valid, " << rep.violations
              << " violations, final C = -permutation\n";
  } else {
    std::cout << outcome_text(rep) << "\n";
  }
  return valid && checks_ok ? kOk : kUsage;
}

int run_search(const mgs::OrbifoldParams& params, bool have_params,
               const std::string& input, bool have_depth, int max_depth,
               long long max_states, const std::string& mode) {
  mgs::ExchangeMatrix mat;
  int default_depth = -1;
  if (!input.empty()) {
    const mgs::DiagramDocument doc = mgs::document_from_json(slurp(input));
    mat = doc.matrix;
    if (doc.params) {
      int code = kOk;
      if (!supported(*doc.params, code)) return code;
      default_depth = static_cast<int>(mgs::delta(*doc.params).steps.size());
    }
  } else {
    if (!have_params) {
      std::cerr << "search needs either -n/-p/-q or --input\n";
      return kUsage;
    }
    int code = kOk;
    if (!supported(params, code)) return code;
    mat = mgs::build_diagram(params);
    default_depth = static_cast<int>(mgs::delta(params).steps.size());
  }
  mgs::SearchConfig cfg;
  cfg.max_depth = have_depth ? max_depth : default_depth;
  if (cfg.max_depth < 0) {
    std::cerr << "--max-depth is required for diagrams without parameters\n";
    return kUsage;
  }
  cfg.max_states = max_states;
  cfg.mode = mode == "all" ? mgs::SearchMode::All : mgs::SearchMode::First;
  const mgs::SearchResult res = mgs::search_mgs(mat, cfg);
  switch (res.status) {
    case mgs::SearchStatus::Found:
      for (const auto& seq : res.sequences) {
        for (std::size_t i = 0; i < seq.size(); ++i) {
          if (i) std::cout << " ";
          std::cout << seq[i].name();
        }
        std::cout << "\n";
      }
      return kOk;
    case mgs::SearchStatus::Exhausted:
      std::cerr << "exhausted: no sequence of length <= " << cfg.max_depth << "\n";
      return kExhausted;
    case mgs::SearchStatus::BudgetExceeded:
      std::cerr << "budget exceeded after " << res.states_visited << " states\n";
      return kBudget;
  }
  return kUsage;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Maximal green sequence toolkit for orbifold triangulation diagrams"};
  app.require_subcommand(1);

  int n = 0;
  int p = 1;
  int q = 1;
  std::string format = "json";
  std::string trace;
  std::string input;
  std::string mode = "first";
  int max_depth = 0;
  long long max_states = 1'000'000;
  bool frozen = false;
  bool annotate = false;
  bool checkpoints = false;
  bool grid = false;

  CLI::App* build = app.add_subcommand("build", "Emit a triangulation diagram");
  build->add_option("-n,--genus", n, "surface genus")->required();
  build->add_option("-p,--punctures", p, "puncture count")->required();
  build->add_option("-q,--orbifold", q, "orbifold point count")->required();
  build->add_option("--format", format, "json or dot")
      ->check(CLI::IsMember({"json", "dot"}));
  build->add_flag("--frozen", frozen, "include the frozen companion data");

  CLI::App* sequence = app.add_subcommand("sequence", "Emit the mutation sequence");
  sequence->add_option("-n,--genus", n, "surface genus")->required();
  sequence->add_option("-p,--punctures", p, "puncture count")->required();
  sequence->add_option("-q,--orbifold", q, "orbifold point count")->required();
  sequence->add_flag("--annotate", annotate, "interleave step-id markers");

  CLI::App* verify = app.add_subcommand("verify", "Replay and certify the sequence");
  auto* vn = verify->add_option("-n,--genus", n, "surface genus");
  verify->add_option("-p,--punctures", p, "puncture count")->needs(vn);
  verify->add_option("-q,--orbifold", q, "orbifold point count")->needs(vn);
  verify->add_option("--input", input, "diagram document to verify");
  verify->add_option("--trace", trace, "print per-step states")
      ->check(CLI::IsMember({"superscript", "matrix"}));
  verify->add_flag("--checkpoints", checkpoints, "run recorded state checkpoints");
  verify->add_flag("--grid", grid, "verify every supported parameter point");

  CLI::App* search = app.add_subcommand("search", "Search for a green sequence");
  auto* sn = search->add_option("-n,--genus", n, "surface genus");
  search->add_option("-p,--punctures", p, "puncture count")->needs(sn);
  search->add_option("-q,--orbifold", q, "orbifold point count")->needs(sn);
  search->add_option("--input", input, "diagram document to search");
  auto* depth_opt =
      search->add_option("--max-depth", max_depth, "longest sequence considered");
  search->add_option("--max-states", max_states, "state budget");
  search->add_option("--mode", mode, "first or all")
      ->check(CLI::IsMember({"first", "all"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  const mgs::OrbifoldParams params{n, p, q};
  try {
    if (build->parsed()) return run_build(params, format, frozen);
    if (sequence->parsed()) return run_sequence(params, annotate);
    if (verify->parsed()) {
      if (grid) return run_grid();
      return run_verify(params, vn->count() > 0, input, trace, checkpoints);
    }
    if (search->parsed()) {
      return run_search(params, sn->count() > 0, input, depth_opt->count() > 0,
                        max_depth, max_states, mode);
    }
  } catch (const mgs::UnsupportedParams& err) {
    std::cerr << err.what() << "\n";
    return kUnsupported;
  } catch (const mgs::Error& err) {
    std::cerr << err.what() << "\n";
    return kUsage;
  } catch (const std::exception& err) {
    std::cerr << err.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
