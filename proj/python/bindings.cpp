#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mgs/checkpoints.hpp"
#include "mgs/diagram.hpp"
#include "mgs/dot_io.hpp"
#include "mgs/json_io.hpp"
#include "mgs/orbifold.hpp"
#include "mgs/search.hpp"
#include "mgs/seed.hpp"
#include "mgs/sequence.hpp"
#include "mgs/verify.hpp"

namespace py = pybind11;

namespace {

mgs::OrbifoldParams make_params(int genus, int punctures, int orbifold_points) {
  return {genus, punctures, orbifold_points};
}

std::vector<std::string> step_names(const std::vector<mgs::VertexLabel>& steps) {
  std::vector<std::string> out;
  out.reserve(steps.size());
  for (const auto& v : steps) out.push_back(v.name());
  return out;
}

const char* outcome_name(mgs::Outcome outcome) {
  switch (outcome) {
    case mgs::Outcome::Valid:
      return "valid";
    case mgs::Outcome::NotGreenAt:
      return "not_green_at";
    case mgs::Outcome::NotAllRedAtEnd:
      return "not_all_red_at_end";
    case mgs::Outcome::EngineFault:
      return "engine_fault";
  }
  return "unknown";
}

py::dict report_dict(const mgs::VerificationReport& rep) {
  py::dict out;
  out["outcome"] = outcome_name(rep.outcome);
  out["valid"] = rep.outcome == mgs::Outcome::Valid;
  out["violations"] = rep.violations;
  out["failure_step"] = rep.failure_step;
  out["steps"] = rep.steps.size();
  out["duration_ms"] = rep.duration_ms;
  return out;
}

}  // namespace

PYBIND11_MODULE(mgs, module) {
  module.doc() =
      "Maximal green sequences on orbifold triangulation diagrams: builders, "
      "mutation, verification and search.";

  // translators run newest-first, so the base class must be registered
  // before the subclass or it would shadow it
  py::register_exception<mgs::Error>(module, "DiagramError", PyExc_RuntimeError);
  py::register_exception<mgs::UnsupportedParams>(module, "UnsupportedParamsError",
                                                 PyExc_ValueError);

  py::class_<mgs::ExchangeMatrix>(module, "ExchangeMatrix")
      .def_property_readonly("size", &mgs::ExchangeMatrix::size)
      .def("labels",
           [](const mgs::ExchangeMatrix& m) { return step_names(m.labels()); })
      .def("symmetrizer", &mgs::ExchangeMatrix::symmetrizer)
      .def("b", &mgs::ExchangeMatrix::b, py::arg("i"), py::arg("j"))
      .def("to_json",
           [](const mgs::ExchangeMatrix& m) {
             return mgs::to_json(mgs::make_document(m, std::nullopt));
           })
      .def("to_dot",
           [](const mgs::ExchangeMatrix& m) {
             return mgs::to_dot(mgs::diagram_view(m));
           })
      .def("__eq__", [](const mgs::ExchangeMatrix& a,
                        const mgs::ExchangeMatrix& b) { return a == b; });

  py::class_<mgs::FramedSeed>(module, "FramedSeed")
      .def_property_readonly("size", &mgs::FramedSeed::size)
      .def("labels",
           [](const mgs::FramedSeed& s) { return step_names(s.labels()); })
      .def("b", &mgs::FramedSeed::b, py::arg("i"), py::arg("j"))
      .def("c", &mgs::FramedSeed::c, py::arg("i"), py::arg("j"))
      .def("c_row",
           [](const mgs::FramedSeed& s, const std::string& name) {
             return s.c_row(s.require_index(mgs::VertexLabel::parse(name)));
           },
           py::arg("vertex"))
      .def("mutate",
           [](const mgs::FramedSeed& s, const std::string& name) {
             return mgs::mutate_at(s, mgs::VertexLabel::parse(name));
           },
           py::arg("vertex"),
           "Return the seed mutated at the named vertex; the receiver is "
           "left unchanged.")
      .def("color",
           [](const mgs::FramedSeed& s, const std::string& name) {
             return mgs::color_of(s, mgs::VertexLabel::parse(name)) ==
                            mgs::VertexColor::Green
                        ? "green"
                        : "red";
           },
           py::arg("vertex"))
      .def("is_final", [](const mgs::FramedSeed& s) { return mgs::is_final(s); })
      .def("is_neg_permutation",
           [](const mgs::FramedSeed& s) { return mgs::is_neg_permutation(s); })
      .def("__eq__", [](const mgs::FramedSeed& a, const mgs::FramedSeed& b) {
        return a == b;
      });

  module.def(
      "validate_params",
      [](int genus, int punctures, int orbifold_points) {
        const mgs::ParamCheck check =
            mgs::validate_params(make_params(genus, punctures, orbifold_points));
        py::dict out;
        out["ok"] = check.ok;
        out["message"] = check.message;
        if (!check.ok) {
          switch (check.reason) {
            case mgs::ParamRejection::PunctureOne:
              out["reason"] = "puncture_one";
              break;
            case mgs::ParamRejection::TooSmall:
              out["reason"] = "too_small";
              break;
            case mgs::ParamRejection::NoOrbifoldPoints:
              out["reason"] = "no_orbifold_points";
              break;
          }
        }
        return out;
      },
      py::arg("genus"), py::arg("punctures"), py::arg("orbifold_points"));

  module.def(
      "build_diagram",
      [](int genus, int punctures, int orbifold_points) {
        return mgs::build_diagram(make_params(genus, punctures, orbifold_points));
      },
      py::arg("genus"), py::arg("punctures"), py::arg("orbifold_points"));

  module.def("frame", &mgs::frame, py::arg("matrix"));

  module.def(
      "delta",
      [](int genus, int punctures, int orbifold_points) {
        return step_names(
            mgs::delta(make_params(genus, punctures, orbifold_points)).steps);
      },
      py::arg("genus"), py::arg("punctures"), py::arg("orbifold_points"));

  module.def(
      "delta_spans",
      [](int genus, int punctures, int orbifold_points) {
        const mgs::MutationSequence seq =
            mgs::delta(make_params(genus, punctures, orbifold_points));
        std::vector<std::tuple<std::string, std::size_t, std::size_t>> out;
        for (const auto& span : seq.provenance) {
          out.emplace_back(span.step_id, span.begin, span.end);
        }
        return out;
      },
      py::arg("genus"), py::arg("punctures"), py::arg("orbifold_points"));

  module.def(
      "verify_mgs",
      [](int genus, int punctures, int orbifold_points) {
        return report_dict(
            mgs::verify_mgs(make_params(genus, punctures, orbifold_points)));
      },
      py::arg("genus"), py::arg("punctures"), py::arg("orbifold_points"));

  module.def(
      "trace",
      [](int genus, int punctures, int orbifold_points, const std::string& style) {
        const auto params = make_params(genus, punctures, orbifold_points);
        const mgs::ExchangeMatrix mat = mgs::build_diagram(params);
        const auto [fin, rep] = mgs::apply_sequence(
            mgs::frame(mat), mgs::delta(params), mgs::ApplyMode::Strict);
        (void)fin;
        return mgs::render_trace(rep, style == "matrix"
                                          ? mgs::TraceStyle::Matrix
                                          : mgs::TraceStyle::Superscript);
      },
      py::arg("genus"), py::arg("punctures"), py::arg("orbifold_points"),
      py::arg("style") = "superscript");

  module.def(
      "search_mgs",
      [](const mgs::ExchangeMatrix& m, int max_depth, long long max_states,
         const std::string& mode) {
        mgs::SearchConfig cfg;
        cfg.max_depth = max_depth;
        cfg.max_states = max_states;
        cfg.mode = mode == "all" ? mgs::SearchMode::All : mgs::SearchMode::First;
        const mgs::SearchResult res = mgs::search_mgs(m, cfg);
        py::dict out;
        out["status"] = res.status == mgs::SearchStatus::Found ? "found"
                        : res.status == mgs::SearchStatus::Exhausted
                            ? "exhausted"
                            : "budget_exceeded";
        std::vector<std::vector<std::string>> seqs;
        for (const auto& seq : res.sequences) seqs.push_back(step_names(seq));
        out["sequences"] = seqs;
        out["states_visited"] = res.states_visited;
        return out;
      },
      py::arg("matrix"), py::arg("max_depth"), py::arg("max_states") = 1'000'000,
      py::arg("mode") = "first");

  module.def(
      "enumerate_all",
      [](const mgs::ExchangeMatrix& m, int max_len) {
        std::vector<std::vector<std::string>> out;
        for (const auto& seq : mgs::enumerate_all(m, max_len)) {
          out.push_back(step_names(seq));
        }
        return out;
      },
      py::arg("matrix"), py::arg("max_len"));

  module.def(
      "run_checkpoints",
      [](int genus, int punctures, int orbifold_points) {
        std::vector<std::tuple<std::string, bool, std::string>> out;
        for (const auto& result : mgs::run_checkpoints(
                 make_params(genus, punctures, orbifold_points))) {
          out.emplace_back(result.name, result.passed, result.detail);
        }
        return out;
      },
      py::arg("genus"), py::arg("punctures"), py::arg("orbifold_points"));

  module.def("matrix_from_json", [](const std::string& text) {
    return mgs::document_from_json(text).matrix;
  });
}
