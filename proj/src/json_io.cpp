#include "mgs/json_io.hpp"

#include <json.hpp>

namespace mgs {

namespace {

using ordered_json = nlohmann::ordered_json;

}  // namespace

DiagramDocument make_document(const ExchangeMatrix& m,
                              std::optional<OrbifoldParams> params) {
  DiagramDocument doc;
  doc.params = params;
  doc.matrix = m;
  return doc;
}

DiagramDocument make_document(const FramedSeed& s,
                              std::optional<OrbifoldParams> params) {
  DiagramDocument doc;
  doc.params = params;
  doc.matrix = s.base_matrix();
  std::vector<Int> rows;
  const int n = s.size();
  rows.reserve(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) rows.push_back(s.c(i, j));
  }
  doc.frozen_rows = std::move(rows);
  return doc;
}

std::string to_json(const DiagramDocument& doc) {
  const ExchangeMatrix& m = doc.matrix;
  const int n = m.size();
  ordered_json out;
  out["version"] = doc.version;
  if (doc.params) {
    out["params"] = {{"genus", doc.params->genus},
                     {"punctures", doc.params->punctures},
                     {"orbifold_points", doc.params->orbifold_points}};
  } else {
    out["params"] = "custom";
  }
  out["vertices"] = ordered_json::array();
  for (int i = 0; i < n; ++i) {
    out["vertices"].push_back({{"name", m.label(i).name()}, {"symmetrizer_d", m.d(i)}});
  }
  out["arrows"] = ordered_json::array();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (m.b(i, j) == 0) continue;
      const bool forward = m.b(i, j) > 0;
      const int from = forward ? i : j;
      const int to = forward ? j : i;
      out["arrows"].push_back({{"from", m.label(from).name()},
                               {"to", m.label(to).name()},
                               {"b_forward", m.b(from, to)},
                               {"b_backward", m.b(to, from)}});
    }
  }
  if (doc.frozen_rows) {
    out["frozen_rows"] = ordered_json::array();
    for (int i = 0; i < n; ++i) {
      ordered_json row = ordered_json::array();
      for (int j = 0; j < n; ++j) {
        row.push_back((*doc.frozen_rows)[static_cast<std::size_t>(i) * n + j]);
      }
      out["frozen_rows"].push_back(std::move(row));
    }
  }
  return out.dump(2) + "\n";
}

DiagramDocument document_from_json(const std::string& text) {
  ordered_json in;
  try {
    in = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& err) {
    throw ParseError(std::string("invalid JSON: ") + err.what());
  }
  try {
    DiagramDocument doc;
    doc.version = in.at("version").get<std::string>();
    if (doc.version != "1.0") {
      throw ParseError("unsupported document version '" + doc.version + "'");
    }
    const auto& params = in.at("params");
    if (params.is_string()) {
      if (params.get<std::string>() != "custom") {
        throw ParseError("params must be an object or \"custom\"");
      }
    } else {
      doc.params = OrbifoldParams{params.at("genus").get<int>(),
                                  params.at("punctures").get<int>(),
                                  params.at("orbifold_points").get<int>()};
    }
    std::vector<VertexLabel> labels;
    std::vector<Int> stored_d;
    for (const auto& v : in.at("vertices")) {
      labels.push_back(VertexLabel::parse(v.at("name").get<std::string>()));
      stored_d.push_back(v.at("symmetrizer_d").get<Int>());
    }
    std::vector<ArrowSpec> pairs;
    for (const auto& a : in.at("arrows")) {
      pairs.push_back({VertexLabel::parse(a.at("from").get<std::string>()),
                       VertexLabel::parse(a.at("to").get<std::string>()),
                       a.at("b_forward").get<Int>(), a.at("b_backward").get<Int>()});
    }
    ExchangeMatrix parsed = matrix_from_arrows(std::move(labels), pairs);
    const int n = parsed.size();
    for (int i = 0; i < n; ++i) {
      if (stored_d[static_cast<std::size_t>(i)] < 1) {
        throw ParseError("symmetrizer entries must be positive at '" +
                         parsed.label(i).name() + "'");
      }
      for (int j = 0; j < n; ++j) {
        // stored d must keep diag(d)·B skew-symmetric
        if (stored_d[static_cast<std::size_t>(i)] * parsed.b(i, j) !=
            -stored_d[static_cast<std::size_t>(j)] * parsed.b(j, i)) {
          throw ParseError("stored symmetrizer disagrees with the pair data at '" +
                           parsed.label(i).name() + "'");
        }
      }
    }
    doc.matrix = ExchangeMatrix::from_parts(parsed.labels(), std::move(stored_d),
                                            parsed.b_cells());
    if (in.contains("frozen_rows")) {
      const int n = doc.matrix.size();
      std::vector<Int> rows;
      rows.reserve(static_cast<std::size_t>(n) * n);
      const auto& fr = in.at("frozen_rows");
      if (static_cast<int>(fr.size()) != n) {
        throw ParseError("frozen_rows must hold one row per vertex");
      }
      for (const auto& row : fr) {
        if (static_cast<int>(row.size()) != n) {
          throw ParseError("frozen_rows rows must have one entry per vertex");
        }
        for (const auto& cell : row) rows.push_back(cell.get<Int>());
      }
      doc.frozen_rows = std::move(rows);
    }
    return doc;
  } catch (const nlohmann::json::exception& err) {
    throw ParseError(std::string("malformed document: ") + err.what());
  }
}

FramedSeed seed_from_document(const DiagramDocument& doc) {
  if (!doc.frozen_rows) return frame(doc.matrix);
  return seed_with_c_block(doc.matrix, *doc.frozen_rows);
}

}  // namespace mgs
