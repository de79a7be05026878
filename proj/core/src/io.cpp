// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "dmkit/io.hpp"

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace dmkit {
namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw FormatError("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw FormatError(std::string("missing key \"") + key + "\"");
  return *it;
}

std::vector<Label> labels_of(const Json& j, const char* what) {
  if (!j.is_array()) throw FormatError(std::string(what) + " must be an array of strings");
  std::vector<Label> out;
  for (const auto& x : j) {
    if (!x.is_string()) throw FormatError(std::string(what) + " must be an array of strings");
    out.push_back(x.get<std::string>());
  }
  return out;
}

FieldCtx ctx_of(const Json& j) {
  const Json& b = field(j, "field_bits");
  if (!b.is_number_unsigned()) throw FormatError("field_bits must be a non-negative integer");
  try {
    return FieldCtx::make(b.get<unsigned>());
  } catch (const FieldError& e) {
    throw FormatError(e.what());
  }
}

std::vector<std::vector<FieldElement>> rows_of(const Json& j, const FieldCtx& ctx) {
  if (!j.is_array()) throw FormatError("rows must be an array of arrays");
  std::vector<std::vector<FieldElement>> rows;
  for (const auto& r : j) {
    if (!r.is_array()) throw FormatError("rows must be an array of arrays");
    std::vector<FieldElement> row;
    for (const auto& x : r) {
      if (!x.is_string()) throw FormatError("matrix entries must be hex strings");
      try {
        row.push_back(ctx.from_hex(x.get<std::string>()));
      } catch (const FieldError& e) {
        throw FormatError(e.what());
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

Json hex_rows(const SkewMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.size(); ++j) row.push_back(to_hex(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

void check_user_label(const Label& v) {
  if (v.empty()) throw FormatError("empty vertex label");
  if (has_reserved_char(v)) throw FormatError("label uses a reserved character (' + ~ ^): " + v);
}

}  // namespace

Json to_json(const SkewMatrix& m) {
  return Json{{"field_bits", m.ctx().bits()}, {"labels", m.labels()}, {"rows", hex_rows(m)}};
}

SkewMatrix skew_matrix_from_json(const Json& j) {
  const FieldCtx ctx = ctx_of(j);
  auto labels = labels_of(field(j, "labels"), "labels");
  const auto rows = rows_of(field(j, "rows"), ctx);
  try {
    return SkewMatrix::from_rows(ctx, std::move(labels), rows);
  } catch (const MatrixError& e) {
    throw FormatError(e.what());
  }
}

Json to_json(const DeltaMatroid& d) {
  Json j = to_json(d.matrix());
  j["twist"] = to_json(d.twist());
  return j;
}

DeltaMatroid delta_matroid_from_json(const Json& j) {
  SkewMatrix m = skew_matrix_from_json(j);
  LabelSet tw;
  if (j.contains("twist")) tw = label_set_from_json(j["twist"]);
  try {
    return DeltaMatroid(std::move(m), std::move(tw));
  } catch (const UnknownLabelError& e) {
    throw FormatError(e.what());
  }
}

Json to_json(const MaderNetwork& net) {
  Json edges = Json::array();
  for (const auto& [u, v] : net.graph.edges()) edges.push_back({u, v});
  Json partition = Json::array();
  for (const auto& b : net.partition) partition.push_back(to_json(b));
  return Json{{"vertices", net.graph.vertices()},
              {"edges", std::move(edges)},
              {"terminals", to_json(net.terminals())},
              {"partition", std::move(partition)}};
}

MaderNetwork network_from_json(const Json& j) {
  MaderNetwork net;
  try {
    for (const auto& v : labels_of(field(j, "vertices"), "vertices")) {
      check_user_label(v);
      net.graph.add_vertex(v);
    }
    const Json& edges = field(j, "edges");
    if (!edges.is_array()) throw FormatError("edges must be an array of pairs");
    for (const auto& e : edges) {
      const auto pair = labels_of(e, "edge");
      if (pair.size() != 2) throw FormatError("edges must be an array of pairs");
      net.graph.add_edge(pair[0], pair[1]);
    }
    const Json& partition = field(j, "partition");
    if (!partition.is_array()) throw FormatError("partition must be an array of arrays");
    for (const auto& b : partition) {
      const auto block = labels_of(b, "partition block");
      LabelSet s(block.begin(), block.end());
      if (s.size() != block.size()) throw FormatError("repeated label in a partition block");
      net.partition.push_back(std::move(s));
    }
    net.validate();
  } catch (const GraphError& e) {
    throw FormatError(e.what());
  } catch (const NetworkError& e) {
    throw FormatError(e.what());
  }
  if (j.contains("terminals")) {
    const auto t = labels_of(j["terminals"], "terminals");
    if (LabelSet(t.begin(), t.end()) != net.terminals()) {
      throw FormatError("terminals do not match the union of the partition blocks");
    }
  }
  return net;
}

Json to_json(const QSetFamily& fam) {
  Json sets = Json::array();
  for (const auto& s : fam.sets) sets.push_back(to_json(s));
  Json j{{"q", fam.q}, {"sets", std::move(sets)}};
  if (!fam.weights.empty()) j["weights"] = fam.weights;
  return j;
}

QSetFamily family_from_json(const Json& j) {
  QSetFamily fam;
  const Json& q = field(j, "q");
  if (!q.is_number_unsigned()) throw FormatError("q must be a non-negative integer");
  fam.q = q.get<std::size_t>();
  const Json& sets = field(j, "sets");
  if (!sets.is_array()) throw FormatError("sets must be an array of arrays");
  for (const auto& s : sets) {
    const auto items = labels_of(s, "set");
    LabelSet x(items.begin(), items.end());
    if (x.size() != items.size()) throw FormatError("repeated label in a set");
    fam.sets.push_back(std::move(x));
  }
  if (j.contains("weights")) {
    const Json& w = j["weights"];
    if (!w.is_array()) throw FormatError("weights must be an array of numbers");
    for (const auto& x : w) {
      if (!x.is_number()) throw FormatError("weights must be an array of numbers");
      fam.weights.push_back(x.get<double>());
    }
  }
  try {
    fam.validate();
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
  return fam;
}

Json to_json(const LinearMatrix& m) {
  Json rows = Json::array();
  for (const auto& r : m.rows) {
    Json row = Json::array();
    for (const auto& x : r) row.push_back(to_hex(x));
    rows.push_back(std::move(row));
  }
  return Json{{"field_bits", m.ctx.bits()}, {"columns", m.columns}, {"rows", std::move(rows)}};
}

LinearMatrix linear_matrix_from_json(const Json& j) {
  const FieldCtx ctx = ctx_of(j);
  LinearMatrix m{ctx, labels_of(field(j, "columns"), "columns"), rows_of(field(j, "rows"), ctx)};
  LabelSet seen;
  for (const auto& c : m.columns) {
    if (!seen.insert(c).second) throw FormatError("duplicate column label: " + c);
  }
  for (const auto& r : m.rows) {
    if (r.size() != m.columns.size()) throw FormatError("row length does not match column count");
  }
  return m;
}

Json to_json(const MaderRepresentation& r) {
  Json primes = Json::object();
  for (const auto& [v, p] : r.primes) primes[v] = p;
  return Json{{"full", to_json(r.full)},
              {"contracted", to_json(r.contracted)},
              {"primes", std::move(primes)},
              {"subdivision", to_json(r.subdivision)}};
}

Json to_json(const SparsifyReport& r) {
  Json edges = Json::array();
  for (const auto& [u, v] : r.edges_added) edges.push_back({u, v});
  return Json{{"rounds", r.rounds},
              {"marked", to_json(r.marked)},
              {"edges_added", std::move(edges)},
              {"vertices_removed", r.vertices_removed},
              {"seed", r.seed},
              {"final_size", r.final_size},
              {"size_bound", r.size_bound}};
}

Json to_json(const PathPacking& p) {
  return Json{{"paths", p.paths}, {"endpoints", to_json(p.endpoints())}};
}

Json to_json(const LabelSet& s) { return Json(std::vector<Label>(s.begin(), s.end())); }

LabelSet label_set_from_json(const Json& j) {
  const auto v = labels_of(j, "label list");
  return LabelSet(v.begin(), v.end());
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

void write_json_file(const std::filesystem::path& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << j.dump(2) << '\n';
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

}  // namespace dmkit
