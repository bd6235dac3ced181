// Copyright 2026 The cjkit Authors
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

#include "cjkit/serialization.hpp"

#include <fstream>
#include <sstream>
#include <utility>
#include <vector>

#include <json.hpp>

#include "cjkit/errors.hpp"
#include "cjkit/rotation.hpp"

namespace cjkit {

namespace {

using nlohmann::json;

json parse(const std::string& text) {
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded()) throw ParseError("malformed JSON document");
  return doc;
}

json matrix_to_value(const ComplexMatrix& m) {
  json data = json::array();
  for (const Complex& z : m.entries()) data.push_back({z.real(), z.imag()});
  return json{{"rows", m.rows()}, {"cols", m.cols()}, {"data", std::move(data)}};
}

ComplexMatrix matrix_from_value(const json& value) {
  if (!value.is_object() || !value.contains("rows") || !value.contains("cols") ||
      !value.contains("data"))
    throw ParseError("matrix object needs rows, cols and data");
  if (!value["rows"].is_number_unsigned() || !value["cols"].is_number_unsigned())
    throw ParseError("matrix dimensions must be nonnegative integers");
  const std::size_t rows = value["rows"].get<std::size_t>();
  const std::size_t cols = value["cols"].get<std::size_t>();
  const json& data = value["data"];
  if (!data.is_array() || data.size() != rows * cols)
    throw ParseError("matrix data length does not match rows*cols");
  std::vector<Complex> entries;
  entries.reserve(data.size());
  for (const json& pair : data) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() ||
        !pair[1].is_number())
      throw ParseError("matrix entries must be [re, im] number pairs");
    entries.emplace_back(pair[0].get<double>(), pair[1].get<double>());
  }
  return ComplexMatrix(rows, cols, std::move(entries));
}

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

}  // namespace

std::string matrix_to_json(const ComplexMatrix& m) { return dump(matrix_to_value(m)); }

ComplexMatrix matrix_from_json(const std::string& text) {
  return matrix_from_value(parse(text));
}

std::string channel_to_json(const Channel& c) {
  json kraus = json::array();
  for (const ComplexMatrix& k : c.kraus()) kraus.push_back(matrix_to_value(k));
  return dump(json{{"d_in", c.d_in()}, {"d_out", c.d_out()}, {"kraus", std::move(kraus)}});
}

Channel channel_from_json(const std::string& text) {
  json doc = parse(text);
  if (!doc.is_object() || !doc.contains("d_in") || !doc.contains("d_out") ||
      !doc.contains("kraus"))
    throw ParseError("channel object needs d_in, d_out and kraus");
  if (!doc["d_in"].is_number_unsigned() || !doc["d_out"].is_number_unsigned() ||
      !doc["kraus"].is_array())
    throw ParseError("channel fields have wrong types");
  std::vector<ComplexMatrix> kraus;
  kraus.reserve(doc["kraus"].size());
  for (const json& k : doc["kraus"]) kraus.push_back(matrix_from_value(k));
  return Channel(doc["d_in"].get<std::size_t>(), doc["d_out"].get<std::size_t>(),
                 std::move(kraus));
}

std::string choi_to_json(const ChoiPayload& payload) {
  return dump(json{{"d_in", payload.d_in},
                   {"d_out", payload.d_out},
                   {"matrix", matrix_to_value(payload.matrix)}});
}

std::string choi_to_json(const ChoiState& s) {
  return choi_to_json(ChoiPayload{s.d_in(), s.d_out(), s.matrix()});
}

ChoiPayload choi_from_json(const std::string& text) {
  json doc = parse(text);
  if (!doc.is_object() || !doc.contains("d_in") || !doc.contains("d_out") ||
      !doc.contains("matrix"))
    throw ParseError("choi object needs d_in, d_out and matrix");
  if (!doc["d_in"].is_number_unsigned() || !doc["d_out"].is_number_unsigned())
    throw ParseError("choi dimensions must be nonnegative integers");
  ChoiPayload payload;
  payload.d_in = doc["d_in"].get<std::size_t>();
  payload.d_out = doc["d_out"].get<std::size_t>();
  payload.matrix = matrix_from_value(doc["matrix"]);
  return payload;
}

std::string representation_to_json(const Representation& rep) {
  switch (rep.kind()) {
    case Representation::Kind::finite: {
      json elements = json::array();
      for (const ComplexMatrix& u : rep.elements()) elements.push_back(matrix_to_value(u));
      return dump(json{{"kind", "finite"}, {"elements", std::move(elements)}});
    }
    case Representation::Kind::phase:
      return dump(json{{"kind", "phase"}, {"weights", rep.weights()}});
    case Representation::Kind::spin: {
      // Spin payloads round-trip through the generators so block structures
      // survive serialization; plain spin(j) files carry just j.
      return dump(json{{"kind", "spin"},
                       {"generators",
                        json::array({matrix_to_value(rep.jx()), matrix_to_value(rep.jy()),
                                     matrix_to_value(rep.jz())})}});
    }
  }
  throw ParseError("unknown representation kind");
}

Representation representation_from_json(const std::string& text) {
  json doc = parse(text);
  if (!doc.is_object() || !doc.contains("kind") || !doc["kind"].is_string())
    throw ParseError("representation object needs a kind");
  const std::string kind = doc["kind"].get<std::string>();
  if (kind == "finite") {
    if (!doc.contains("elements") || !doc["elements"].is_array())
      throw ParseError("finite representation needs an elements array");
    std::vector<ComplexMatrix> elements;
    for (const json& u : doc["elements"]) elements.push_back(matrix_from_value(u));
    return Representation::finite(std::move(elements));
  }
  if (kind == "phase") {
    if (!doc.contains("weights") || !doc["weights"].is_array())
      throw ParseError("phase representation needs a weights array");
    std::vector<long> weights;
    for (const json& w : doc["weights"]) {
      if (!w.is_number_integer()) throw ParseError("phase weights must be integers");
      weights.push_back(w.get<long>());
    }
    return Representation::phase(std::move(weights));
  }
  if (kind == "spin") {
    if (doc.contains("j")) {
      if (!doc["j"].is_number()) throw ParseError("spin j must be a number");
      return Representation::spin(doc["j"].get<double>());
    }
    if (doc.contains("generators") && doc["generators"].is_array() &&
        doc["generators"].size() == 3) {
      return Representation::spin_from_generators(
          matrix_from_value(doc["generators"][0]),
          matrix_from_value(doc["generators"][1]),
          matrix_from_value(doc["generators"][2]));
    }
    // orbital-space descriptor: the block rotation representation of a
    // truncated orbital ⊗ radial space
    if (doc.contains("orbital") && doc["orbital"].is_object()) {
      const json& orbital = doc["orbital"];
      if (!orbital.contains("l_max") || !orbital.contains("n_rad") ||
          !orbital["l_max"].is_number_unsigned() ||
          !orbital["n_rad"].is_number_unsigned())
        throw ParseError("orbital descriptor needs unsigned l_max and n_rad");
      OrbitalSpace space(orbital["l_max"].get<std::size_t>(),
                         orbital["n_rad"].get<std::size_t>());
      return space.block_representation();
    }
    throw ParseError("spin representation needs j, three generators, or an orbital descriptor");
  }
  throw ParseError("unknown representation kind '" + kind + "'");
}

std::string tau_to_json(const TauFamily& tf) {
  json taus = json::array();
  for (const TauEntry& e : tf.entries())
    taus.push_back(json{{"l", e.l},
                        {"j", e.j},
                        {"m", e.m},
                        {"re", e.value.real()},
                        {"im", e.value.imag()}});
  return dump(json{{"d", tf.dimension()}, {"taus", std::move(taus)}});
}

TauFamily tau_from_json(const std::string& text) {
  json doc = parse(text);
  if (!doc.is_object() || !doc.contains("d") || !doc.contains("taus"))
    throw ParseError("tau object needs d and taus");
  if (!doc["d"].is_number_unsigned() || !doc["taus"].is_array())
    throw ParseError("tau fields have wrong types");
  std::vector<TauEntry> entries;
  for (const json& e : doc["taus"]) {
    if (!e.is_object() || !e.contains("l") || !e.contains("j") || !e.contains("m") ||
        !e.contains("re") || !e.contains("im"))
      throw ParseError("tau entries need l, j, m, re, im");
    if (!e["l"].is_number_integer() || !e["j"].is_number_unsigned() ||
        !e["m"].is_number_unsigned() || !e["re"].is_number() || !e["im"].is_number())
      throw ParseError("tau entry fields have wrong types");
    entries.push_back({e["l"].get<long>(), e["j"].get<std::size_t>(),
                       e["m"].get<std::size_t>(),
                       Complex(e["re"].get<double>(), e["im"].get<double>())});
  }
  return TauFamily(doc["d"].get<std::size_t>(), std::move(entries));
}

PayloadKind classify_json(const std::string& text) {
  json doc = parse(text);
  if (!doc.is_object()) return PayloadKind::unknown;
  if (doc.contains("kraus")) return PayloadKind::channel;
  if (doc.contains("matrix") && doc.contains("d_in")) return PayloadKind::choi;
  if (doc.contains("taus")) return PayloadKind::tau;
  if (doc.contains("kind")) return PayloadKind::representation;
  if (doc.contains("rows")) return PayloadKind::matrix;
  return PayloadKind::unknown;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write '" + path + "'");
  out << content;
}

}  // namespace cjkit
