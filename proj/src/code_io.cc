// Copyright 2026 The hybridec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <json.hpp>
#include <sstream>

#include "hybridec/code_model.h"
#include "hybridec/error.h"

namespace hybridec {
namespace {

using nlohmann::json;

constexpr double kReorthonormalizeTol = 1e-6;

[[noreturn]] void malformed(const std::string& what) {
  throw Error(ErrorCode::kMalformedDocument, "code document: " + what);
}

std::size_t get_count(const json& doc, const char* key) {
  if (!doc.contains(key)) malformed(std::string("missing field '") + key + "'");
  const json& v = doc.at(key);
  if (!v.is_number_integer() || v.get<long long>() < 0) {
    malformed(std::string("field '") + key + "' must be a nonnegative integer");
  }
  return v.get<std::size_t>();
}

CVector parse_vector(const json& v) {
  if (!v.is_array()) malformed("vector must be an array of [re, im] pairs");
  CVector out;
  out.reserve(v.size());
  for (const auto& pair : v) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number()) {
      malformed("amplitude must be a [re, im] pair of numbers");
    }
    out.emplace_back(pair[0].get<double>(), pair[1].get<double>());
  }
  return out;
}

double gram_deviation(const std::vector<CVector>& frame) {
  double dev = 0.0;
  for (std::size_t i = 0; i < frame.size(); ++i) {
    for (std::size_t j = 0; j < frame.size(); ++j) {
      dev = std::max(dev, std::abs(inner(frame[i], frame[j]) - Complex(i == j ? 1.0 : 0.0)));
    }
  }
  return dev;
}

HybridCode parse_frames(const json& doc) {
  const auto q = get_count(doc, "q");
  const auto n = get_count(doc, "n");
  const auto K = get_count(doc, "K");
  const auto M = get_count(doc, "M");
  if (q < 2) malformed("q must be >= 2");
  if (n < 1) malformed("n must be >= 1");
  const std::size_t dim = ambient_dim(static_cast<unsigned>(q), n);
  if (!doc.contains("blocks") || !doc["blocks"].is_array()) malformed("missing 'blocks' array");
  const json& blocks_json = doc["blocks"];
  if (blocks_json.size() != M) {
    throw Error(ErrorCode::kInconsistentDimensions,
                "code document: " + std::to_string(blocks_json.size()) + " blocks, M = " +
                    std::to_string(M));
  }
  std::vector<CodeBlock> blocks;
  for (std::size_t m = 0; m < M; ++m) {
    const json& bj = blocks_json[m];
    if (!bj.is_array()) malformed("block must be an array of vectors");
    if (bj.size() != K) {
      throw Error(ErrorCode::kInconsistentDimensions,
                  "code document: block " + std::to_string(m + 1) + " has " +
                      std::to_string(bj.size()) + " vectors, K = " + std::to_string(K));
    }
    CodeBlock block;
    for (const auto& vj : bj) {
      CVector v = parse_vector(vj);
      if (v.size() != dim) {
        throw Error(ErrorCode::kInconsistentDimensions,
                    "code document: vector has " + std::to_string(v.size()) +
                        " entries, q^n = " + std::to_string(dim));
      }
      block.frame.push_back(std::move(v));
    }
    if (gram_deviation(block.frame) <= kReorthonormalizeTol) {
      auto ortho = orthonormalize(block.frame, 0.5);
      if (ortho.size() == block.frame.size()) block.frame = std::move(ortho);
    }
    blocks.push_back(std::move(block));
  }
  return HybridCode(static_cast<unsigned>(q), n, std::move(blocks));
}

StabilizerSpec parse_stabilizer(const json& doc) {
  const auto q = get_count(doc, "q");
  if (q != 2) malformed("stabilizer documents require q = 2");
  StabilizerSpec spec;
  spec.n = get_count(doc, "n");
  const json& gens = doc["stabilizers"];
  if (!gens.is_array()) malformed("'stabilizers' must be an array of strings");
  std::vector<int> signs;
  if (doc.contains("signs")) {
    if (!doc["signs"].is_array() || doc["signs"].size() != gens.size()) {
      malformed("'signs' must have one entry per stabilizer");
    }
    for (const auto& s : doc["signs"]) {
      if (!s.is_number_integer() || (s.get<int>() != 1 && s.get<int>() != -1)) {
        malformed("signs must be +1 or -1");
      }
      signs.push_back(s.get<int>());
    }
  }
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (!gens[i].is_string()) malformed("stabilizer entries must be strings");
    SignedPauli g = parse_signed_pauli(gens[i].get<std::string>());
    if (!signs.empty()) g.sign *= signs[i];
    if (g.op.n() != spec.n) {
      throw Error(ErrorCode::kInconsistentDimensions,
                  "code document: stabilizer '" + gens[i].get<std::string>() + "' has length " +
                      std::to_string(g.op.n()) + ", n = " + std::to_string(spec.n));
    }
    spec.generators.push_back(std::move(g));
  }
  if (doc.contains("classical_ops")) {
    const json& ops = doc["classical_ops"];
    if (!ops.is_array()) malformed("'classical_ops' must be an array of strings");
    for (const auto& o : ops) {
      if (!o.is_string()) malformed("classical_ops entries must be strings");
      SignedPauli h = parse_signed_pauli(o.get<std::string>());
      if (h.op.n() != spec.n) {
        throw Error(ErrorCode::kInconsistentDimensions,
                    "code document: classical op '" + o.get<std::string>() + "' has length " +
                        std::to_string(h.op.n()) + ", n = " + std::to_string(spec.n));
      }
      // Block signs are enumerated, so a sign on the listed operator is ignored.
      spec.classical_ops.push_back(std::move(h.op));
    }
  }
  return spec;
}

}  // namespace

CodeDocument parse_code_file(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    malformed(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) malformed("top level must be an object");
  try {
    if (doc.contains("stabilizers")) return parse_stabilizer(doc);
    return parse_frames(doc);
  } catch (const json::exception& e) {
    malformed(e.what());
  }
}

HybridCode load_code(std::string_view text) {
  CodeDocument doc = parse_code_file(text);
  if (auto* spec = std::get_if<StabilizerSpec>(&doc)) return from_stabilizer(*spec);
  return std::get<HybridCode>(std::move(doc));
}

std::string serialize_code(const HybridCode& code) {
  // Hand-written so amplitudes keep all 17 significant digits.
  std::ostringstream os;
  os.precision(17);
  os << "{\"q\":" << code.q() << ",\"n\":" << code.n() << ",\"K\":" << code.K()
     << ",\"M\":" << code.M() << ",\"blocks\":[";
  for (std::size_t m = 0; m < code.M(); ++m) {
    os << (m ? "," : "") << "[";
    const auto& frame = code.block(m).frame;
    for (std::size_t i = 0; i < frame.size(); ++i) {
      os << (i ? "," : "") << "[";
      for (std::size_t k = 0; k < frame[i].size(); ++k) {
        os << (k ? "," : "") << "[" << frame[i][k].real() << "," << frame[i][k].imag() << "]";
      }
      os << "]";
    }
    os << "]";
  }
  os << "]}\n";
  return os.str();
}

}  // namespace hybridec
