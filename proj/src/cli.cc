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

#include "hybridec/cli.h"

#include <CLI11.hpp>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <json.hpp>
#include <sstream>

#include "hybridec/code_model.h"
#include "hybridec/detection.h"
#include "hybridec/enumerators.h"
#include "hybridec/error.h"

namespace hybridec::cli {
namespace {

using Json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Deterministic JSON rendering. Floats always carry 17 significant digits.

void emit(const Json& j, std::ostream& os, int level);

bool is_scalar(const Json& j) { return !j.is_object() && !j.is_array(); }

void emit_float(double v, std::ostream& os) {
  if (!std::isfinite(v)) {
    os << "null";
    return;
  }
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.16e", v);
  os << buf;
}

void emit(const Json& j, std::ostream& os, int level) {
  const std::string pad(2 * (level + 1), ' ');
  const std::string close_pad(2 * level, ' ');
  if (j.is_number_float()) {
    emit_float(j.get<double>(), os);
  } else if (j.is_object()) {
    if (j.empty()) {
      os << "{}";
      return;
    }
    os << "{\n";
    bool first = true;
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (!first) os << ",\n";
      first = false;
      os << pad << Json(it.key()).dump() << ": ";
      emit(it.value(), os, level + 1);
    }
    os << "\n" << close_pad << "}";
  } else if (j.is_array()) {
    if (j.empty()) {
      os << "[]";
      return;
    }
    if (std::all_of(j.begin(), j.end(), is_scalar)) {
      os << "[";
      for (std::size_t k = 0; k < j.size(); ++k) {
        if (k) os << ", ";
        emit(j[k], os, level + 1);
      }
      os << "]";
      return;
    }
    os << "[\n";
    for (std::size_t k = 0; k < j.size(); ++k) {
      if (k) os << ",\n";
      os << pad;
      emit(j[k], os, level + 1);
    }
    os << "\n" << close_pad << "]";
  } else {
    os << j.dump();
  }
}

// ---------------------------------------------------------------------------

struct GlobalOptions {
  std::string format = "text";
  double tol = kMatrixTol;
  unsigned jobs = 1;
  std::string file;
};

Json complex_json(Complex c) { return Json::array({c.real(), c.imag()}); }

Json distribution_json(const WeightDistribution& w) {
  Json j;
  j["values"] = w.values;
  if (w.exact()) {
    Json exact = Json::array();
    for (const auto& r : *w.exact_values) exact.push_back(to_string(r));
    j["exact"] = exact;
  } else {
    j["exact"] = nullptr;
  }
  return j;
}

Json detectability_json(const DetectabilityReport& r) {
  Json j;
  j["error"] = r.error;
  j["detectable"] = r.detectable;
  Json lambdas = Json::array();
  for (const auto& l : r.lambdas) lambdas.push_back(complex_json(l));
  j["lambdas"] = lambdas;
  j["max_offdiag_violation"] = r.max_offdiag_violation;
  j["max_diag_violation"] = r.max_diag_violation;
  j["witness"] = r.witness ? Json::array({r.witness->b, r.witness->a}) : Json(nullptr);
  return j;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kMalformedDocument, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

HybridCode load_valid_code(const GlobalOptions& g) {
  HybridCode code = load_code(read_file(g.file));
  const ValidationReport v = validate(code, std::max(g.tol, 1e-10));
  if (!v.ok) {
    throw Error(ErrorCode::kInvariantViolation,
                "code fails validation: " + v.violations.front().describe() +
                    " (run 'validate' for the full list)");
  }
  return code;
}

// Comma-separated list. Exponent-form items themselves contain commas, so a
// new item starts only at "x:" or at a letter-form token.
std::vector<std::string> split_error_list(const std::string& text) {
  std::vector<std::string> items;
  std::string current;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    std::string token = text.substr(pos, comma - pos);
    const bool continues = !current.empty() && current.starts_with("x:") &&
                           !token.starts_with("x:");
    if (continues) {
      current += "," + token;
    } else {
      if (!current.empty()) items.push_back(current);
      current = token;
    }
    pos = comma + 1;
  }
  if (!current.empty()) items.push_back(current);
  return items;
}

CVector parse_state_spec(const std::string& spec, std::size_t K) {
  CVector phi(K);
  if (spec.starts_with("basis:")) {
    std::size_t idx = 0;
    try {
      idx = std::stoul(spec.substr(6));
    } catch (const std::exception&) {
      throw Error(ErrorCode::kMalformedDocument, "bad state spec '" + spec + "'");
    }
    if (idx >= K) {
      throw Error(ErrorCode::kOutOfRange,
                  "basis index " + std::to_string(idx) + " outside [0, " + std::to_string(K) + ")");
    }
    phi[idx] = 1.0;
    return phi;
  }
  // "re,im;re,im;..."
  std::vector<std::string> pairs;
  std::stringstream ss(spec);
  for (std::string item; std::getline(ss, item, ';');) pairs.push_back(item);
  if (pairs.size() != K) {
    throw Error(ErrorCode::kDimensionMismatch, "state spec has " + std::to_string(pairs.size()) +
                                                   " amplitudes, K = " + std::to_string(K));
  }
  for (std::size_t k = 0; k < K; ++k) {
    const auto comma = pairs[k].find(',');
    try {
      if (comma == std::string::npos) {
        phi[k] = std::stod(pairs[k]);
      } else {
        phi[k] = {std::stod(pairs[k].substr(0, comma)), std::stod(pairs[k].substr(comma + 1))};
      }
    } catch (const std::exception&) {
      throw Error(ErrorCode::kMalformedDocument, "bad amplitude '" + pairs[k] + "'");
    }
  }
  return phi;
}

std::string fmt(double v, int precision = 6) {
  std::ostringstream os;
  os << std::setprecision(precision) << v;
  return os.str();
}

std::string cell(const WeightDistribution& w, std::size_t d) {
  if (w.exact()) return to_string((*w.exact_values)[d]);
  return fmt(w[d], 10);
}

const char* mark(bool ok) { return ok ? "✓" : "✗"; }

// ---------------------------------------------------------------------------
// Commands. Each fills `report` (flattened into the top-level JSON object) and
// `text`, and returns the exit status.

struct Output {
  Json report;
  std::ostringstream text;
  std::vector<std::string> warnings;
};

int cmd_validate(const GlobalOptions& g, Output& o) {
  const CodeDocument doc = parse_code_file(read_file(g.file));
  const HybridCode code = std::holds_alternative<StabilizerSpec>(doc)
                              ? from_stabilizer(std::get<StabilizerSpec>(doc))
                              : std::get<HybridCode>(doc);
  const ValidationReport v = validate(code, g.tol);
  o.report["parameters"] = {{"q", code.q()}, {"n", code.n()}, {"K", code.K()}, {"M", code.M()}};
  o.report["valid"] = v.ok;
  o.report["max_gram_deviation"] = v.max_gram_deviation;
  o.report["max_cross_overlap"] = v.max_cross_overlap;
  Json violations = Json::array();
  for (const auto& x : v.violations) {
    violations.push_back({{"kind", x.kind == Violation::Kind::kFrameNotOrthonormal
                                       ? "frame_not_orthonormal"
                                       : "blocks_not_orthogonal"},
                          {"a", x.a},
                          {"b", x.b},
                          {"magnitude", x.magnitude},
                          {"description", x.describe()}});
  }
  o.report["violations"] = violations;
  o.text << "((" << code.n() << ", " << code.K() << ":" << code.M() << "))_" << code.q()
         << " hybrid code: " << (v.ok ? "valid" : "INVALID") << "\n";
  o.text << "  max Gram deviation   " << fmt(v.max_gram_deviation, 3) << "\n";
  o.text << "  max cross overlap    " << fmt(v.max_cross_overlap, 3) << "\n";
  for (const auto& x : v.violations) o.text << "  violation: " << x.describe() << "\n";
  return v.ok ? kExitOk : kExitViolation;
}

int cmd_enumerators(const GlobalOptions& g, const std::string& mode,
                    std::optional<std::size_t> max_weight, Output& o) {
  const HybridCode code = load_valid_code(g);
  EnumeratorOptions opts;
  opts.jobs = g.jobs;
  opts.max_weight = max_weight;
  opts.mode = mode == "definitional" ? EnumeratorMode::kDefinitional : EnumeratorMode::kSimplified;
  const Distributions dist = compute_distributions(code, opts);
  o.report["mode"] = mode;
  o.report["complete"] = dist.complete;
  o.report["distributions"] = {{"A", distribution_json(dist.A)},
                               {"B", distribution_json(dist.B)},
                               {"A_perp", distribution_json(dist.A_perp)},
                               {"C", distribution_json(dist.C)}};
  const std::size_t top = dist.A.values.size();
  if (dist.complete) {
    double sa = 0.0, sb = 0.0;
    for (std::size_t d = 0; d < top; ++d) {
      sa += dist.A[d];
      sb += dist.B[d];
    }
    const double ea = static_cast<double>(code.dim()) / static_cast<double>(code.K());
    const double eb = static_cast<double>(code.dim() * code.K() * code.M());
    const bool ok = std::abs(sa - ea) <= 1e-8 && std::abs(sb - eb) <= 1e-8;
    o.report["sum_rules"] = {{"A_sum", sa}, {"A_expected", ea}, {"B_sum", sb},
                             {"B_expected", eb}, {"ok", ok}};
    o.text << "sum rules: sum A = " << fmt(sa, 12) << " (expected " << fmt(ea, 12)
           << "), sum B = " << fmt(sb, 12) << " (expected " << fmt(eb, 12) << ") "
           << mark(ok) << "\n";
  } else {
    o.warnings.push_back("distributions truncated at weight " + std::to_string(top - 1) +
                         "; sum rules skipped");
  }
  std::ostringstream table;
  table << std::left << std::setw(4) << "d" << std::setw(16) << "A" << std::setw(16) << "B"
        << std::setw(16) << "A_perp" << std::setw(16) << "C" << "A=B\n";
  for (std::size_t d = 0; d < top; ++d) {
    table << std::setw(4) << d << std::setw(16) << cell(dist.A, d) << std::setw(16)
          << cell(dist.B, d) << std::setw(16) << cell(dist.A_perp, d) << std::setw(16)
          << cell(dist.C, d) << mark(std::abs(dist.A[d] - dist.B[d]) <= g.tol) << "\n";
  }
  o.text << table.str();
  return kExitOk;
}

int cmd_distance(const GlobalOptions& g, Output& o) {
  const HybridCode code = load_valid_code(g);
  const Distributions dist = compute_distributions(code, [&] {
    EnumeratorOptions opts;
    opts.jobs = g.jobs;
    return opts;
  }());
  const std::size_t dmin = min_detection_weight(dist.A, dist.B, g.tol);
  o.report["detection_distance"] = dmin;
  Json table = Json::array();
  o.text << "detection distance: " << dmin << "\n";
  o.text << std::left << std::setw(4) << "d" << std::setw(16) << "A" << std::setw(16) << "B"
         << "detects all\n";
  for (std::size_t d = 0; d <= code.n(); ++d) {
    const bool eq = std::abs(dist.A[d] - dist.B[d]) <= g.tol;
    table.push_back({{"d", d}, {"A", dist.A[d]}, {"B", dist.B[d]}, {"detects_all", eq}});
    o.text << std::setw(4) << d << std::setw(16) << cell(dist.A, d) << std::setw(16)
           << cell(dist.B, d) << mark(eq) << "\n";
  }
  o.report["table"] = table;
  return kExitOk;
}

int cmd_detect(const GlobalOptions& g, const std::string& error, std::optional<std::size_t> weight,
               std::size_t limit, Output& o) {
  const HybridCode code = load_valid_code(g);
  if (!error.empty()) {
    const DetectabilityReport r = detectability(code, PauliElement::parse(error, code.q()), g.tol);
    o.report["report"] = detectability_json(r);
    o.text << r.error << ": " << (r.detectable ? "detectable" : "NOT detectable") << "\n";
    if (r.detectable) {
      o.text << "  lambda =";
      for (const auto& l : r.lambdas) o.text << " " << fmt(l.real()) << (l.imag() < 0 ? "-" : "+")
                                              << fmt(std::abs(l.imag())) << "i";
      o.text << "\n";
    } else {
      o.text << "  witness block (b, a) = (" << r.witness->b << ", " << r.witness->a << ")\n";
    }
    o.text << "  max off-diagonal violation " << fmt(r.max_offdiag_violation, 3)
           << ", max diagonal violation " << fmt(r.max_diag_violation, 3) << "\n";
    return r.detectable ? kExitOk : kExitViolation;
  }
  const WeightDetectability w = all_detectable_of_weight(code, *weight, g.tol, g.jobs, limit);
  o.report["weight"] = w.weight;
  o.report["checked"] = w.checked;
  o.report["failures"] = w.failures;
  o.report["all_detectable"] = w.all_detectable;
  Json ce = Json::array();
  for (const auto& r : w.counterexamples) ce.push_back(detectability_json(r));
  o.report["counterexamples"] = ce;
  o.text << "weight " << w.weight << ": " << w.checked << " errors checked, " << w.failures
         << " not detectable " << mark(w.all_detectable) << "\n";
  for (const auto& r : w.counterexamples) {
    o.text << "  " << r.error << " witness (" << r.witness->b << ", " << r.witness->a << ")\n";
  }
  return w.all_detectable ? kExitOk : kExitViolation;
}

int cmd_correctable(const GlobalOptions& g, const std::string& list, Output& o) {
  const HybridCode code = load_valid_code(g);
  std::vector<PauliElement> errors;
  for (const auto& item : split_error_list(list)) errors.push_back(PauliElement::parse(item, code.q()));
  if (errors.empty()) throw Error(ErrorCode::kMalformedDocument, "empty error list");
  const CorrectabilityReport r = is_correctable_set(code, errors, g.tol);
  if (!r.contains_identity) {
    o.warnings.push_back("error set does not contain the identity; the criterion is stated for "
                         "unital sets");
  }
  Json names = Json::array();
  for (const auto& e : errors) names.push_back(e.to_string());
  o.report["errors"] = names;
  o.report["correctable"] = r.correctable;
  o.report["contains_identity"] = r.contains_identity;
  if (r.witness) {
    o.report["witness"] = {{"F", r.witness->first.to_string()},
                           {"E", r.witness->second.to_string()},
                           {"product", compose_adjoint_left(r.witness->first, r.witness->second)
                                           .to_string()},
                           {"report", detectability_json(*r.witness_report)}};
  } else {
    o.report["witness"] = nullptr;
  }
  o.text << "error set is " << (r.correctable ? "correctable" : "NOT correctable") << "\n";
  if (r.witness) {
    o.text << "  witness: F = " << r.witness->first.to_string()
           << ", E = " << r.witness->second.to_string() << " (F*E not detectable)\n";
  }
  return r.correctable ? kExitOk : kExitViolation;
}

int cmd_dimension(const GlobalOptions& g, bool numeric, Output& o) {
  const HybridCode code = load_valid_code(g);
  const DimensionFormula f = detectable_dimension_formula(code.n(), code.K(), code.M(), code.q());
  o.report["formula"] = f.hybrid_dim;
  o.report["quantum"] = f.quantum_dim;
  o.report["difference"] = f.hybrid_dim - f.quantum_dim;
  o.text << "detectable-error space dimension: " << f.hybrid_dim << " (quantum code of dimension "
         << code.K() * code.M() << ": " << f.quantum_dim << ")\n";
  int status = kExitOk;
  if (numeric) {
    const std::int64_t num = detectable_dimension_numeric(code, g.tol);
    o.report["numeric"] = num;
    o.report["numeric_matches"] = num == f.hybrid_dim;
    o.text << "numeric nullspace dimension: " << num << " " << mark(num == f.hybrid_dim) << "\n";
    if (num != f.hybrid_dim) status = kExitViolation;
  }
  return status;
}

int cmd_simulate(const GlobalOptions& g, std::size_t message, const std::string& state,
                 const std::string& error, std::size_t trials, std::uint64_t seed, Output& o) {
  const HybridCode code = load_valid_code(g);
  const CVector phi = parse_state_spec(state, code.K());
  const PauliElement e = PauliElement::parse(error, code.q());
  const TransmissionTally t = simulate_transmission(code, message, phi, e, trials, seed);
  const bool detectable = detectability(code, e, g.tol).detectable;
  o.report["message"] = t.message;
  o.report["error"] = e.to_string();
  o.report["error_detectable"] = detectable;
  o.report["trials"] = t.trials;
  o.report["seed"] = seed;
  Json counts = Json::object();
  Json probs = Json::object();
  counts["eps"] = t.counts[0];
  probs["eps"] = t.probabilities[0];
  for (std::size_t m = 1; m < t.counts.size(); ++m) {
    counts[std::to_string(m)] = t.counts[m];
    probs[std::to_string(m)] = t.probabilities[m];
  }
  o.report["counts"] = counts;
  o.report["probabilities"] = probs;
  o.report["wrong_message_count"] = t.wrong_message_count;
  o.report["fidelity"] = t.fidelity ? Json(*t.fidelity) : Json(nullptr);
  o.text << "sent message " << t.message << " through " << e.to_string() << " ("
         << (detectable ? "detectable" : "not detectable") << "), " << t.trials << " trials\n";
  o.text << "  eps: " << t.counts[0] << "\n";
  for (std::size_t m = 1; m < t.counts.size(); ++m) {
    o.text << "  " << m << ": " << t.counts[m] << (m == message ? " (sent)" : "") << "\n";
  }
  if (t.fidelity) o.text << "  fidelity of decoded state: " << fmt(*t.fidelity, 12) << "\n";
  return kExitOk;
}

int cmd_identities(const GlobalOptions& g, Output& o) {
  const HybridCode code = load_valid_code(g);
  const IdentityReport r = verify_identities(code, g.tol, g.jobs);
  const bool ok = r.macwilliams_residual <= 1e-6 && r.additivity_residual <= g.tol &&
                  r.c_nonneg_ok && r.c_zero_below_distance && r.detectability_equivalence_ok;
  o.report["macwilliams_residual"] = r.macwilliams_residual;
  o.report["additivity_residual"] = r.additivity_residual;
  o.report["c_nonneg_ok"] = r.c_nonneg_ok;
  o.report["c_zero_below_distance"] = r.c_zero_below_distance;
  o.report["usual_macwilliams_holds"] = r.usual_macwilliams_holds;
  o.report["detectability_equivalence_ok"] = r.detectability_equivalence_ok;
  o.report["detection_distance"] = r.detection_distance;
  o.report["A_perp_transform"] = distribution_json(r.A_perp_transform);
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    rows.push_back({{"d", row.d},
                    {"A", row.A},
                    {"B", row.B},
                    {"A_perp", row.A_perp},
                    {"A_perp_transform", row.A_perp_transform},
                    {"C", row.C},
                    {"weights_equal", row.weights_equal},
                    {"all_detectable", row.all_detectable}});
  }
  o.report["rows"] = rows;
  o.text << "B(z) = A_perp(z) + C(z): residual " << fmt(r.additivity_residual, 3) << "\n";
  o.text << "A_perp from transform of A: residual " << fmt(r.macwilliams_residual, 3) << "\n";
  o.text << "C >= 0: " << mark(r.c_nonneg_ok) << "   C = 0 below detection distance "
         << r.detection_distance << ": " << mark(r.c_zero_below_distance) << "\n";
  o.text << "unrelaxed identity B = transform(A): "
         << (r.usual_macwilliams_holds ? "holds" : "fails") << "\n";
  o.text << std::left << std::setw(4) << "d" << std::setw(14) << "A" << std::setw(14) << "B"
         << std::setw(14) << "A_perp" << std::setw(14) << "transform" << std::setw(14) << "C"
         << "A=B  detects\n";
  for (const auto& row : r.rows) {
    o.text << std::setw(4) << row.d << std::setw(14) << fmt(row.A, 8) << std::setw(14)
           << fmt(row.B, 8) << std::setw(14) << fmt(row.A_perp, 8) << std::setw(14)
           << fmt(row.A_perp_transform, 8) << std::setw(14) << fmt(row.C, 8) << mark(row.weights_equal)
           << "    " << mark(row.all_detectable) << "\n";
  }
  return ok ? kExitOk : kExitViolation;
}

double default_tolerance(std::ostream& err) {
  if (const char* env = std::getenv("HYBRIDEC_TOL")) {
    try {
      std::size_t used = 0;
      const double v = std::stod(env, &used);
      if (used == std::string(env).size() && v > 0.0) return v;
    } catch (const std::exception&) {
    }
    err << "warning: ignoring invalid HYBRIDEC_TOL='" << env << "'\n";
  }
  return kMatrixTol;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hybrid classical-quantum code analysis", "hybridec"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions g;
  g.tol = default_tolerance(err);
  app.add_option("--format", g.format, "Report format")
      ->check(CLI::IsMember({"json", "text"}));
  app.add_option("--tol", g.tol, "Comparison tolerance (default 1e-9, env HYBRIDEC_TOL)")
      ->check(CLI::PositiveNumber);
  app.add_option("--jobs", g.jobs, "Worker threads for enumerations")->check(CLI::PositiveNumber);

  auto* validate_cmd = app.add_subcommand("validate", "Check code invariants");
  auto* enum_cmd = app.add_subcommand("enumerators", "Weight distributions A, B, A_perp, C");
  auto* dist_cmd = app.add_subcommand("distance", "Detection distance");
  auto* detect_cmd = app.add_subcommand("detect", "Detectability of one error or a weight class");
  auto* corr_cmd = app.add_subcommand("correctable", "Correctability of an error set");
  auto* dim_cmd = app.add_subcommand("dimension", "Dimension of the detectable-error space");
  auto* sim_cmd = app.add_subcommand("simulate", "Encode, apply an error, measure");
  auto* id_cmd = app.add_subcommand("identities", "Relaxed MacWilliams identity report");
  for (auto* sub : {validate_cmd, enum_cmd, dist_cmd, detect_cmd, corr_cmd, dim_cmd, sim_cmd, id_cmd}) {
    sub->add_option("file", g.file, "Code document (JSON)")->required();
  }

  std::string mode = "simplified";
  std::optional<std::size_t> max_weight;
  enum_cmd->add_option("--mode", mode)->check(CLI::IsMember({"definitional", "simplified"}));
  enum_cmd->add_option("--max-weight", max_weight);

  std::string error_str;
  std::optional<std::size_t> weight;
  std::size_t limit = 16;
  auto* err_opt = detect_cmd->add_option("--error", error_str, "Error in text form");
  auto* weight_opt = detect_cmd->add_option("--weight", weight, "Check every error of this weight");
  err_opt->excludes(weight_opt);
  detect_cmd->add_option("--limit", limit, "Maximum counterexamples listed");

  std::string error_list;
  corr_cmd->add_option("--errors", error_list, "Comma-separated errors")->required();

  bool numeric = false;
  dim_cmd->add_flag("--numeric", numeric, "Cross-check by nullspace computation");

  std::size_t message = 1;
  std::string state;
  std::string sim_error;
  std::size_t trials = 1000;
  std::uint64_t seed = 1;
  sim_cmd->add_option("--message", message)->required();
  sim_cmd->add_option("--state", state, "basis:i or re,im;re,im;...")->required();
  sim_cmd->add_option("--error", sim_error)->required();
  sim_cmd->add_option("--trials", trials)->check(CLI::PositiveNumber);
  sim_cmd->add_option("--seed", seed);

  std::vector<std::string> argv_tail(args.begin() + (args.empty() ? 0 : 1), args.end());
  std::reverse(argv_tail.begin(), argv_tail.end());
  try {
    app.parse(argv_tail);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
  if (detect_cmd->parsed() && error_str.empty() && !weight) {
    err << "error: detect needs --error or --weight\n";
    return kExitBadInput;
  }

  Output o;
  int status = kExitOk;
  const auto start = std::chrono::steady_clock::now();
  std::string command;
  try {
    if (validate_cmd->parsed()) {
      command = "validate";
      status = cmd_validate(g, o);
    } else if (enum_cmd->parsed()) {
      command = "enumerators";
      status = cmd_enumerators(g, mode, max_weight, o);
    } else if (dist_cmd->parsed()) {
      command = "distance";
      status = cmd_distance(g, o);
    } else if (detect_cmd->parsed()) {
      command = "detect";
      status = cmd_detect(g, error_str, weight, limit, o);
    } else if (corr_cmd->parsed()) {
      command = "correctable";
      status = cmd_correctable(g, error_list, o);
    } else if (dim_cmd->parsed()) {
      command = "dimension";
      status = cmd_dimension(g, numeric, o);
    } else if (sim_cmd->parsed()) {
      command = "simulate";
      status = cmd_simulate(g, message, state, sim_error, trials, seed, o);
    } else {
      command = "identities";
      status = cmd_identities(g, o);
    }
  } catch (const Error& e) {
    err << "error [" << error_code_name(e.code()) << "]: " << e.what() << "\n";
    return e.code() == ErrorCode::kGuardExceeded ? kExitGuard : kExitBadInput;
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  if (g.format == "json") {
    // Timing and the job count are left out so the bytes depend only on the inputs.
    Json report;
    report["command"] = command;
    report["inputs"] = {{"file", g.file}, {"tol", g.tol}};
    if (enum_cmd->parsed()) {
      report["inputs"]["mode"] = mode;
      report["inputs"]["max_weight"] = max_weight ? Json(*max_weight) : Json(nullptr);
    }
    if (sim_cmd->parsed()) {
      report["inputs"]["state"] = state;
    }
    for (auto it = o.report.begin(); it != o.report.end(); ++it) report[it.key()] = it.value();
    report["warnings"] = o.warnings;
    report["exit_code"] = status;
    emit(report, out, 0);
    out << "\n";
  } else {
    out << o.text.str();
    for (const auto& w : o.warnings) out << "warning: " << w << "\n";
    out << "(" << command << " finished in " << fmt(seconds, 3) << " s)\n";
  }
  return status;
}

}  // namespace hybridec::cli
