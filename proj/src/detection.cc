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

#include "hybridec/detection.h"

#include <algorithm>
#include <cmath>
#include <random>

#include "hybridec/error.h"
#include "hybridec/kernels.h"
#include "hybridec/parallel.h"

namespace hybridec {
namespace {

constexpr std::size_t kNumericDimensionGuard = 16;

struct BlockScan {
  std::vector<Complex> lambdas;
  double max_offdiag = 0.0;
  double max_diag = 0.0;
  std::optional<BlockPair> witness;
};

BlockScan scan_blocks(const std::vector<CMatrix>& blocks, std::size_t M, double tol) {
  BlockScan scan;
  scan.lambdas.resize(M);
  for (std::size_t a = 0; a < M; ++a) {
    for (std::size_t b = 0; b < M; ++b) {
      const CMatrix& blk = blocks[b * M + a];
      double violation = 0.0;
      if (a == b) {
        Complex lambda = blk.trace() / static_cast<double>(blk.rows());
        for (std::size_t j = 0; j < blk.rows(); ++j) {
          for (std::size_t i = 0; i < blk.cols(); ++i) {
            violation = std::max(violation, std::abs(blk(j, i) - (i == j ? lambda : Complex(0.0))));
          }
        }
        scan.lambdas[a] = lambda;
        scan.max_diag = std::max(scan.max_diag, violation);
      } else {
        violation = max_abs(blk);
        scan.max_offdiag = std::max(scan.max_offdiag, violation);
      }
      if (violation > tol && !scan.witness) scan.witness = BlockPair{b + 1, a + 1};
    }
  }
  return scan;
}

void require_unit(std::span<const Complex> v, const char* op) {
  if (std::abs(norm(v) - 1.0) > 1e-10) {
    throw Error(ErrorCode::kNonUnitState, std::string(op) + ": state is not a unit vector");
  }
}

}  // namespace

CVector apply_error(const ErrorOperator& error, std::span<const Complex> v) {
  if (const auto* p = std::get_if<PauliElement>(&error)) return apply_to_state(*p, v);
  return mat_vec(std::get<CMatrix>(error), v);
}

std::string error_label(const ErrorOperator& error) {
  if (const auto* p = std::get_if<PauliElement>(&error)) return p->to_string();
  const auto& m = std::get<CMatrix>(error);
  return "matrix(" + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + ")";
}

std::vector<CMatrix> block_elements(const HybridCode& code, const ErrorOperator& error) {
  if (const auto* m = std::get_if<CMatrix>(&error)) {
    if (m->rows() != code.dim() || m->cols() != code.dim()) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "error operator is " + std::to_string(m->rows()) + "x" +
                      std::to_string(m->cols()) + ", code acts on dimension " +
                      std::to_string(code.dim()));
    }
  } else if (const auto* p = std::get_if<PauliElement>(&error)) {
    if (p->q() != code.q() || p->n() != code.n()) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "error " + p->to_string() + " does not match code parameters");
    }
  }
  const std::size_t M = code.M();
  const std::size_t K = code.K();
  const std::size_t dim = code.dim();
  const auto& kern = kernels::active();
  std::vector<CMatrix> blocks(M * M, CMatrix(K, K));
  for (std::size_t a = 0; a < M; ++a) {
    for (std::size_t i = 0; i < K; ++i) {
      const CVector w = apply_error(error, code.block(a).frame[i]);
      for (std::size_t b = 0; b < M; ++b) {
        for (std::size_t j = 0; j < K; ++j) {
          blocks[b * M + a](j, i) = kern.cdot(code.block(b).frame[j].data(), w.data(), dim);
        }
      }
    }
  }
  return blocks;
}

DetectabilityReport detectability(const HybridCode& code, const ErrorOperator& error, double tol) {
  BlockScan scan = scan_blocks(block_elements(code, error), code.M(), tol);
  DetectabilityReport report;
  report.error = error_label(error);
  report.max_offdiag_violation = scan.max_offdiag;
  report.max_diag_violation = scan.max_diag;
  report.detectable = !scan.witness.has_value();
  report.witness = scan.witness;
  if (report.detectable) report.lambdas = std::move(scan.lambdas);
  return report;
}

WeightDetectability all_detectable_of_weight(const HybridCode& code, std::size_t d, double tol,
                                             unsigned jobs, std::size_t counterexample_limit) {
  const WeightedPauliSet set = enumerate_weight(code.q(), code.n(), d);
  std::vector<char> ok(set.size(), 0);
  parallel_for(set.size(), jobs, [&](std::size_t begin, std::size_t end) {
    for (std::size_t k = begin; k < end; ++k) {
      ok[k] = detectability(code, set[k], tol).detectable ? 1 : 0;
    }
  });
  WeightDetectability result;
  result.weight = d;
  result.checked = set.size();
  for (std::size_t k = 0; k < set.size(); ++k) {
    if (ok[k]) continue;
    ++result.failures;
    if (result.counterexamples.size() < counterexample_limit) {
      result.counterexamples.push_back(detectability(code, set[k], tol));
    }
  }
  result.all_detectable = result.failures == 0;
  return result;
}

CorrectabilityReport is_correctable_set(const HybridCode& code,
                                        const std::vector<PauliElement>& errors, double tol) {
  CorrectabilityReport report;
  report.contains_identity =
      std::any_of(errors.begin(), errors.end(), [](const PauliElement& e) { return e.is_identity(); });
  for (const auto& f : errors) {
    for (const auto& e : errors) {
      DetectabilityReport r = detectability(code, compose_adjoint_left(f, e), tol);
      if (!r.detectable) {
        report.correctable = false;
        report.witness.emplace(f, e);
        report.witness_report = std::move(r);
        return report;
      }
    }
  }
  return report;
}

DimensionFormula detectable_dimension_formula(std::size_t n, std::size_t K, std::size_t M,
                                              unsigned q) {
  if (n < 1 || K < 1 || M < 1 || q < 2) {
    throw Error(ErrorCode::kOutOfRange, "dimension formula: need n, K, M >= 1 and q >= 2");
  }
  const std::size_t dim = ambient_dim(q, n);
  if (dim > (std::size_t{1} << 31)) throw Error(ErrorCode::kGuardExceeded, "q^n too large");
  if (M * K > dim) throw Error(ErrorCode::kOutOfRange, "dimension formula: MK exceeds q^n");
  const auto total = static_cast<std::int64_t>(dim) * static_cast<std::int64_t>(dim);
  const auto used = static_cast<std::int64_t>(M * K) * static_cast<std::int64_t>(M * K);
  return {total - used + static_cast<std::int64_t>(M), total - used + 1};
}

std::int64_t detectable_dimension_numeric(const HybridCode& code, double tol) {
  const std::size_t dim = code.dim();
  if (dim > kNumericDimensionGuard) {
    throw Error(ErrorCode::kGuardExceeded, "numeric dimension requires q^n <= " +
                                               std::to_string(kNumericDimensionGuard) +
                                               ", got " + std::to_string(dim));
  }
  const std::size_t M = code.M();
  const std::size_t K = code.K();
  // Unknowns are the entries E(r, c), column r * dim + c. Each condition is a
  // linear functional sum_{r,c} coeff(r, c) E(r, c).
  auto functional = [&](std::size_t b, std::size_t j, std::size_t a, std::size_t i) {
    CVector row(dim * dim);
    const auto& u = code.block(b).frame[j];
    const auto& v = code.block(a).frame[i];
    for (std::size_t r = 0; r < dim; ++r) {
      for (std::size_t c = 0; c < dim; ++c) row[r * dim + c] = std::conj(u[r]) * v[c];
    }
    return row;
  };
  std::vector<CVector> rows;
  for (std::size_t a = 0; a < M; ++a) {
    for (std::size_t b = 0; b < M; ++b) {
      for (std::size_t j = 0; j < K; ++j) {
        for (std::size_t i = 0; i < K; ++i) {
          if (a != b || i != j) {
            rows.push_back(functional(b, j, a, i));
          } else if (i > 0) {
            // diagonal entries all equal the (0, 0) entry
            CVector row = functional(a, i, a, i);
            const CVector first = functional(a, 0, a, 0);
            for (std::size_t k = 0; k < row.size(); ++k) row[k] -= first[k];
            rows.push_back(std::move(row));
          }
        }
      }
    }
  }
  std::int64_t rank = 0;
  if (!rows.empty()) {
    CMatrix system(rows.size(), dim * dim);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      std::copy(rows[r].begin(), rows[r].end(), system.entries().begin() + r * dim * dim);
    }
    rank = static_cast<std::int64_t>(numeric_rank(system, tol));
  }
  return static_cast<std::int64_t>(dim * dim) - rank;
}

OperatorSystemDecomposition operator_system_decompose(const HybridCode& code, const CMatrix& error,
                                                      double tol) {
  const DetectabilityReport check = detectability(code, error, tol);
  if (!check.detectable) {
    throw Error(ErrorCode::kNotDetectable, "operator_system_decompose: error is not detectable");
  }
  const std::size_t dim = code.dim();
  const CMatrix id = CMatrix::identity(dim);
  const CMatrix star = adjoint(error);
  OperatorSystemDecomposition out;
  out.real_part = Complex(0.5) * (error + star);
  out.imag_part = Complex(0.0, 0.5) * (star - error);
  out.real_norm = operator_norm(out.real_part);
  out.imag_norm = operator_norm(out.imag_part);
  out.parts = {Complex(out.real_norm) * id, Complex(out.real_norm) * id - out.real_part,
               Complex(out.imag_norm) * id, Complex(out.imag_norm) * id - out.imag_part};
  out.coefficients = {Complex(1.0), Complex(-1.0), Complex(0.0, 1.0), Complex(0.0, -1.0)};
  CMatrix sum(dim, dim);
  for (std::size_t k = 0; k < 4; ++k) {
    out.part_detectable[k] = detectability(code, out.parts[k], tol).detectable;
    out.part_positive[k] = min_hermitian_eigenvalue(out.parts[k]) >= -tol &&
                           max_abs_diff(out.parts[k], adjoint(out.parts[k])) <= tol;
    sum += out.coefficients[k] * out.parts[k];
  }
  out.recombination_error = max_abs_diff(sum, error);
  return out;
}

std::vector<MeasurementOutcome> measure(const HybridCode& code, std::span<const Complex> state) {
  if (state.size() != code.dim()) {
    throw Error(ErrorCode::kDimensionMismatch, "measure: state dimension mismatch");
  }
  require_unit(state, "measure");
  const auto& kern = kernels::active();
  const std::size_t dim = code.dim();
  std::vector<MeasurementOutcome> outcomes(code.M() + 1);
  CVector residual(state.begin(), state.end());
  auto finish = [](MeasurementOutcome& o, CVector projected) {
    const double nrm = norm(projected);
    o.probability = nrm * nrm;
    if (o.probability >= 1e-15) {
      for (auto& x : projected) x /= nrm;
      o.post_state = std::move(projected);
    }
  };
  for (std::size_t m = 1; m <= code.M(); ++m) {
    CVector projected(dim);
    for (const auto& f : code.block(m - 1).frame) {
      const Complex c = kern.cdot(f.data(), state.data(), dim);
      kern.caxpy(c, f.data(), projected.data(), dim);
    }
    kern.caxpy(Complex(-1.0), projected.data(), residual.data(), dim);
    outcomes[m].label = m;
    finish(outcomes[m], std::move(projected));
  }
  outcomes[0].label = 0;
  finish(outcomes[0], std::move(residual));
  return outcomes;
}

TransmissionTally simulate_transmission(const HybridCode& code, std::size_t m,
                                        std::span<const Complex> phi, const ErrorOperator& error,
                                        std::size_t trials, std::uint64_t seed) {
  if (trials < 1) throw Error(ErrorCode::kOutOfRange, "simulate_transmission: trials must be >= 1");
  const CVector sent = encode(code, m, phi);
  CVector received = apply_error(error, sent);
  const double nrm = norm(received);
  if (nrm < 1e-15) {
    throw Error(ErrorCode::kInvariantViolation,
                "simulate_transmission: the error annihilates the encoded state");
  }
  for (auto& x : received) x /= nrm;
  const auto outcomes = measure(code, received);

  TransmissionTally tally;
  tally.message = m;
  tally.trials = trials;
  tally.counts.assign(outcomes.size(), 0);
  for (const auto& o : outcomes) tally.probabilities.push_back(o.probability);
  if (!outcomes[m].post_state.empty()) {
    tally.fidelity = std::norm(inner(sent, outcomes[m].post_state));
  }

  std::mt19937_64 rng(seed);
  for (std::size_t t = 0; t < trials; ++t) {
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    double cumulative = 0.0;
    std::size_t label = outcomes.size() - 1;
    // Messages first, then the error flag. Outcomes below the 1e-15 floor are
    // impossible; the last possible bucket absorbs rounding.
    std::size_t last_nonzero = 0;
    bool chosen = false;
    for (std::size_t k = 1; k <= outcomes.size(); ++k) {
      const std::size_t idx = k % outcomes.size();
      if (outcomes[idx].post_state.empty()) continue;
      last_nonzero = idx;
      cumulative += outcomes[idx].probability;
      if (u < cumulative) {
        label = idx;
        chosen = true;
        break;
      }
    }
    if (!chosen) label = last_nonzero;
    ++tally.counts[label];
  }
  for (std::size_t k = 1; k < tally.counts.size(); ++k) {
    if (k != m) tally.wrong_message_count += tally.counts[k];
  }
  return tally;
}

}  // namespace hybridec
