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

#include "hybridec/enumerators.h"

#include <algorithm>
#include <array>
#include <cmath>

#include "hybridec/error.h"
#include "hybridec/parallel.h"

namespace hybridec {
namespace {

EnumeratorOptions with_mode(EnumeratorMode mode) {
  EnumeratorOptions o;
  o.mode = mode;
  return o;
}

EnumeratorOptions with_jobs(unsigned jobs) {
  EnumeratorOptions o;
  o.jobs = jobs;
  return o;
}

constexpr std::size_t kFullEnumerationGuard = std::size_t{1} << 16;  // 4^8
constexpr std::size_t kDefinitionalDimGuard = 64;
constexpr double kSnapTol = 1e-6;

// Per-element contributions before normalization.
struct Contribution {
  double a = 0.0;       // sum_a |Tr(P_a E)|^2 (or sum_{a,b} |Tr(P_b E P_a)|^2)
  double b = 0.0;       // sum_{a,b} Tr(P_b E P_a E^*)
  double a_perp = 0.0;  // a == b part of b
  double c = 0.0;       // a != b part of b
};

Contribution simplified_contribution(const HybridCode& code, const PauliElement& e, Complex phase) {
  std::vector<CMatrix> blocks = block_elements(code, e);
  const std::size_t M = code.M();
  Contribution out;
  for (std::size_t a = 0; a < M; ++a) {
    for (std::size_t b = 0; b < M; ++b) {
      CMatrix& blk = blocks[b * M + a];
      if (phase != Complex(1.0)) blk *= phase;
      double frob = 0.0;
      for (const auto& x : blk.entries()) frob += std::norm(x);
      out.b += frob;
      if (a == b) {
        out.a += std::norm(blk.trace());
        out.a_perp += frob;
      } else {
        out.c += frob;
      }
    }
  }
  return out;
}

Contribution definitional_contribution(const std::vector<CMatrix>& projectors, const CMatrix& e,
                                       double K) {
  const CMatrix e_star = adjoint(e);
  Contribution out;
  const std::size_t M = projectors.size();
  for (std::size_t a = 0; a < M; ++a) {
    const CMatrix e_pa = mat_mul(e, projectors[a]);
    const double tr_pa = projectors[a].trace().real();
    for (std::size_t b = 0; b < M; ++b) {
      const CMatrix x = mat_mul(projectors[b], e_pa);  // P_b E P_a
      out.a += std::norm(x.trace());
      // Tr(X X^*) Tr(P_a) / K, so that the common 1/(K^2 M) factor yields 1/(KM).
      out.b += trace_product(x, adjoint(x)).real() * tr_pa / K;
      const double t = trace_product(x, e_star).real();  // Tr(P_b E P_a E^*)
      if (a == b) {
        out.a_perp += t;
      } else {
        out.c += t;
      }
    }
  }
  return out;
}

WeightDistribution make_distribution(DistributionKind kind, std::vector<double> values,
                                     const BigInt& denominator) {
  WeightDistribution dist;
  dist.kind = kind;
  dist.exact_values = snap_to_rationals(values, denominator);
  dist.values = std::move(values);
  return dist;
}

}  // namespace

const char* distribution_name(DistributionKind kind) {
  switch (kind) {
    case DistributionKind::kA: return "A";
    case DistributionKind::kB: return "B";
    case DistributionKind::kAPerp: return "A_perp";
    case DistributionKind::kC: return "C";
  }
  return "?";
}

std::optional<std::vector<Rational>> snap_to_rationals(const std::vector<double>& values,
                                                       const BigInt& denominator) {
  std::vector<Rational> out;
  out.reserve(values.size());
  const double den = static_cast<double>(denominator);
  for (double v : values) {
    if (!std::isfinite(v)) return std::nullopt;
    const double numer = std::round(v * den);
    if (std::abs(v - numer / den) > kSnapTol) return std::nullopt;
    out.emplace_back(BigInt(static_cast<long long>(numer)), denominator);
  }
  return out;
}

bool within_full_enumeration_guard(unsigned q, std::size_t n) {
  std::size_t count = 1;
  for (std::size_t i = 0; i < n; ++i) {
    count *= static_cast<std::size_t>(q) * q;
    if (count > kFullEnumerationGuard) return false;
  }
  return true;
}

Distributions compute_distributions(const HybridCode& code, const EnumeratorOptions& options) {
  const std::size_t n = code.n();
  std::size_t top = n;
  if (options.max_weight) {
    top = std::min(n, *options.max_weight);
  } else if (!within_full_enumeration_guard(code.q(), n)) {
    throw Error(ErrorCode::kGuardExceeded,
                "full enumeration needs q^(2n) <= 4^8 error basis elements; pass a maximum weight");
  }
  const bool definitional = options.mode == EnumeratorMode::kDefinitional;
  if (definitional && code.dim() > kDefinitionalDimGuard) {
    throw Error(ErrorCode::kGuardExceeded, "definitional mode requires q^n <= " +
                                               std::to_string(kDefinitionalDimGuard));
  }
  std::vector<CMatrix> projectors;
  if (definitional) {
    for (const auto& blk : code.blocks()) projectors.push_back(projector(blk));
  }

  const double K = static_cast<double>(code.K());
  const double M = static_cast<double>(code.M());
  std::vector<double> A(top + 1), B(top + 1), Ap(top + 1), C(top + 1);
  for (std::size_t d = 0; d <= top; ++d) {
    const WeightedPauliSet set = enumerate_weight(code.q(), n, d);
    std::vector<Contribution> parts(set.size());
    parallel_for(set.size(), options.jobs, [&](std::size_t begin, std::size_t end) {
      for (std::size_t k = begin; k < end; ++k) {
        const PauliElement e = set[k];
        const Complex phase = options.phase ? options.phase(e) : Complex(1.0);
        if (definitional) {
          CMatrix dense = realize(e);
          if (phase != Complex(1.0)) dense *= phase;
          parts[k] = definitional_contribution(projectors, dense, K);
        } else {
          parts[k] = simplified_contribution(code, e, phase);
        }
      }
    });
    Contribution sum;
    for (const auto& p : parts) {
      sum.a += p.a;
      sum.b += p.b;
      sum.a_perp += p.a_perp;
      sum.c += p.c;
    }
    A[d] = sum.a / (K * K * M);
    B[d] = sum.b / (K * M);
    Ap[d] = sum.a_perp / (K * M);
    C[d] = sum.c / (K * M);
  }
  const BigInt KM = BigInt(code.K()) * code.M();
  const BigInt KKM = KM * code.K();
  Distributions out;
  out.A = make_distribution(DistributionKind::kA, std::move(A), KKM);
  out.B = make_distribution(DistributionKind::kB, std::move(B), KM);
  out.A_perp = make_distribution(DistributionKind::kAPerp, std::move(Ap), KM);
  out.C = make_distribution(DistributionKind::kC, std::move(C), KM);
  out.complete = top == n;
  return out;
}

WeightDistribution weights_A(const HybridCode& code, EnumeratorMode mode) {
  return compute_distributions(code, with_mode(mode)).A;
}

WeightDistribution weights_B(const HybridCode& code, EnumeratorMode mode) {
  return compute_distributions(code, with_mode(mode)).B;
}

WeightDistribution weights_A_perp(const HybridCode& code) {
  return compute_distributions(code).A_perp;
}

WeightDistribution weights_C(const HybridCode& code, CMode mode) {
  Distributions all = compute_distributions(code);
  if (mode == CMode::kDirect) return std::move(all.C);
  std::vector<double> diff(all.B.values.size());
  for (std::size_t d = 0; d < diff.size(); ++d) diff[d] = all.B[d] - all.A_perp[d];
  return make_distribution(DistributionKind::kC, std::move(diff),
                           BigInt(code.K()) * code.M());
}

WeightDistribution macwilliams_of_A(const WeightDistribution& A, std::size_t K, std::size_t n,
                                    unsigned q) {
  if (A.values.size() != n + 1) {
    throw Error(ErrorCode::kOutOfRange, "macwilliams_of_A: need all n + 1 coefficients of A");
  }
  const RationalPolynomial a =
      A.exact() ? RationalPolynomial(*A.exact_values) : RationalPolynomial::from_doubles(A.values);
  const Rational scale(BigInt(K), BigInt(ambient_dim(q, n)));
  const RationalPolynomial t =
      poly_substitute_macwilliams(a, static_cast<unsigned>(n), q, scale);
  WeightDistribution out;
  out.kind = DistributionKind::kAPerp;
  out.values = t.to_doubles(n);
  if (A.exact()) out.exact_values = t.padded(n);
  return out;
}

WeightDistribution macwilliams_of_A(const HybridCode& code) {
  return macwilliams_of_A(weights_A(code), code.K(), code.n(), code.q());
}

std::size_t min_detection_weight(const WeightDistribution& A, const WeightDistribution& B,
                                 double tol) {
  const std::size_t len = std::min(A.values.size(), B.values.size());
  for (std::size_t d = 1; d < len; ++d) {
    if (std::abs(A[d] - B[d]) > tol) return d;
  }
  return len;
}

std::size_t min_detection_weight(const HybridCode& code, double tol) {
  const Distributions all = compute_distributions(code);
  return min_detection_weight(all.A, all.B, tol);
}

IdentityReport verify_identities(const HybridCode& code, double tol, unsigned jobs) {
  IdentityReport report;
  report.distributions = compute_distributions(code, with_jobs(jobs));
  const Distributions& dist = report.distributions;
  report.A_perp_transform = macwilliams_of_A(dist.A, code.K(), code.n(), code.q());
  report.detection_distance = min_detection_weight(dist.A, dist.B, tol);
  double usual_residual = 0.0;
  for (std::size_t d = 0; d <= code.n(); ++d) {
    IdentityRow row;
    row.d = d;
    row.A = dist.A[d];
    row.B = dist.B[d];
    row.A_perp = dist.A_perp[d];
    row.A_perp_transform = report.A_perp_transform[d];
    row.C = dist.C[d];
    row.weights_equal = std::abs(row.A - row.B) <= tol;
    row.all_detectable = all_detectable_of_weight(code, d, tol, jobs, 1).all_detectable;
    report.macwilliams_residual =
        std::max(report.macwilliams_residual, std::abs(row.A_perp - row.A_perp_transform));
    report.additivity_residual =
        std::max(report.additivity_residual, std::abs(row.B - row.A_perp - row.C));
    usual_residual = std::max(usual_residual, std::abs(row.B - row.A_perp_transform));
    if (row.C < -tol) report.c_nonneg_ok = false;
    if (d < report.detection_distance && row.C > tol) report.c_zero_below_distance = false;
    if (row.weights_equal != row.all_detectable) report.detectability_equivalence_ok = false;
    report.rows.push_back(row);
  }
  report.usual_macwilliams_holds = usual_residual <= 1e-6;
  return report;
}

}  // namespace hybridec
