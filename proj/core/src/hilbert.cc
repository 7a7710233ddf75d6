// Copyright 2026 The RQG Authors
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

#include "rqg/hilbert.h"

#include <cmath>
#include <string>

#include "rqg/error.h"

namespace rqg {
namespace {

void CheckDims(int proposer_dim, int responder_dim) {
  if (proposer_dim < 2 || responder_dim < 2) {
    throw Error(ErrorKind::kInvalidDimensions,
                "basis sizes must be at least 2, got " +
                    std::to_string(proposer_dim) + "x" +
                    std::to_string(responder_dim));
  }
}

void CheckIndex(BasisIndex index, int proposer_dim, int responder_dim) {
  if (index.proposer < 0 || index.proposer >= proposer_dim ||
      index.responder < 0 || index.responder >= responder_dim) {
    throw Error(ErrorKind::kIndexOutOfRange,
                "basis index (" + std::to_string(index.proposer) + "," +
                    std::to_string(index.responder) + ") outside " +
                    std::to_string(proposer_dim) + "x" +
                    std::to_string(responder_dim));
  }
}

}  // namespace

QuantumState StateFromAmplitudes(const AmplitudeMatrix& raw, bool normalize) {
  CheckDims(static_cast<int>(raw.rows()), static_cast<int>(raw.cols()));
  for (Eigen::Index i = 0; i < raw.size(); ++i) {
    if (!std::isfinite(raw(i).real()) || !std::isfinite(raw(i).imag())) {
      throw Error(ErrorKind::kValidationError, "non-finite amplitude");
    }
  }
  const double norm = raw.norm();
  if (norm == 0.0) {
    throw Error(ErrorKind::kZeroState, "all amplitudes are zero");
  }
  if (normalize) return QuantumState(raw / norm);
  const double norm_sq = raw.squaredNorm();
  if (std::abs(norm_sq - 1.0) > kNormTolerance) {
    throw Error(ErrorKind::kNotNormalized,
                "squared norm is " + std::to_string(norm_sq));
  }
  return QuantumState(raw);
}

QuantumState BellLike(double theta, BasisIndex first, BasisIndex second,
                      int proposer_dim, int responder_dim) {
  CheckDims(proposer_dim, responder_dim);
  CheckIndex(first, proposer_dim, responder_dim);
  CheckIndex(second, proposer_dim, responder_dim);
  if (first == second) {
    throw Error(ErrorKind::kDegenerateSuperposition,
                "superposition needs two distinct basis outcomes");
  }
  AmplitudeMatrix amps = AmplitudeMatrix::Zero(proposer_dim, responder_dim);
  amps(first.proposer, first.responder) = std::cos(theta);
  amps(second.proposer, second.responder) = std::sin(theta);
  return StateFromAmplitudes(amps, /*normalize=*/false);
}

QuantumState BasisState(BasisIndex index, int proposer_dim,
                        int responder_dim) {
  CheckDims(proposer_dim, responder_dim);
  CheckIndex(index, proposer_dim, responder_dim);
  AmplitudeMatrix amps = AmplitudeMatrix::Zero(proposer_dim, responder_dim);
  amps(index.proposer, index.responder) = 1.0;
  return StateFromAmplitudes(amps);
}

ProbabilityTable::ProbabilityTable(const QuantumState& state)
    : probs_(state.amplitudes().cwiseAbs2()) {}

int SchmidtRank(const QuantumState& state) {
  Eigen::JacobiSVD<AmplitudeMatrix> svd(state.amplitudes());
  const auto& sv = svd.singularValues();
  int rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv(i) > kRankTolerance) ++rank;
  }
  return rank;
}

}  // namespace rqg
