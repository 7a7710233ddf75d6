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

#ifndef RQG_HILBERT_H_
#define RQG_HILBERT_H_

#include <complex>
#include <cstddef>

#include <Eigen/Dense>

namespace rqg {

using Amplitude = std::complex<double>;
using AmplitudeMatrix = Eigen::MatrixXcd;
using RealMatrix = Eigen::MatrixXd;

inline constexpr double kNormTolerance = 1e-9;
inline constexpr double kRankTolerance = 1e-9;

// A basis outcome |k l>: k indexes the proposer basis, l the responder basis.
struct BasisIndex {
  int proposer = 0;
  int responder = 0;

  friend bool operator==(const BasisIndex&, const BasisIndex&) = default;
};

// Pure state on the tensor product of a proposer basis of size dP and a
// responder basis of size dR. Entry (k, l) is the amplitude of |k l>.
// Always normalized; immutable once built.
class QuantumState {
 public:
  const AmplitudeMatrix& amplitudes() const { return amps_; }
  Amplitude amplitude(int k, int l) const { return amps_(k, l); }
  int proposer_dim() const { return static_cast<int>(amps_.rows()); }
  int responder_dim() const { return static_cast<int>(amps_.cols()); }

 private:
  explicit QuantumState(AmplitudeMatrix amps) : amps_(std::move(amps)) {}

  friend QuantumState StateFromAmplitudes(const AmplitudeMatrix&, bool);

  AmplitudeMatrix amps_;
};

// Builds a state from raw amplitudes. With `normalize` the matrix is divided
// by its Euclidean norm; without it the input must already have unit norm
// within kNormTolerance.
//
// Throws ZeroState for an all-zero matrix, NotNormalized for an off-norm
// matrix when `normalize` is false, and InvalidDimensions below 2x2.
QuantumState StateFromAmplitudes(const AmplitudeMatrix& raw,
                                 bool normalize = false);

// cos(theta)|first> + sin(theta)|second> on a dP x dR basis.
QuantumState BellLike(double theta, BasisIndex first, BasisIndex second,
                      int proposer_dim = 2, int responder_dim = 2);

QuantumState BasisState(BasisIndex index, int proposer_dim = 2,
                        int responder_dim = 2);

// Outcome probabilities |c_kl|^2.
class ProbabilityTable {
 public:
  explicit ProbabilityTable(const QuantumState& state);

  const RealMatrix& probabilities() const { return probs_; }
  double operator()(int k, int l) const { return probs_(k, l); }
  int proposer_dim() const { return static_cast<int>(probs_.rows()); }
  int responder_dim() const { return static_cast<int>(probs_.cols()); }

 private:
  RealMatrix probs_;
};

inline ProbabilityTable Probabilities(const QuantumState& state) {
  return ProbabilityTable(state);
}

// Number of singular values of the amplitude matrix above kRankTolerance.
// A rank of one means the state factorizes into per-player states.
int SchmidtRank(const QuantumState& state);

inline bool IsProductState(const QuantumState& state) {
  return SchmidtRank(state) == 1;
}

}  // namespace rqg

#endif  // RQG_HILBERT_H_
