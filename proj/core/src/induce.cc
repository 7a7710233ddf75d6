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

#include "rqg/induce.h"

#include <algorithm>
#include <string>

#include "rqg/error.h"

namespace rqg {
namespace {

Permutation Invert(const Permutation& perm) {
  Permutation inverse(perm.size());
  for (std::size_t k = 0; k < perm.size(); ++k) {
    inverse[static_cast<std::size_t>(perm[k])] = static_cast<int>(k);
  }
  return inverse;
}

void RequireTwoByTwo(const QuantumState& state, const char* what) {
  if (state.proposer_dim() != 2 || state.responder_dim() != 2) {
    throw Error(ErrorKind::kDimensionMismatch,
                std::string(what) + " needs a 2x2 state, got " +
                    std::to_string(state.proposer_dim()) + "x" +
                    std::to_string(state.responder_dim()));
  }
}

void RequireProbability(double p, const char* name) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw Error(ErrorKind::kInvalidProbability,
                std::string(name) + " = " + std::to_string(p) +
                    " outside [0, 1]");
  }
}

struct Weights {
  double t00, t01, t10, t11;
};

Weights OutcomeWeights(const QuantumState& state) {
  const ProbabilityTable t(state);
  return {t(0, 0), t(0, 1), t(1, 0), t(1, 1)};
}

}  // namespace

MoveSet::MoveSet(int dim, std::vector<Permutation> perms)
    : dim_(dim), perms_(std::move(perms)) {
  if (dim_ < 1) {
    throw Error(ErrorKind::kInvalidMoveSet, "basis size must be positive");
  }
  if (perms_.empty()) {
    throw Error(ErrorKind::kInvalidMoveSet, "move set is empty");
  }
  for (std::size_t m = 0; m < perms_.size(); ++m) {
    const Permutation& perm = perms_[m];
    if (static_cast<int>(perm.size()) != dim_) {
      throw Error(ErrorKind::kInvalidMoveSet,
                  "move " + std::to_string(m) + " has size " +
                      std::to_string(perm.size()) + ", expected " +
                      std::to_string(dim_));
    }
    std::vector<bool> hit(perm.size(), false);
    for (int image : perm) {
      if (image < 0 || image >= dim_ || hit[static_cast<std::size_t>(image)]) {
        throw Error(ErrorKind::kInvalidMoveSet,
                    "move " + std::to_string(m) + " is not a permutation");
      }
      hit[static_cast<std::size_t>(image)] = true;
    }
    for (std::size_t prev = 0; prev < m; ++prev) {
      if (perms_[prev] == perm) {
        throw Error(ErrorKind::kInvalidMoveSet,
                    "moves " + std::to_string(prev) + " and " +
                        std::to_string(m) + " coincide");
      }
    }
  }
}

MoveSet FlipIdentityMoveSet2() { return MoveSet(2, {{1, 0}, {0, 1}}); }

MoveSet CyclicMoveSet(int dim) {
  std::vector<Permutation> perms;
  perms.reserve(static_cast<std::size_t>(dim));
  for (int s = 1; s <= dim; ++s) {
    Permutation perm(static_cast<std::size_t>(dim));
    for (int k = 0; k < dim; ++k) perm[k] = (k + s) % dim;
    perms.push_back(std::move(perm));
  }
  return MoveSet(dim, std::move(perms));
}

BimatrixGame InduceGame(const QuantumState& state, const PayoffTable& payoffs,
                        const MoveSet& proposer_moves,
                        const MoveSet& responder_moves) {
  const int dp = state.proposer_dim();
  const int dr = state.responder_dim();
  if (payoffs.proposer_dim() != dp || payoffs.responder_dim() != dr ||
      proposer_moves.dim() != dp || responder_moves.dim() != dr) {
    throw Error(ErrorKind::kDimensionMismatch,
                "state is " + std::to_string(dp) + "x" + std::to_string(dr) +
                    ", payoffs " + std::to_string(payoffs.proposer_dim()) +
                    "x" + std::to_string(payoffs.responder_dim()) +
                    ", moves act on " + std::to_string(proposer_moves.dim()) +
                    "x" + std::to_string(responder_moves.dim()));
  }
  const ProbabilityTable probs(state);
  const int m = proposer_moves.size();
  const int n = responder_moves.size();

  std::vector<Permutation> row_inverse;
  for (const Permutation& p : proposer_moves.perms()) {
    row_inverse.push_back(Invert(p));
  }
  std::vector<Permutation> col_inverse;
  for (const Permutation& p : responder_moves.perms()) {
    col_inverse.push_back(Invert(p));
  }

  RealMatrix proposer = RealMatrix::Zero(m, n);
  RealMatrix responder = RealMatrix::Zero(m, n);
  for (int i = 0; i < m; ++i) {
    const Permutation& sigma_inv = row_inverse[static_cast<std::size_t>(i)];
    for (int j = 0; j < n; ++j) {
      const Permutation& tau_inv = col_inverse[static_cast<std::size_t>(j)];
      double sum_p = 0.0;
      double sum_r = 0.0;
      // Outcome (k', l') after the moves came from (sigma^-1 k', tau^-1 l').
      for (int kk = 0; kk < dp; ++kk) {
        for (int ll = 0; ll < dr; ++ll) {
          const double w = probs(sigma_inv[kk], tau_inv[ll]);
          sum_p += w * payoffs.proposer()(kk, ll);
          sum_r += w * payoffs.responder()(kk, ll);
        }
      }
      proposer(i, j) = sum_p;
      responder(i, j) = sum_r;
    }
  }
  return BimatrixGame(std::move(proposer), std::move(responder));
}

BimatrixGame InduceGame(const QuantumState& state, const PayoffTable& payoffs) {
  return InduceGame(state, payoffs, CyclicMoveSet(state.proposer_dim()),
                    CyclicMoveSet(state.responder_dim()));
}

double ProposerPayoffClosed(const QuantumState& state, double a, double b,
                            double c, double mu, double nu) {
  RequireTwoByTwo(state, "closed-form payoff");
  RequireProbability(mu, "mu");
  RequireProbability(nu, "nu");
  (void)c;
  const Weights t = OutcomeWeights(state);
  const double f = nu * b * (t.t11 - t.t10) + nu * a * (t.t01 - t.t00) +
                   b * t.t10 + a * t.t00;
  return mu * (a - b) * (nu * (t.t11 - t.t01) + (1.0 - nu) * (t.t10 - t.t00)) +
         f;
}

double ResponderPayoffClosed(const QuantumState& state, double a, double b,
                             double c, double mu, double nu) {
  RequireTwoByTwo(state, "closed-form payoff");
  RequireProbability(mu, "mu");
  RequireProbability(nu, "nu");
  (void)a;
  const Weights t = OutcomeWeights(state);
  const double g = mu * (c - b) * (t.t10 - t.t00) + b * t.t10 + c * t.t00;
  return nu * (t.t11 - t.t10) * (mu * c + (1.0 - mu) * b) +
         nu * (t.t01 - t.t00) * (mu * b + (1.0 - mu) * c) + g;
}

QuantumState SwapProposerCoeffs(const QuantumState& state) {
  RequireTwoByTwo(state, "coefficient swap");
  AmplitudeMatrix amps = state.amplitudes();
  amps.row(0).swap(amps.row(1));
  return StateFromAmplitudes(amps);
}

QuantumState SwapResponderCoeffs(const QuantumState& state) {
  RequireTwoByTwo(state, "coefficient swap");
  AmplitudeMatrix amps = state.amplitudes();
  amps.col(0).swap(amps.col(1));
  return StateFromAmplitudes(amps);
}

CaseLabel ClassifyCase(const QuantumState& state) {
  RequireTwoByTwo(state, "case classification");
  const Weights t = OutcomeWeights(state);
  CaseLabel out;
  out.proposer_diff = t.t11 - t.t01;
  out.responder_diff = t.t10 - t.t00;
  out.label = out.proposer_diff * out.responder_diff < -kCaseTolerance
                  ? Case::kII
                  : Case::kI;
  return out;
}

std::vector<EquilibriumProfile> CaseIEquilibrium(const QuantumState& state,
                                                 double a, double b, double c,
                                                 double eps) {
  const PayoffTable table = Ultimatum2x2(a, b, c);
  const CaseLabel label = ClassifyCase(state);
  if (label.label != Case::kI) {
    throw Error(ErrorKind::kWrongCase,
                "state has opposite-sign differences (" +
                    std::to_string(label.proposer_diff) + ", " +
                    std::to_string(label.responder_diff) + ")");
  }
  bool flipped = false;
  if (label.proposer_diff < 0.0 || label.responder_diff < 0.0) {
    flipped = label.proposer_diff + label.responder_diff < 0.0;
  }
  const QuantumState oriented = flipped ? SwapProposerCoeffs(state) : state;
  const Weights t = OutcomeWeights(oriented);

  const double responder_coeff = c * (t.t11 - t.t10) + b * (t.t01 - t.t00);
  std::vector<double> responder_choices;
  if (responder_coeff >= -kCaseTolerance) responder_choices.push_back(1.0);
  if (responder_coeff <= kCaseTolerance) responder_choices.push_back(0.0);

  const BimatrixGame game =
      InduceGame(state, table, FlipIdentityMoveSet2(), FlipIdentityMoveSet2());
  const double mu = flipped ? 0.0 : 1.0;
  std::vector<EquilibriumProfile> out;
  for (double nu : responder_choices) {
    EquilibriumProfile profile = VerifyEquilibrium(
        game, MixedStrategy::Binary(mu), MixedStrategy::Binary(nu), eps);
    if (nu == 1.0) {
      profile.proposer_payoff = a * t.t11 + b * t.t01;
      profile.responder_payoff = c * t.t11 + b * t.t01;
    } else {
      profile.proposer_payoff = a * t.t10 + b * t.t00;
      profile.responder_payoff = c * t.t10 + b * t.t00;
    }
    out.push_back(std::move(profile));
  }
  return out;
}

}  // namespace rqg
