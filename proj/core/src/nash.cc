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

#include "rqg/nash.h"

#include <cmath>
#include <string>

#include "rqg/error.h"

namespace rqg {
namespace {

// Advances `combo` (sorted indices drawn from [0, n)) to the next
// lexicographic combination of the same size. Returns false past the last.
bool NextCombination(std::vector<int>& combo, int n) {
  const int k = static_cast<int>(combo.size());
  for (int i = k - 1; i >= 0; --i) {
    if (combo[i] < n - k + i) {
      ++combo[i];
      for (int j = i + 1; j < k; ++j) combo[j] = combo[j - 1] + 1;
      return true;
    }
  }
  return false;
}

std::vector<int> FirstCombination(int k) {
  std::vector<int> combo(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) combo[i] = i;
  return combo;
}

// Solves for the mix over `mixer` support that makes the other player
// indifferent across `indifferent` support. `payoff(i, j)` is the
// indifferent player's payoff when it plays `indifferent[i]` against
// `mixer[j]`.
template <typename PayoffFn>
bool SolveIndifference(const std::vector<int>& indifferent,
                       const std::vector<int>& mixer, int mixer_size,
                       PayoffFn payoff, Eigen::VectorXd* weights) {
  const auto k = static_cast<Eigen::Index>(mixer.size());
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(k + 1, k + 1);
  Eigen::VectorXd b = Eigen::VectorXd::Zero(k + 1);
  for (Eigen::Index r = 0; r < k; ++r) {
    for (Eigen::Index c = 0; c < k; ++c) {
      a(r, c) = payoff(indifferent[static_cast<std::size_t>(r)],
                       mixer[static_cast<std::size_t>(c)]);
    }
    a(r, k) = -1.0;
  }
  for (Eigen::Index c = 0; c < k; ++c) a(k, c) = 1.0;
  b(k) = 1.0;

  Eigen::VectorXd solution;
  if (!SolveLinearSystem(std::move(a), std::move(b), &solution)) return false;

  Eigen::VectorXd full = Eigen::VectorXd::Zero(mixer_size);
  for (Eigen::Index c = 0; c < k; ++c) {
    if (solution(c) < -kSimplexSlack) return false;
    full(mixer[static_cast<std::size_t>(c)]) = std::max(solution(c), 0.0);
  }
  *weights = std::move(full);
  return true;
}

int CountBestResponses(const Eigen::VectorXd& move_payoffs, double eps) {
  const double best = move_payoffs.maxCoeff();
  int count = 0;
  for (Eigen::Index i = 0; i < move_payoffs.size(); ++i) {
    if (move_payoffs(i) >= best - eps) ++count;
  }
  return count;
}

bool SameProfile(const EquilibriumProfile& a, const EquilibriumProfile& b) {
  constexpr double kTol = 1e-9;
  return (a.proposer.weights() - b.proposer.weights()).lpNorm<Eigen::Infinity>() <= kTol &&
         (a.responder.weights() - b.responder.weights()).lpNorm<Eigen::Infinity>() <= kTol;
}

}  // namespace

BimatrixGame::BimatrixGame(RealMatrix proposer, RealMatrix responder)
    : proposer_(std::move(proposer)), responder_(std::move(responder)) {
  if (proposer_.rows() != responder_.rows() ||
      proposer_.cols() != responder_.cols() || proposer_.size() == 0) {
    throw Error(ErrorKind::kDimensionMismatch,
                "bimatrix game needs two nonempty matrices of equal shape");
  }
}

MixedStrategy::MixedStrategy(Eigen::VectorXd weights)
    : weights_(std::move(weights)) {
  if (weights_.size() == 0) {
    throw Error(ErrorKind::kInvalidProbability, "empty strategy");
  }
  for (Eigen::Index i = 0; i < weights_.size(); ++i) {
    if (!std::isfinite(weights_(i)) || weights_(i) < -kSimplexSlack ||
        weights_(i) > 1.0 + kDefaultEps) {
      throw Error(ErrorKind::kInvalidProbability,
                  "weight " + std::to_string(weights_(i)) +
                      " outside [0, 1]");
    }
    weights_(i) = std::clamp(weights_(i), 0.0, 1.0);
  }
  if (std::abs(weights_.sum() - 1.0) > kDefaultEps) {
    throw Error(ErrorKind::kInvalidProbability,
                "weights sum to " + std::to_string(weights_.sum()));
  }
}

MixedStrategy MixedStrategy::Pure(int size, int move) {
  if (move < 0 || move >= size) {
    throw Error(ErrorKind::kIndexOutOfRange,
                "move " + std::to_string(move) + " of " + std::to_string(size));
  }
  Eigen::VectorXd w = Eigen::VectorXd::Zero(size);
  w(move) = 1.0;
  return MixedStrategy(std::move(w));
}

MixedStrategy MixedStrategy::Binary(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw Error(ErrorKind::kInvalidProbability,
                "probability " + std::to_string(p) + " outside [0, 1]");
  }
  Eigen::VectorXd w(2);
  w << p, 1.0 - p;
  return MixedStrategy(std::move(w));
}

int MixedStrategy::support_size(double tol) const {
  return static_cast<int>((weights_.array() > tol).count());
}

bool MixedStrategy::is_pure(double tol) const {
  return weights_.maxCoeff() >= 1.0 - tol;
}

Eigen::VectorXd PureMovePayoffs(const BimatrixGame& game, Player who,
                                const MixedStrategy& opponent) {
  if (who == Player::kProposer) {
    if (opponent.size() != game.cols()) {
      throw Error(ErrorKind::kDimensionMismatch,
                  "responder strategy has " + std::to_string(opponent.size()) +
                      " weights, game has " + std::to_string(game.cols()) +
                      " columns");
    }
    return game.proposer() * opponent.weights();
  }
  if (opponent.size() != game.rows()) {
    throw Error(ErrorKind::kDimensionMismatch,
                "proposer strategy has " + std::to_string(opponent.size()) +
                    " weights, game has " + std::to_string(game.rows()) +
                    " rows");
  }
  return game.responder().transpose() * opponent.weights();
}

double BestResponseValue(const BimatrixGame& game, Player who,
                         const MixedStrategy& opponent) {
  return PureMovePayoffs(game, who, opponent).maxCoeff();
}

EquilibriumProfile VerifyEquilibrium(const BimatrixGame& game,
                                     const MixedStrategy& proposer,
                                     const MixedStrategy& responder,
                                     double eps) {
  const Eigen::VectorXd row_payoffs =
      PureMovePayoffs(game, Player::kProposer, responder);
  const Eigen::VectorXd col_payoffs =
      PureMovePayoffs(game, Player::kResponder, proposer);

  EquilibriumProfile profile{proposer, responder};
  profile.proposer_payoff = proposer.weights().dot(row_payoffs);
  profile.responder_payoff = responder.weights().dot(col_payoffs);
  // Regret is nonnegative by definition; rounding may push it below zero.
  profile.proposer_regret =
      std::max(0.0, row_payoffs.maxCoeff() - profile.proposer_payoff);
  profile.responder_regret =
      std::max(0.0, col_payoffs.maxCoeff() - profile.responder_payoff);
  profile.eps = eps;
  profile.certified = profile.max_regret() <= eps;
  profile.kind = proposer.is_pure() && responder.is_pure()
                     ? ProfileKind::kPure
                     : ProfileKind::kMixed;
  profile.degenerate =
      CountBestResponses(row_payoffs, kDefaultEps) > responder.support_size() ||
      CountBestResponses(col_payoffs, kDefaultEps) > proposer.support_size();
  return profile;
}

std::vector<EquilibriumProfile> PureEquilibria(const BimatrixGame& game) {
  const RealMatrix& a = game.proposer();
  const RealMatrix& b = game.responder();
  std::vector<EquilibriumProfile> found;
  for (int i = 0; i < game.rows(); ++i) {
    for (int j = 0; j < game.cols(); ++j) {
      const bool row_best = a(i, j) >= a.col(j).maxCoeff() - kDefaultEps;
      const bool col_best = b(i, j) >= b.row(i).maxCoeff() - kDefaultEps;
      if (row_best && col_best) {
        found.push_back(VerifyEquilibrium(
            game, MixedStrategy::Pure(game.rows(), i),
            MixedStrategy::Pure(game.cols(), j), kDefaultEps));
      }
    }
  }
  return found;
}

std::vector<EquilibriumProfile> SupportEnumeration(const BimatrixGame& game,
                                                   double eps) {
  const int m = game.rows();
  const int n = game.cols();
  if (m > kMaxEnumerationSize || n > kMaxEnumerationSize) {
    throw Error(ErrorKind::kTooLarge,
                std::to_string(m) + "x" + std::to_string(n) +
                    " exceeds the enumeration limit of " +
                    std::to_string(kMaxEnumerationSize));
  }
  const RealMatrix& a = game.proposer();
  const RealMatrix& b = game.responder();

  std::vector<EquilibriumProfile> found;
  for (int k = 1; k <= std::min(m, n); ++k) {
    std::vector<int> rows = FirstCombination(k);
    do {
      std::vector<int> cols = FirstCombination(k);
      do {
        Eigen::VectorXd y;
        // Responder mixes over `cols` so the proposer is indifferent on
        // `rows`.
        if (!SolveIndifference(rows, cols, n,
                               [&](int i, int j) { return a(i, j); }, &y)) {
          continue;
        }
        Eigen::VectorXd x;
        if (!SolveIndifference(cols, rows, m,
                               [&](int j, int i) { return b(i, j); }, &x)) {
          continue;
        }
        EquilibriumProfile profile = VerifyEquilibrium(
            game, MixedStrategy(std::move(x)), MixedStrategy(std::move(y)),
            eps);
        if (!profile.certified) continue;
        const bool seen = std::any_of(
            found.begin(), found.end(),
            [&](const EquilibriumProfile& p) { return SameProfile(p, profile); });
        if (!seen) found.push_back(std::move(profile));
      } while (NextCombination(cols, n));
    } while (NextCombination(rows, m));
  }
  return found;
}

std::vector<std::pair<double, double>> GridOracle(const BimatrixGame& game,
                                                  int resolution, double eps) {
  if (game.rows() != 2 || game.cols() != 2) {
    throw Error(ErrorKind::kDimensionMismatch,
                "grid oracle handles 2x2 games only");
  }
  if (resolution < 1) {
    throw Error(ErrorKind::kValidationError, "resolution must be positive");
  }
  std::vector<std::pair<double, double>> points;
  for (int i = 0; i <= resolution; ++i) {
    const double mu = static_cast<double>(i) / resolution;
    for (int j = 0; j <= resolution; ++j) {
      const double nu = static_cast<double>(j) / resolution;
      const EquilibriumProfile p = VerifyEquilibrium(
          game, MixedStrategy::Binary(mu), MixedStrategy::Binary(nu), eps);
      if (p.certified) points.emplace_back(mu, nu);
    }
  }
  return points;
}

bool SolveLinearSystem(Eigen::MatrixXd a, Eigen::VectorXd b,
                       Eigen::VectorXd* x) {
  const Eigen::Index n = a.rows();
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index pivot = col;
    for (Eigen::Index r = col + 1; r < n; ++r) {
      if (std::abs(a(r, col)) > std::abs(a(pivot, col))) pivot = r;
    }
    if (std::abs(a(pivot, col)) < kPivotTolerance) return false;
    if (pivot != col) {
      a.row(pivot).swap(a.row(col));
      std::swap(b(pivot), b(col));
    }
    for (Eigen::Index r = col + 1; r < n; ++r) {
      const double factor = a(r, col) / a(col, col);
      if (factor == 0.0) continue;
      a.row(r).tail(n - col) -= factor * a.row(col).tail(n - col);
      b(r) -= factor * b(col);
    }
  }
  Eigen::VectorXd out(n);
  for (Eigen::Index r = n - 1; r >= 0; --r) {
    double acc = b(r);
    for (Eigen::Index c = r + 1; c < n; ++c) acc -= a(r, c) * out(c);
    out(r) = acc / a(r, r);
  }
  *x = std::move(out);
  return true;
}

}  // namespace rqg
