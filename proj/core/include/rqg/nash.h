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

#ifndef RQG_NASH_H_
#define RQG_NASH_H_

#include <algorithm>
#include <limits>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "rqg/hilbert.h"

namespace rqg {

inline constexpr double kDefaultEps = 1e-9;
inline constexpr double kPivotTolerance = 1e-12;
inline constexpr double kSimplexSlack = 1e-12;
inline constexpr int kMaxEnumerationSize = 12;

enum class Player { kProposer, kResponder };

// Two-player game in strategic form: entry (i, j) is the payoff when the
// proposer plays move i and the responder plays move j.
class BimatrixGame {
 public:
  // Throws DimensionMismatch when the two matrices differ in shape or are
  // empty.
  BimatrixGame(RealMatrix proposer, RealMatrix responder);

  const RealMatrix& proposer() const { return proposer_; }
  const RealMatrix& responder() const { return responder_; }
  const RealMatrix& payoffs(Player who) const {
    return who == Player::kProposer ? proposer_ : responder_;
  }
  int rows() const { return static_cast<int>(proposer_.rows()); }
  int cols() const { return static_cast<int>(proposer_.cols()); }

  friend bool operator==(const BimatrixGame& a, const BimatrixGame& b) {
    return a.proposer_ == b.proposer_ && a.responder_ == b.responder_;
  }

 private:
  RealMatrix proposer_;
  RealMatrix responder_;
};

// A probability vector over one player's moves. Entries above
// -kSimplexSlack are clamped to zero; the sum must be 1 within kDefaultEps.
class MixedStrategy {
 public:
  // Throws InvalidProbability if `weights` is not on the simplex.
  explicit MixedStrategy(Eigen::VectorXd weights);

  static MixedStrategy Pure(int size, int move);
  // Two-move shorthand: (p, 1 - p).
  static MixedStrategy Binary(double p);

  const Eigen::VectorXd& weights() const { return weights_; }
  double operator[](int i) const { return weights_(i); }
  int size() const { return static_cast<int>(weights_.size()); }
  int support_size(double tol = kDefaultEps) const;
  bool is_pure(double tol = kDefaultEps) const;

 private:
  Eigen::VectorXd weights_;
};

enum class ProfileKind { kPure, kMixed };

struct EquilibriumProfile {
  MixedStrategy proposer;
  MixedStrategy responder;
  double proposer_payoff = 0.0;
  double responder_payoff = 0.0;
  double proposer_regret = 0.0;
  double responder_regret = 0.0;
  double eps = kDefaultEps;
  bool certified = false;
  // A player has more pure best responses than the opponent's support size,
  // i.e. the profile may sit inside a continuum of equilibria.
  bool degenerate = false;
  ProfileKind kind = ProfileKind::kMixed;

  double max_regret() const {
    return std::max(proposer_regret, responder_regret);
  }
};

// Expected payoff of each pure move of `who` against `opponent`.
Eigen::VectorXd PureMovePayoffs(const BimatrixGame& game, Player who,
                                const MixedStrategy& opponent);

// Max over `who`'s pure moves of the expected payoff against `opponent`.
// Throws DimensionMismatch if `opponent` has the wrong length.
double BestResponseValue(const BimatrixGame& game, Player who,
                         const MixedStrategy& opponent);

// Regret certificate for (proposer, responder). Never throws for a
// well-shaped profile; the verdict is `certified`.
EquilibriumProfile VerifyEquilibrium(
    const BimatrixGame& game, const MixedStrategy& proposer,
    const MixedStrategy& responder, double eps = kDefaultEps);

// Every cell that is a mutual best response (ties within kDefaultEps), in
// lexicographic (row, column) order.
std::vector<EquilibriumProfile> PureEquilibria(const BimatrixGame& game);

// Support enumeration over equal-size support pairs. Every returned profile
// is certified at `eps`; duplicates are merged. Throws TooLarge when either
// side exceeds kMaxEnumerationSize moves.
std::vector<EquilibriumProfile> SupportEnumeration(const BimatrixGame& game,
                                                   double eps = kDefaultEps);

// Brute-force scan of a 2x2 game over mu, nu in {0, 1/r, ..., 1}, where mu
// and nu are the weights on move 0. Returns the grid points whose maximum
// regret is at most `eps`, mu-major. Throws DimensionMismatch for non-2x2
// games.
std::vector<std::pair<double, double>> GridOracle(const BimatrixGame& game,
                                                  int resolution,
                                                  double eps = kDefaultEps);

// Solves `a x = b` by Gaussian elimination with partial pivoting. Returns
// false when a pivot falls below kPivotTolerance.
bool SolveLinearSystem(Eigen::MatrixXd a, Eigen::VectorXd b,
                       Eigen::VectorXd* x);

}  // namespace rqg

#endif  // RQG_NASH_H_
