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

#ifndef RQG_INDUCE_H_
#define RQG_INDUCE_H_

#include <vector>

#include "rqg/games.h"
#include "rqg/hilbert.h"
#include "rqg/nash.h"

namespace rqg {

// A permutation of basis indices {0, ..., d-1}: entry k is the image of k.
using Permutation = std::vector<int>;

// The classical moves open to one player, in strategy order.
class MoveSet {
 public:
  // Throws InvalidMoveSet for an empty list, a non-bijective entry, an entry
  // of the wrong size, or a repeated permutation.
  MoveSet(int dim, std::vector<Permutation> perms);

  int dim() const { return dim_; }
  int size() const { return static_cast<int>(perms_.size()); }
  const std::vector<Permutation>& perms() const { return perms_; }
  const Permutation& operator[](int move) const { return perms_[move]; }

  int Apply(int move, int basis_index) const {
    return perms_[move][basis_index];
  }

  friend bool operator==(const MoveSet&, const MoveSet&) = default;

 private:
  int dim_;
  std::vector<Permutation> perms_;
};

// [bit-flip, identity] on a two-element basis. This labeling is the one under
// which the induced game of an ultimatum table with a general two-qubit state
// reads, cell by cell,
//
//   (0,0): a t11 + b t01    (0,1): a t10 + b t00
//   (1,0): b t11 + a t01    (1,1): b t10 + a t00
//
// with t_kl = |c_kl|^2; move 1 on both sides leaves |00> at the greedy cell.
MoveSet FlipIdentityMoveSet2();

// Cyclic shifts k -> k + s (mod d) ordered s = 1, ..., d-1, 0, so the
// identity is the last move. Equals FlipIdentityMoveSet2() for d = 2.
MoveSet CyclicMoveSet(int dim);

// The induced classical game. Entry (i, j) is the expected payoff of
// measuring the state after the proposer applies move i and the responder
// applies move j:
//
//   G[i][j] = sum_{k,l} |c_kl|^2 * payoff[sigma_i(k)][tau_j(l)].
//
// The sum runs over payoff cells in a fixed order, so states that differ by a
// relabeling of moves produce bitwise-identical entries.
BimatrixGame InduceGame(const QuantumState& state, const PayoffTable& payoffs,
                        const MoveSet& proposer_moves,
                        const MoveSet& responder_moves);

// Same as above with CyclicMoveSet on each side.
BimatrixGame InduceGame(const QuantumState& state, const PayoffTable& payoffs);

// Closed-form mixed-strategy payoffs of the 2x2 ultimatum family, with
// mu = P(proposer plays move 0) and nu = P(responder plays move 0):
//
//   P_P = mu (a-b) {nu (t11-t01) + (1-nu)(t10-t00)} + f(nu)
//   f(nu) = nu b (t11-t10) + nu a (t01-t00) + b t10 + a t00
//
//   P_R = nu (t11-t10)(mu c + (1-mu) b) + nu (t01-t00)(mu b + (1-mu) c) + g(mu)
//   g(mu) = mu (c-b)(t10-t00) + b t10 + c t00
//
// Throws DimensionMismatch for non-2x2 states and InvalidProbability when mu
// or nu leaves [0, 1].
double ProposerPayoffClosed(const QuantumState& state, double a, double b,
                            double c, double mu, double nu);
double ResponderPayoffClosed(const QuantumState& state, double a, double b,
                             double c, double mu, double nu);

// c11 <-> c01 and c10 <-> c00. Exchanges the rows of the induced game.
QuantumState SwapProposerCoeffs(const QuantumState& state);
// c11 <-> c10 and c01 <-> c00. Exchanges the columns of the induced game.
QuantumState SwapResponderCoeffs(const QuantumState& state);

enum class Case { kI, kII };

inline constexpr double kCaseTolerance = 1e-12;

struct CaseLabel {
  Case label = Case::kI;
  double proposer_diff = 0.0;  // t11 - t01
  double responder_diff = 0.0;  // t10 - t00
};

// kII iff the two differences have strictly opposite signs (product below
// -kCaseTolerance). Throws DimensionMismatch for non-2x2 states.
CaseLabel ClassifyCase(const QuantumState& state);

// Equilibria of a case-(i) state: the proposer plays the weakly dominant
// move with certainty and the responder picks a pure move by the sign of
// c (t11 - t10) + b (t01 - t00), evaluated after orienting the state so
// that t11 >= t01 and t10 >= t00. States oriented the other way are flipped
// with SwapProposerCoeffs internally; strategies are reported in the
// caller's labeling. When the responder is indifferent both pure responses
// are returned.
//
// Payoffs come from the closed formulas (a t11 + b t01, c t11 + b t01) or
// (a t10 + b t00, c t10 + b t00); regrets are certified against the induced
// game. Throws WrongCase for case-(ii) states and InvalidPayoffs unless
// a > b > c > 0.
std::vector<EquilibriumProfile> CaseIEquilibrium(const QuantumState& state,
                                                 double a, double b, double c,
                                                 double eps = kDefaultEps);

}  // namespace rqg

#endif  // RQG_INDUCE_H_
