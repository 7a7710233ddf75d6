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

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include <gtest/gtest.h>

#include "oracles.h"
#include "rqg/error.h"

namespace rqg {
namespace {

BimatrixGame Game(std::initializer_list<double> p,
                  std::initializer_list<double> r, int m = 2, int n = 2) {
  RealMatrix a(m, n), b(m, n);
  auto pi = p.begin();
  auto ri = r.begin();
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) {
      a(i, j) = *pi++;
      b(i, j) = *ri++;
    }
  }
  return BimatrixGame(a, b);
}

// Induced games of the two-term ultimatum states, frozen from the
// brute-force oracle (see induce_test).
BimatrixGame DiagonalStateGame() {
  return Game({49.5, 25, 25, 49.5}, {0.5, 25, 25, 0.5});
}
BimatrixGame FairStateGame() { return Game({74.5, 0, 74.5, 0}, {25.5, 0, 25.5, 0}); }
BimatrixGame ClassicalGame() { return Game({0, 50, 0, 99}, {0, 50, 0, 1}); }

TEST(MixedStrategy, ClampsTinyNegatives) {
  Eigen::VectorXd w(2);
  w << -1e-13, 1.0 + 1e-13;
  const MixedStrategy s(w);
  EXPECT_EQ(s[0], 0.0);
  EXPECT_TRUE(s.is_pure());
}

TEST(MixedStrategy, RejectsOffSimplex) {
  Eigen::VectorXd neg(2), short_sum(2);
  neg << -1e-6, 1.0 + 1e-6;
  short_sum << 0.4, 0.5;
  for (const auto& w : {neg, short_sum}) {
    try {
      MixedStrategy s(w);
      ADD_FAILURE();
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::kInvalidProbability);
    }
  }
  EXPECT_THROW(MixedStrategy::Binary(1.5), Error);
}

TEST(BestResponseValue, Examples) {
  EXPECT_NEAR(BestResponseValue(DiagonalStateGame(), Player::kResponder,
                                MixedStrategy::Binary(0.5)),
              12.75, 1e-12);
  const BimatrixGame g = Game({1, 7, 3, 2, 5, 4}, {0, 1, 2, 3, 4, 5}, 2, 3);
  for (int j = 0; j < 3; ++j) {
    EXPECT_EQ(BestResponseValue(g, Player::kProposer,
                                MixedStrategy::Pure(3, j)),
              g.proposer().col(j).maxCoeff());
  }
  const BimatrixGame row = Game({2, 4, 6}, {0, 0, 0}, 1, 3);
  Eigen::VectorXd y(3);
  y << 0.5, 0.25, 0.25;
  EXPECT_DOUBLE_EQ(BestResponseValue(row, Player::kProposer, MixedStrategy(y)),
                   3.5);
  try {
    BestResponseValue(row, Player::kProposer, MixedStrategy::Binary(0.5));
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kDimensionMismatch);
  }
}

TEST(VerifyEquilibrium, Examples) {
  const BimatrixGame g = DiagonalStateGame();
  const auto half = MixedStrategy::Binary(0.5);
  const EquilibriumProfile mixed = VerifyEquilibrium(g, half, half);
  EXPECT_TRUE(mixed.certified);
  EXPECT_EQ(mixed.proposer_regret, 0.0);
  EXPECT_EQ(mixed.responder_regret, 0.0);
  EXPECT_EQ(mixed.kind, ProfileKind::kMixed);
  EXPECT_FALSE(mixed.degenerate);

  const auto top = MixedStrategy::Binary(1.0);
  const EquilibriumProfile greedy = VerifyEquilibrium(g, top, top);
  EXPECT_FALSE(greedy.certified);
  EXPECT_EQ(greedy.proposer_regret, 0.0);
  EXPECT_DOUBLE_EQ(greedy.responder_regret, 24.5);
  EXPECT_DOUBLE_EQ(greedy.responder_payoff, 0.5);
  EXPECT_EQ(greedy.kind, ProfileKind::kPure);

  EXPECT_TRUE(VerifyEquilibrium(g, top, top,
                                std::numeric_limits<double>::infinity())
                  .certified);
}

TEST(PureEquilibria, Examples) {
  const auto classical = PureEquilibria(ClassicalGame());
  ASSERT_EQ(classical.size(), 1u);
  EXPECT_EQ(classical[0].proposer[1], 1.0);
  EXPECT_EQ(classical[0].responder[1], 1.0);
  EXPECT_EQ(classical[0].proposer_payoff, 99);
  EXPECT_EQ(classical[0].responder_payoff, 1);

  EXPECT_TRUE(PureEquilibria(DiagonalStateGame()).empty());

  const auto flat = PureEquilibria(Game({1, 1, 1, 1}, {1, 1, 1, 1}));
  ASSERT_EQ(flat.size(), 4u);
  for (int idx = 0; idx < 4; ++idx) {
    EXPECT_EQ(flat[idx].proposer[idx / 2], 1.0);
    EXPECT_EQ(flat[idx].responder[idx % 2], 1.0);
  }
}

TEST(SupportEnumeration, DiagonalStateHasOneMixedEquilibrium) {
  const auto eqs = SupportEnumeration(DiagonalStateGame());
  ASSERT_EQ(eqs.size(), 1u);
  EXPECT_NEAR(eqs[0].proposer[0], 0.5, 1e-12);
  EXPECT_NEAR(eqs[0].responder[0], 0.5, 1e-12);
  EXPECT_NEAR(eqs[0].proposer_payoff, 37.25, 1e-12);
  EXPECT_NEAR(eqs[0].responder_payoff, 12.75, 1e-12);
}

TEST(SupportEnumeration, FairStateIncludesTopCell) {
  const auto eqs = SupportEnumeration(FairStateGame());
  const auto it = std::find_if(eqs.begin(), eqs.end(), [](const auto& e) {
    return e.proposer[0] == 1.0 && e.responder[0] == 1.0;
  });
  ASSERT_NE(it, eqs.end());
  EXPECT_DOUBLE_EQ(it->proposer_payoff, 74.5);
  EXPECT_DOUBLE_EQ(it->responder_payoff, 25.5);
  // Identical rows: the proposer is indifferent, so the set is a continuum.
  EXPECT_TRUE(it->degenerate);
}

TEST(SupportEnumeration, MatchingPennies) {
  const auto eqs = SupportEnumeration(Game({1, -1, -1, 1}, {-1, 1, 1, -1}));
  ASSERT_EQ(eqs.size(), 1u);
  EXPECT_NEAR(eqs[0].proposer[0], 0.5, 1e-12);
  EXPECT_NEAR(eqs[0].responder[0], 0.5, 1e-12);
}

TEST(SupportEnumeration, ThreeByThreeRockPaperScissors) {
  const BimatrixGame rps = Game({0, -1, 1, 1, 0, -1, -1, 1, 0},
                                {0, 1, -1, -1, 0, 1, 1, -1, 0}, 3, 3);
  const auto eqs = SupportEnumeration(rps);
  ASSERT_EQ(eqs.size(), 1u);
  for (int i = 0; i < 3; ++i) {
    EXPECT_NEAR(eqs[0].proposer[i], 1.0 / 3, 1e-12);
    EXPECT_NEAR(eqs[0].responder[i], 1.0 / 3, 1e-12);
  }
}

TEST(SupportEnumeration, TooLarge) {
  const BimatrixGame big(RealMatrix::Zero(13, 2), RealMatrix::Zero(13, 2));
  try {
    SupportEnumeration(big);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kTooLarge);
  }
  EXPECT_NO_THROW(SupportEnumeration(
      BimatrixGame(RealMatrix::Zero(12, 1), RealMatrix::Zero(12, 1))));
}

TEST(GridOracle, Examples) {
  const auto diag = GridOracle(DiagonalStateGame(), 64, 1e-9);
  ASSERT_EQ(diag.size(), 1u);
  EXPECT_EQ(diag[0], (std::pair{0.5, 0.5}));

  const auto classical = GridOracle(ClassicalGame(), 64, 1e-9);
  EXPECT_NE(std::find(classical.begin(), classical.end(), std::pair{0.0, 0.0}),
            classical.end());

  for (int r : {1, 4, 7}) {
    const auto flat = GridOracle(Game({3, 3, 3, 3}, {2, 2, 2, 2}), r);
    ASSERT_EQ(flat.size(), static_cast<std::size_t>((r + 1) * (r + 1)));
    EXPECT_EQ(flat.front(), (std::pair{0.0, 0.0}));
    EXPECT_EQ(flat[1], (std::pair{0.0, 1.0 / r}));
  }
  try {
    GridOracle(Game({1, 2, 3}, {1, 2, 3}, 1, 3), 8);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kDimensionMismatch);
  }
}

TEST(SolveLinearSystem, MatchesLuOnRandomSystems) {
  testing::Rng rng(41);
  std::uniform_real_distribution<double> u(-10, 10);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + trial % 6;
    Eigen::MatrixXd a(n, n);
    Eigen::VectorXd b(n);
    for (auto& x : a.reshaped()) x = u(rng);
    for (auto& x : b) x = u(rng);
    Eigen::VectorXd x;
    ASSERT_TRUE(SolveLinearSystem(a, b, &x));
    EXPECT_LE((a * x - b).cwiseAbs().maxCoeff(), 1e-9);
  }
}

TEST(SolveLinearSystem, SingularIsReported) {
  Eigen::MatrixXd a(2, 2);
  a << 1, 2,
       2, 4;
  Eigen::VectorXd x;
  EXPECT_FALSE(SolveLinearSystem(a, Eigen::Vector2d(1, 2), &x));
  // Needs a row swap to proceed.
  a << 0, 1,
       1, 0;
  ASSERT_TRUE(SolveLinearSystem(a, Eigen::Vector2d(3, 4), &x));
  EXPECT_EQ(x, Eigen::Vector2d(4, 3));
}

// Properties over random games.

TEST(NashProperties, SoundnessAndExistence) {
  testing::Rng rng(42);
  for (int trial = 0; trial < 500; ++trial) {
    const int m = 1 + trial % 4;
    const int n = 1 + (trial / 4) % 4;
    const BimatrixGame g = testing::RandomGame(rng, m, n);
    const auto eqs = SupportEnumeration(g);
    EXPECT_FALSE(eqs.empty());
    for (const auto& e : eqs) {
      EXPECT_LE(VerifyEquilibrium(g, e.proposer, e.responder).max_regret(),
                1e-9);
    }
    for (const auto& p : PureEquilibria(g)) {
      EXPECT_LE(p.max_regret(), 1e-9);
      EXPECT_TRUE(std::any_of(eqs.begin(), eqs.end(), [&](const auto& e) {
        return testing::SameStrategies(e, p, 1e-9);
      }));
    }
  }
}

TEST(NashProperties, AgreesWithGridOracleOnTwoByTwo) {
  testing::Rng rng(43);
  constexpr int kRes = 64;
  auto on_grid = [](double v) {
    return std::abs(v * kRes - std::round(v * kRes)) <= 1e-9;
  };
  for (int trial = 0; trial < 300; ++trial) {
    const BimatrixGame g = testing::RandomGame(rng, 2, 2);
    const auto eqs = SupportEnumeration(g);
    const auto points = GridOracle(g, kRes);
    for (const auto& e : eqs) {
      if (!on_grid(e.proposer[0]) || !on_grid(e.responder[0])) continue;
      const std::pair<double, double> snapped{
          std::round(e.proposer[0] * kRes) / kRes,
          std::round(e.responder[0] * kRes) / kRes};
      EXPECT_NE(std::find(points.begin(), points.end(), snapped), points.end());
    }
    for (const auto& [mu, nu] : points) {
      EXPECT_TRUE(std::any_of(eqs.begin(), eqs.end(), [&](const auto& e) {
        return std::abs(e.proposer[0] - mu) <= 1.0 / kRes &&
               std::abs(e.responder[0] - nu) <= 1.0 / kRes;
      }));
    }
  }
}

TEST(NashProperties, PayoffShiftInvariance) {
  testing::Rng rng(44);
  std::uniform_real_distribution<double> shift(-50, 50);
  for (int trial = 0; trial < 100; ++trial) {
    const BimatrixGame g = testing::RandomGame(rng, 3, 3);
    const double dp = shift(rng);
    const double dr = shift(rng);
    const BimatrixGame h(g.proposer().array() + dp,
                         g.responder().array() + dr);
    const auto eg = SupportEnumeration(g);
    const auto eh = SupportEnumeration(h);
    ASSERT_EQ(eg.size(), eh.size());
    for (std::size_t i = 0; i < eg.size(); ++i) {
      EXPECT_TRUE(testing::SameStrategies(eg[i], eh[i], 1e-9));
      EXPECT_NEAR(eh[i].proposer_payoff, eg[i].proposer_payoff + dp, 1e-9);
      EXPECT_NEAR(eh[i].responder_payoff, eg[i].responder_payoff + dr, 1e-9);
    }
  }
}

TEST(NashProperties, RowPermutationEquivariance) {
  testing::Rng rng(45);
  for (int trial = 0; trial < 100; ++trial) {
    const BimatrixGame g = testing::RandomGame(rng, 4, 3);
    std::vector<int> perm(4);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    RealMatrix p(4, 3), r(4, 3);
    for (int i = 0; i < 4; ++i) {
      p.row(i) = g.proposer().row(perm[i]);
      r.row(i) = g.responder().row(perm[i]);
    }
    const auto eg = SupportEnumeration(g);
    const auto eh = SupportEnumeration(BimatrixGame(p, r));
    ASSERT_EQ(eg.size(), eh.size());
    for (const auto& e : eh) {
      Eigen::VectorXd back(4);
      for (int i = 0; i < 4; ++i) back(perm[i]) = e.proposer[i];
      EXPECT_TRUE(std::any_of(eg.begin(), eg.end(), [&](const auto& f) {
        return (f.proposer.weights() - back).cwiseAbs().maxCoeff() <= 1e-9 &&
               (f.responder.weights() - e.responder.weights())
                       .cwiseAbs()
                       .maxCoeff() <= 1e-9;
      }));
    }
  }
}

}  // namespace
}  // namespace rqg
