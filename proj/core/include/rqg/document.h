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

#ifndef RQG_DOCUMENT_H_
#define RQG_DOCUMENT_H_

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "rqg/games.h"
#include "rqg/hilbert.h"
#include "rqg/induce.h"
#include "rqg/nash.h"

// Game definition documents. A document is JSON:
//
//   {
//     "payoffs": {"ultimatum": {"a": 99, "b": 50, "c": 1}},
//     "state":   {"bell": {"theta": "pi/4", "first": [1, 1], "second": [0, 0]}},
//     "moves":   {"proposer": [[1, 0], [0, 1]], "responder": [[1, 0], [0, 1]]},
//     "solver":  {"eps": 1e-9, "resolution": 64},
//     "profile": {"proposer": [1, 0], "responder": [1, 0]}
//   }
//
// "payoffs" holds exactly one of
//   "ultimatum":        {"a", "b", "c"}
//   "ultimatum_offers": {"total", "offers": [...]}
//   "matrices":         {"proposer": [[...]], "responder": [[...]]}
// and "state" exactly one of
//   "amplitudes": [[[re, im], ...], ...] plus optional "normalize" (default
//                 true)
//   "bell":       {"theta", "first": [k, l], "second": [k, l]}
// Angles are radians, given as numbers or as expressions such as "pi/4",
// "-3*pi/8" or "0.25*pi". "moves", "solver" and "profile" are optional.
namespace rqg::cli {

struct UltimatumTriple {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  friend bool operator==(const UltimatumTriple&, const UltimatumTriple&) = default;
};

struct ExplicitPayoffs {
  RealMatrix proposer;
  RealMatrix responder;
  friend bool operator==(const ExplicitPayoffs& x, const ExplicitPayoffs& y) {
    return x.proposer == y.proposer && x.responder == y.responder;
  }
};

struct OfferList {
  UltimatumParams params;
  friend bool operator==(const OfferList& x, const OfferList& y) {
    return x.params.total == y.params.total &&
           x.params.offers == y.params.offers;
  }
};

using PayoffSource = std::variant<UltimatumTriple, OfferList, ExplicitPayoffs>;

struct ExplicitAmplitudes {
  AmplitudeMatrix raw;
  bool normalize = true;
  friend bool operator==(const ExplicitAmplitudes& x,
                         const ExplicitAmplitudes& y) {
    return x.raw == y.raw && x.normalize == y.normalize;
  }
};

struct BellRecipe {
  double theta = 0.0;
  BasisIndex first;
  BasisIndex second;
  friend bool operator==(const BellRecipe&, const BellRecipe&) = default;
};

using StateSource = std::variant<ExplicitAmplitudes, BellRecipe>;

struct SolverOptions {
  double eps = kDefaultEps;
  int resolution = 64;
  friend bool operator==(const SolverOptions&, const SolverOptions&) = default;
};

struct ProfileSpec {
  std::vector<double> proposer;
  std::vector<double> responder;
  friend bool operator==(const ProfileSpec&, const ProfileSpec&) = default;
};

struct GameSpecDocument {
  PayoffSource payoffs;
  StateSource state;
  std::optional<std::vector<Permutation>> proposer_moves;
  std::optional<std::vector<Permutation>> responder_moves;
  SolverOptions solver;
  std::optional<ProfileSpec> profile;

  friend bool operator==(const GameSpecDocument&,
                         const GameSpecDocument&) = default;
};

enum class SweepOutput { kCase, kEquilibria, kPayoffs };

struct SweepSpec {
  PayoffSource payoffs;
  double start = 0.0;
  double stop = 0.0;
  int count = 2;
  BasisIndex first;
  BasisIndex second;
  std::optional<std::vector<Permutation>> proposer_moves;
  std::optional<std::vector<Permutation>> responder_moves;
  SolverOptions solver;
  std::vector<SweepOutput> outputs = {SweepOutput::kCase,
                                      SweepOutput::kEquilibria,
                                      SweepOutput::kPayoffs};

  // Evenly spaced angles, both ends included.
  std::vector<double> Thetas() const;

  friend bool operator==(const SweepSpec&, const SweepSpec&) = default;
};

// Everything a command needs, built and validated from a document.
struct GameSetup {
  QuantumState state;
  PayoffTable payoffs;
  MoveSet proposer_moves;
  MoveSet responder_moves;
  BimatrixGame game;
};

// Parses and validates a game document. Syntax errors raise ParseError with
// "line L, column C"; semantic errors raise ValidationError naming the
// offending field, e.g. "state.amplitudes: NotNormalized: ...".
GameSpecDocument ParseGameSpec(std::string_view text);

// Parses and validates a sweep document:
//
//   {
//     "payoffs": {...},
//     "sweep": {"theta": {"start": 0, "stop": "pi/4", "count": 2},
//               "first": [1, 1], "second": [0, 0]},
//     "outputs": ["case", "equilibria", "payoffs"],
//     "moves": {...}, "solver": {...}
//   }
SweepSpec ParseSweepSpec(std::string_view text);

std::string RenderGameSpec(const GameSpecDocument& doc);
std::string RenderSweepSpec(const SweepSpec& spec);

// Builds the state, payoffs, moves and induced game. Errors from the
// library surface as ValidationError with the field that caused them.
GameSetup BuildSetup(const GameSpecDocument& doc);
GameSetup BuildSetup(const PayoffSource& payoffs, const StateSource& state,
                     const std::optional<std::vector<Permutation>>& proposer,
                     const std::optional<std::vector<Permutation>>& responder);

PayoffTable BuildPayoffs(const PayoffSource& source);

// Evaluates "pi/4", "-3*pi/8", "0.5*pi", "pi", "1.25". Throws
// ValidationError on anything else.
double ParseAngle(std::string_view text);

}  // namespace rqg::cli

#endif  // RQG_DOCUMENT_H_
