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

#include "rqg/games.h"

#include <cmath>
#include <sstream>

#include "rqg/error.h"

namespace rqg {

PayoffTable::PayoffTable(RealMatrix proposer, RealMatrix responder)
    : proposer_(std::move(proposer)), responder_(std::move(responder)) {
  if (proposer_.rows() != responder_.rows() ||
      proposer_.cols() != responder_.cols()) {
    throw Error(ErrorKind::kInvalidPayoffs,
                "proposer and responder tables differ in shape");
  }
  if (proposer_.size() == 0) {
    throw Error(ErrorKind::kInvalidPayoffs, "empty payoff table");
  }
  if (!proposer_.allFinite() || !responder_.allFinite()) {
    throw Error(ErrorKind::kInvalidPayoffs, "payoffs must be finite");
  }
}

PayoffTable Ultimatum2x2(double a, double b, double c,
                         Diagnostics* diagnostics) {
  if (!(a > b && b > c && c > 0.0)) {
    std::ostringstream msg;
    msg << "need a > b > c > 0, got a=" << a << " b=" << b << " c=" << c;
    throw Error(ErrorKind::kInvalidPayoffs, msg.str());
  }
  if (a + c != 2.0 * b && diagnostics != nullptr) {
    std::ostringstream msg;
    msg << "a + c = " << a + c << " differs from 2b = " << 2.0 * b;
    diagnostics->push_back(msg.str());
  }
  RealMatrix proposer(2, 2);
  proposer << a, 0.0,
              b, 0.0;
  RealMatrix responder(2, 2);
  responder << c, 0.0,
               b, 0.0;
  return PayoffTable(std::move(proposer), std::move(responder));
}

void ValidateUltimatumParams(const UltimatumParams& params) {
  if (params.total <= 0) {
    throw Error(ErrorKind::kInvalidOffers, "total must be positive");
  }
  if (params.offers.empty()) {
    throw Error(ErrorKind::kInvalidOffers, "offer list is empty");
  }
  for (std::size_t i = 0; i < params.offers.size(); ++i) {
    const int offer = params.offers[i];
    if (offer <= 0 || offer >= params.total) {
      throw Error(ErrorKind::kInvalidOffers,
                  "offer " + std::to_string(offer) + " not in (0, " +
                      std::to_string(params.total) + ")");
    }
    if (i > 0 && offer <= params.offers[i - 1]) {
      throw Error(ErrorKind::kInvalidOffers,
                  "offers must be strictly increasing");
    }
  }
}

PayoffTable UltimatumGeneral(const UltimatumParams& params) {
  ValidateUltimatumParams(params);
  const auto rows = static_cast<Eigen::Index>(params.offers.size());
  RealMatrix proposer = RealMatrix::Zero(rows, 2);
  RealMatrix responder = RealMatrix::Zero(rows, 2);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const int offer = params.offers[static_cast<std::size_t>(i)];
    proposer(i, 0) = params.total - offer;
    responder(i, 0) = offer;
  }
  return PayoffTable(std::move(proposer), std::move(responder));
}

}  // namespace rqg
