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

#ifndef RQG_GAMES_H_
#define RQG_GAMES_H_

#include <string>
#include <vector>

#include "rqg/hilbert.h"

namespace rqg {

// Outcome payoffs indexed by basis outcome |k l>. Column convention for the
// ultimatum family: column 0 = accept, column 1 = reject.
class PayoffTable {
 public:
  // Throws InvalidPayoffs on shape mismatch or non-finite entries.
  PayoffTable(RealMatrix proposer, RealMatrix responder);

  const RealMatrix& proposer() const { return proposer_; }
  const RealMatrix& responder() const { return responder_; }
  int proposer_dim() const { return static_cast<int>(proposer_.rows()); }
  int responder_dim() const { return static_cast<int>(proposer_.cols()); }

  friend bool operator==(const PayoffTable& a, const PayoffTable& b) {
    return a.proposer_ == b.proposer_ && a.responder_ == b.responder_;
  }

 private:
  RealMatrix proposer_;
  RealMatrix responder_;
};

// Non-fatal notes raised by builders (e.g. the a + c = 2b convention).
using Diagnostics = std::vector<std::string>;

// The two-offer ultimatum table:
//
//            accept    reject
//   greedy   (a, c)    (0, 0)
//   fair     (b, b)    (0, 0)
//
// Requires a > b > c > 0 (InvalidPayoffs otherwise). When a + c != 2b a note
// is appended to `diagnostics`.
PayoffTable Ultimatum2x2(double a, double b, double c,
                         Diagnostics* diagnostics = nullptr);

struct UltimatumParams {
  int total = 100;
  // Coins handed to the responder, strictly increasing, each in (0, total).
  std::vector<int> offers;
};

// Throws InvalidOffers when `params` breaks its invariants.
void ValidateUltimatumParams(const UltimatumParams& params);

// One row per offer o: accept pays (total - o, o), reject pays (0, 0).
PayoffTable UltimatumGeneral(const UltimatumParams& params);

}  // namespace rqg

#endif  // RQG_GAMES_H_
