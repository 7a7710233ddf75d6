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

#include "rqg/commands.h"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <vector>

namespace rqg::cli {
namespace {

double Eps(const GameSpecDocument& doc, const CommandOptions& options) {
  return options.eps.value_or(doc.solver.eps);
}

int Resolution(const SolverOptions& solver, const CommandOptions& options) {
  return options.resolution.value_or(solver.resolution);
}

std::string JoinNumbers(const Eigen::VectorXd& v, const char* sep) {
  std::string out;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i > 0) out += sep;
    out += FormatNumber(v(i));
  }
  return out;
}

std::string PermutationText(const Permutation& p) {
  std::string out = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i > 0) out += " ";
    out += std::to_string(p[i]);
  }
  return out + ")";
}

std::string Pad(const std::string& s, std::size_t width) {
  return s.size() >= width ? s + " " : s + std::string(width - s.size(), ' ');
}

std::string RightTrim(std::string s) {
  while (!s.empty() && s.back() == ' ') s.pop_back();
  return s;
}

const char* CaseName(Case c) { return c == Case::kI ? "I" : "II"; }

std::string StrategyText(const MixedStrategy& s) {
  return JoinNumbers(s.weights(), " ");
}

// Compact equilibrium label for sweep rows.
std::string SweepEntry(const EquilibriumProfile& p, bool with_payoffs) {
  std::string out;
  if (p.proposer.size() == 2 && p.responder.size() == 2) {
    out = "mu=" + FormatNumber(p.proposer[0]) +
          " nu=" + FormatNumber(p.responder[0]);
  } else {
    out = "x=" + JoinNumbers(p.proposer.weights(), "/") +
          " y=" + JoinNumbers(p.responder.weights(), "/");
  }
  if (with_payoffs) {
    out += " PP=" + FormatNumber(p.proposer_payoff) +
           " PR=" + FormatNumber(p.responder_payoff);
  }
  return out;
}

bool Wants(const SweepSpec& spec, SweepOutput o) {
  return std::find(spec.outputs.begin(), spec.outputs.end(), o) !=
         spec.outputs.end();
}

}  // namespace

std::string FormatNumber(double value) {
  if (value == 0.0) value = 0.0;
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.9g", value);
  return buf;
}

ProfileSpec ParseProfileArgument(const std::string& text) {
  const auto split = text.find(';');
  if (split == std::string::npos) {
    throw Error(ErrorKind::kValidationError,
                "profile: expected \"p0,p1,...;r0,r1,...\"");
  }
  auto parse_list = [&](const std::string& part, const char* who) {
    std::vector<double> out;
    std::stringstream ss(part);
    std::string item;
    while (std::getline(ss, item, ',')) {
      char* end = nullptr;
      const double v = std::strtod(item.c_str(), &end);
      if (item.empty() || end == item.c_str() || *end != '\0') {
        throw Error(ErrorKind::kValidationError,
                    std::string("profile.") + who + ": cannot read \"" +
                        item + "\"");
      }
      out.push_back(v);
    }
    return out;
  };
  return ProfileSpec{parse_list(text.substr(0, split), "proposer"),
                     parse_list(text.substr(split + 1), "responder")};
}

CommandResult RunInduce(const GameSpecDocument& doc,
                        const CommandOptions& options) {
  const GameSetup setup = BuildSetup(doc);
  const BimatrixGame& game = setup.game;
  std::ostringstream out;
  if (options.format == OutputFormat::kCsv) {
    out << "row,col,proposer,responder\n";
    for (int i = 0; i < game.rows(); ++i) {
      for (int j = 0; j < game.cols(); ++j) {
        out << i << "," << j << "," << FormatNumber(game.proposer()(i, j))
            << "," << FormatNumber(game.responder()(i, j)) << "\n";
      }
    }
    return {out.str()};
  }
  out << "induced game: " << game.rows() << "x" << game.cols() << "\n";
  out << "proposer moves:";
  for (int i = 0; i < setup.proposer_moves.size(); ++i) {
    out << " " << i << ":" << PermutationText(setup.proposer_moves[i]);
  }
  out << "\nresponder moves:";
  for (int j = 0; j < setup.responder_moves.size(); ++j) {
    out << " " << j << ":" << PermutationText(setup.responder_moves[j]);
  }
  out << "\n";
  constexpr std::size_t kWidth = 26;
  std::string header = Pad("", 6);
  for (int j = 0; j < game.cols(); ++j) {
    header += Pad("R" + std::to_string(j), kWidth);
  }
  out << RightTrim(header) << "\n";
  for (int i = 0; i < game.rows(); ++i) {
    std::string row = Pad("P" + std::to_string(i), 6);
    for (int j = 0; j < game.cols(); ++j) {
      row += Pad(FormatNumber(game.proposer()(i, j)) + " / " +
                     FormatNumber(game.responder()(i, j)),
                 kWidth);
    }
    out << RightTrim(row) << "\n";
  }
  return {out.str()};
}

CommandResult RunClassify(const GameSpecDocument& doc,
                          const CommandOptions& options) {
  const GameSetup setup = BuildSetup(doc);
  const CaseLabel label = ClassifyCase(setup.state);
  const int rank = SchmidtRank(setup.state);
  const ProbabilityTable probs(setup.state);
  std::ostringstream out;
  if (options.format == OutputFormat::kCsv) {
    out << "case,diff_proposer,diff_responder,schmidt_rank\n"
        << CaseName(label.label) << "," << FormatNumber(label.proposer_diff)
        << "," << FormatNumber(label.responder_diff) << "," << rank << "\n";
    return {out.str()};
  }
  out << "case: " << CaseName(label.label) << "\n"
      << "diffs: " << FormatNumber(label.proposer_diff) << " "
      << FormatNumber(label.responder_diff) << "\n"
      << "schmidt_rank: " << rank << "\n"
      << "probabilities:\n";
  for (int k = 0; k < probs.proposer_dim(); ++k) {
    out << " ";
    for (int l = 0; l < probs.responder_dim(); ++l) {
      out << " " << FormatNumber(probs(k, l));
    }
    out << "\n";
  }
  return {out.str()};
}

CommandResult RunNash(const GameSpecDocument& doc,
                      const CommandOptions& options) {
  const GameSetup setup = BuildSetup(doc);
  const double eps = Eps(doc, options);
  const std::vector<EquilibriumProfile> eqs =
      SupportEnumeration(setup.game, eps);
  const bool degenerate =
      std::any_of(eqs.begin(), eqs.end(),
                  [](const EquilibriumProfile& p) { return p.degenerate; });

  std::ostringstream out;
  if (options.format == OutputFormat::kCsv) {
    out << "index,kind,proposer_strategy,responder_strategy,proposer_payoff,"
           "responder_payoff,proposer_regret,responder_regret,degenerate\n";
    for (std::size_t i = 0; i < eqs.size(); ++i) {
      const EquilibriumProfile& p = eqs[i];
      out << i << "," << (p.kind == ProfileKind::kPure ? "pure" : "mixed")
          << "," << StrategyText(p.proposer) << ","
          << StrategyText(p.responder) << "," << FormatNumber(p.proposer_payoff)
          << "," << FormatNumber(p.responder_payoff) << ","
          << FormatNumber(p.proposer_regret) << ","
          << FormatNumber(p.responder_regret) << ","
          << (p.degenerate ? "yes" : "no") << "\n";
    }
  } else {
    out << "equilibria: " << eqs.size() << "\n"
        << "degenerate: " << (degenerate ? "yes" : "no") << "\n";
    for (std::size_t i = 0; i < eqs.size(); ++i) {
      const EquilibriumProfile& p = eqs[i];
      out << "[" << i << "] "
          << (p.kind == ProfileKind::kPure ? "pure" : "mixed")
          << (p.degenerate ? " (degenerate)" : "") << "\n"
          << "  proposer: " << StrategyText(p.proposer) << "\n"
          << "  responder: " << StrategyText(p.responder) << "\n"
          << "  payoffs: " << FormatNumber(p.proposer_payoff) << " "
          << FormatNumber(p.responder_payoff) << "\n"
          << "  regrets: " << FormatNumber(p.proposer_regret) << " "
          << FormatNumber(p.responder_regret) << "\n";
    }
    if (setup.game.rows() == 2 && setup.game.cols() == 2) {
      const int resolution = Resolution(doc.solver, options);
      const auto points = GridOracle(setup.game, resolution, eps);
      out << "grid oracle: resolution " << resolution << ", "
          << points.size() << " certified grid points\n";
    }
  }
  return {out.str(), eqs.empty() ? kExitSolverFailure : kExitOk};
}

CommandResult RunVerify(const GameSpecDocument& doc,
                        const CommandOptions& options,
                        const std::optional<ProfileSpec>& profile) {
  const std::optional<ProfileSpec>& chosen = profile ? profile : doc.profile;
  if (!chosen) {
    throw Error(ErrorKind::kValidationError,
                "profile: missing (pass --profile or add a profile block)");
  }
  GameSpecDocument with_profile = doc;
  with_profile.profile = chosen;
  // Re-validate the profile against the game.
  ParseGameSpec(RenderGameSpec(with_profile));

  const GameSetup setup = BuildSetup(doc);
  const auto to_vec = [](const std::vector<double>& w) {
    return Eigen::Map<const Eigen::VectorXd>(
        w.data(), static_cast<Eigen::Index>(w.size()));
  };
  const EquilibriumProfile cert = VerifyEquilibrium(
      setup.game, MixedStrategy(to_vec(chosen->proposer)),
      MixedStrategy(to_vec(chosen->responder)), Eps(doc, options));

  std::ostringstream out;
  if (options.format == OutputFormat::kCsv) {
    out << "certified,eps,proposer_strategy,responder_strategy,"
           "proposer_payoff,responder_payoff,proposer_regret,responder_regret\n"
        << (cert.certified ? "yes" : "no") << "," << FormatNumber(cert.eps)
        << "," << StrategyText(cert.proposer) << ","
        << StrategyText(cert.responder) << ","
        << FormatNumber(cert.proposer_payoff) << ","
        << FormatNumber(cert.responder_payoff) << ","
        << FormatNumber(cert.proposer_regret) << ","
        << FormatNumber(cert.responder_regret) << "\n";
    return {out.str()};
  }
  out << "certified: " << (cert.certified ? "yes" : "no") << "\n"
      << "eps: " << FormatNumber(cert.eps) << "\n"
      << "proposer: " << StrategyText(cert.proposer) << "\n"
      << "responder: " << StrategyText(cert.responder) << "\n"
      << "payoffs: " << FormatNumber(cert.proposer_payoff) << " "
      << FormatNumber(cert.responder_payoff) << "\n"
      << "regrets: " << FormatNumber(cert.proposer_regret) << " "
      << FormatNumber(cert.responder_regret) << "\n";
  return {out.str()};
}

CommandResult RunSweep(const SweepSpec& spec, const CommandOptions& options) {
  const double eps = options.eps.value_or(spec.solver.eps);
  const PayoffTable payoffs = BuildPayoffs(spec.payoffs);
  const bool want_case = Wants(spec, SweepOutput::kCase);
  const bool want_eq = Wants(spec, SweepOutput::kEquilibria) ||
                       Wants(spec, SweepOutput::kPayoffs);
  const bool want_payoffs = Wants(spec, SweepOutput::kPayoffs);

  std::ostringstream out;
  out << "theta";
  for (int k = 0; k < payoffs.proposer_dim(); ++k) {
    for (int l = 0; l < payoffs.responder_dim(); ++l) {
      out << ",t_" << k << "_" << l;
    }
  }
  if (want_case) out << ",case,diff_proposer,diff_responder";
  if (want_eq) out << ",n_equilibria,degenerate,equilibria";
  out << "\n";

  int exit_code = kExitOk;
  for (double theta : spec.Thetas()) {
    const GameSetup setup =
        BuildSetup(spec.payoffs, BellRecipe{theta, spec.first, spec.second},
                   spec.proposer_moves, spec.responder_moves);
    const ProbabilityTable probs(setup.state);
    out << FormatNumber(theta);
    for (int k = 0; k < probs.proposer_dim(); ++k) {
      for (int l = 0; l < probs.responder_dim(); ++l) {
        out << "," << FormatNumber(probs(k, l));
      }
    }
    if (want_case) {
      if (setup.state.proposer_dim() == 2 && setup.state.responder_dim() == 2) {
        const CaseLabel label = ClassifyCase(setup.state);
        out << "," << CaseName(label.label) << ","
            << FormatNumber(label.proposer_diff) << ","
            << FormatNumber(label.responder_diff);
      } else {
        out << ",n/a,,";
      }
    }
    if (want_eq) {
      const auto eqs = SupportEnumeration(setup.game, eps);
      if (eqs.empty()) exit_code = kExitSolverFailure;
      const bool degenerate =
          std::any_of(eqs.begin(), eqs.end(),
                      [](const EquilibriumProfile& p) { return p.degenerate; });
      out << "," << eqs.size() << "," << (degenerate ? "yes" : "no") << ",";
      for (std::size_t i = 0; i < eqs.size(); ++i) {
        if (i > 0) out << ";";
        out << SweepEntry(eqs[i], want_payoffs);
      }
    }
    out << "\n";
  }
  return {out.str(), exit_code};
}

int ExitCodeFor(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kParseError:
    case ErrorKind::kValidationError:
      return kExitInvalidInput;
    default:
      return kExitSolverFailure;
  }
}

}  // namespace rqg::cli
