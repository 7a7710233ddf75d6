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

#include "rqg/document.h"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <set>
#include <string>

#include <nlohmann/json.hpp>

#include "rqg/error.h"

namespace rqg::cli {
namespace {

using nlohmann::json;

[[noreturn]] void Fail(const std::string& path, const std::string& reason) {
  throw Error(ErrorKind::kValidationError, path + ": " + reason);
}

// Re-raises a library error as a ValidationError addressed to `path`.
template <typename Fn>
auto AtField(const std::string& path, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const Error& e) {
    Fail(path, e.what());
  }
}

std::string Join(const std::string& path, const std::string& key) {
  return path.empty() ? key : path + "." + key;
}

std::string Index(const std::string& path, std::size_t i) {
  return path + "[" + std::to_string(i) + "]";
}

const json& RequireObject(const json& j, const std::string& path) {
  if (!j.is_object()) Fail(path, "expected an object");
  return j;
}

const json& RequireArray(const json& j, const std::string& path) {
  if (!j.is_array()) Fail(path, "expected an array");
  return j;
}

void RejectUnknownKeys(const json& obj, const std::string& path,
                       std::initializer_list<std::string_view> allowed) {
  for (const auto& [key, value] : obj.items()) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      Fail(Join(path, key), "unknown field");
    }
  }
}

const json& Field(const json& obj, const std::string& path,
                  const std::string& key) {
  auto it = obj.find(key);
  if (it == obj.end()) Fail(Join(path, key), "missing");
  return *it;
}

double Number(const json& j, const std::string& path) {
  if (!j.is_number()) Fail(path, "expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) Fail(path, "expected a finite number");
  return v;
}

int Integer(const json& j, const std::string& path) {
  if (!j.is_number_integer()) Fail(path, "expected an integer");
  return j.get<int>();
}

double Angle(const json& j, const std::string& path) {
  if (j.is_string()) {
    return AtField(path, [&] { return ParseAngle(j.get<std::string>()); });
  }
  return Number(j, path);
}

RealMatrix ParseRealMatrix(const json& j, const std::string& path) {
  RequireArray(j, path);
  if (j.empty()) Fail(path, "empty matrix");
  const std::size_t cols = RequireArray(j[0], Index(path, 0)).size();
  if (cols == 0) Fail(Index(path, 0), "empty row");
  RealMatrix out(static_cast<Eigen::Index>(j.size()),
                 static_cast<Eigen::Index>(cols));
  for (std::size_t r = 0; r < j.size(); ++r) {
    const json& row = RequireArray(j[r], Index(path, r));
    if (row.size() != cols) Fail(Index(path, r), "ragged matrix");
    for (std::size_t c = 0; c < cols; ++c) {
      out(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
          Number(row[c], Index(Index(path, r), c));
    }
  }
  return out;
}

Amplitude ParseAmplitude(const json& j, const std::string& path) {
  if (j.is_number()) return {Number(j, path), 0.0};
  if (!j.is_array() || j.size() != 2) Fail(path, "expected [re, im]");
  return {Number(j[0], Index(path, 0)), Number(j[1], Index(path, 1))};
}

AmplitudeMatrix ParseAmplitudeMatrix(const json& j, const std::string& path) {
  RequireArray(j, path);
  if (j.empty()) Fail(path, "empty matrix");
  const std::size_t cols = RequireArray(j[0], Index(path, 0)).size();
  AmplitudeMatrix out(static_cast<Eigen::Index>(j.size()),
                      static_cast<Eigen::Index>(cols));
  for (std::size_t r = 0; r < j.size(); ++r) {
    const json& row = RequireArray(j[r], Index(path, r));
    if (row.size() != cols) Fail(Index(path, r), "ragged matrix");
    for (std::size_t c = 0; c < cols; ++c) {
      out(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
          ParseAmplitude(row[c], Index(Index(path, r), c));
    }
  }
  return out;
}

BasisIndex ParseBasisIndex(const json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 2) Fail(path, "expected [k, l]");
  return {Integer(j[0], Index(path, 0)), Integer(j[1], Index(path, 1))};
}

std::vector<Permutation> ParsePermutations(const json& j,
                                           const std::string& path) {
  RequireArray(j, path);
  std::vector<Permutation> perms;
  for (std::size_t m = 0; m < j.size(); ++m) {
    const json& row = RequireArray(j[m], Index(path, m));
    Permutation perm;
    for (std::size_t k = 0; k < row.size(); ++k) {
      perm.push_back(Integer(row[k], Index(Index(path, m), k)));
    }
    perms.push_back(std::move(perm));
  }
  return perms;
}

std::vector<double> ParseVector(const json& j, const std::string& path) {
  RequireArray(j, path);
  std::vector<double> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    out.push_back(Number(j[i], Index(path, i)));
  }
  return out;
}

PayoffSource ParsePayoffSource(const json& j, const std::string& path) {
  RequireObject(j, path);
  RejectUnknownKeys(j, path, {"ultimatum", "ultimatum_offers", "matrices"});
  if (j.size() != 1) {
    Fail(path, "expected exactly one of ultimatum, ultimatum_offers, matrices");
  }
  if (j.contains("ultimatum")) {
    const std::string p = Join(path, "ultimatum");
    const json& u = RequireObject(j["ultimatum"], p);
    RejectUnknownKeys(u, p, {"a", "b", "c"});
    return UltimatumTriple{Number(Field(u, p, "a"), Join(p, "a")),
                           Number(Field(u, p, "b"), Join(p, "b")),
                           Number(Field(u, p, "c"), Join(p, "c"))};
  }
  if (j.contains("ultimatum_offers")) {
    const std::string p = Join(path, "ultimatum_offers");
    const json& u = RequireObject(j["ultimatum_offers"], p);
    RejectUnknownKeys(u, p, {"total", "offers"});
    OfferList list;
    list.params.total = Integer(Field(u, p, "total"), Join(p, "total"));
    const json& offers =
        RequireArray(Field(u, p, "offers"), Join(p, "offers"));
    for (std::size_t i = 0; i < offers.size(); ++i) {
      list.params.offers.push_back(
          Integer(offers[i], Index(Join(p, "offers"), i)));
    }
    return list;
  }
  const std::string p = Join(path, "matrices");
  const json& m = RequireObject(j["matrices"], p);
  RejectUnknownKeys(m, p, {"proposer", "responder"});
  return ExplicitPayoffs{
      ParseRealMatrix(Field(m, p, "proposer"), Join(p, "proposer")),
      ParseRealMatrix(Field(m, p, "responder"), Join(p, "responder"))};
}

StateSource ParseStateSource(const json& j, const std::string& path) {
  RequireObject(j, path);
  RejectUnknownKeys(j, path, {"amplitudes", "normalize", "bell"});
  const bool has_amps = j.contains("amplitudes");
  const bool has_bell = j.contains("bell");
  if (has_amps == has_bell) {
    Fail(path, "expected exactly one of amplitudes, bell");
  }
  if (has_amps) {
    ExplicitAmplitudes amps;
    amps.raw = ParseAmplitudeMatrix(j["amplitudes"], Join(path, "amplitudes"));
    if (j.contains("normalize")) {
      if (!j["normalize"].is_boolean()) {
        Fail(Join(path, "normalize"), "expected true or false");
      }
      amps.normalize = j["normalize"].get<bool>();
    }
    return amps;
  }
  if (j.contains("normalize")) {
    Fail(Join(path, "normalize"), "only applies to amplitudes");
  }
  const std::string p = Join(path, "bell");
  const json& b = RequireObject(j["bell"], p);
  RejectUnknownKeys(b, p, {"theta", "first", "second"});
  return BellRecipe{Angle(Field(b, p, "theta"), Join(p, "theta")),
                    ParseBasisIndex(Field(b, p, "first"), Join(p, "first")),
                    ParseBasisIndex(Field(b, p, "second"), Join(p, "second"))};
}

void ParseMoves(const json& root, std::optional<std::vector<Permutation>>* p,
                std::optional<std::vector<Permutation>>* r) {
  if (!root.contains("moves")) return;
  const json& moves = RequireObject(root["moves"], "moves");
  RejectUnknownKeys(moves, "moves", {"proposer", "responder"});
  if (moves.contains("proposer")) {
    *p = ParsePermutations(moves["proposer"], "moves.proposer");
  }
  if (moves.contains("responder")) {
    *r = ParsePermutations(moves["responder"], "moves.responder");
  }
}

SolverOptions ParseSolver(const json& root) {
  SolverOptions opts;
  if (!root.contains("solver")) return opts;
  const json& s = RequireObject(root["solver"], "solver");
  RejectUnknownKeys(s, "solver", {"eps", "resolution"});
  if (s.contains("eps")) {
    opts.eps = Number(s["eps"], "solver.eps");
    if (opts.eps < 0.0) Fail("solver.eps", "must be nonnegative");
  }
  if (s.contains("resolution")) {
    opts.resolution = Integer(s["resolution"], "solver.resolution");
    if (opts.resolution < 1) Fail("solver.resolution", "must be positive");
  }
  return opts;
}

json Parse(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    // e.byte is 1-based and points just past the offending character.
    const std::size_t offset =
        std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    int line = 1;
    int column = 1;
    for (std::size_t i = 0; i < offset; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    std::string detail = e.what();
    if (auto pos = detail.find("parse error"); pos != std::string::npos) {
      detail = detail.substr(pos);
    }
    throw Error(ErrorKind::kParseError, "line " + std::to_string(line) +
                                            ", column " +
                                            std::to_string(column) + ": " +
                                            detail);
  }
}

json RenderMatrix(const RealMatrix& m) {
  json out = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    out.push_back(std::move(row));
  }
  return out;
}

json RenderPayoffs(const PayoffSource& source) {
  return std::visit(
      [](const auto& s) -> json {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, UltimatumTriple>) {
          return {{"ultimatum", {{"a", s.a}, {"b", s.b}, {"c", s.c}}}};
        } else if constexpr (std::is_same_v<T, OfferList>) {
          return {{"ultimatum_offers",
                   {{"total", s.params.total}, {"offers", s.params.offers}}}};
        } else {
          return {{"matrices",
                   {{"proposer", RenderMatrix(s.proposer)},
                    {"responder", RenderMatrix(s.responder)}}}};
        }
      },
      source);
}

json RenderBasis(BasisIndex b) { return json::array({b.proposer, b.responder}); }

json RenderMoves(const std::optional<std::vector<Permutation>>& p,
                 const std::optional<std::vector<Permutation>>& r) {
  json moves = json::object();
  if (p) moves["proposer"] = *p;
  if (r) moves["responder"] = *r;
  return moves;
}

void CheckProfile(const ProfileSpec& profile, const GameSetup& setup) {
  auto check = [](const std::vector<double>& w, int expected,
                  const std::string& path) {
    if (static_cast<int>(w.size()) != expected) {
      Fail(path, "expected " + std::to_string(expected) + " weights, got " +
                     std::to_string(w.size()));
    }
    AtField(path, [&] {
      return MixedStrategy(Eigen::Map<const Eigen::VectorXd>(
          w.data(), static_cast<Eigen::Index>(w.size())));
    });
  };
  check(profile.proposer, setup.game.rows(), "profile.proposer");
  check(profile.responder, setup.game.cols(), "profile.responder");
}

}  // namespace

std::vector<double> SweepSpec::Thetas() const {
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    out.push_back(i == count - 1
                      ? stop
                      : start + (stop - start) * i / (count - 1));
  }
  return out;
}

double ParseAngle(std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) {
      s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
    }
  }
  auto bad = [&]() -> double {
    throw Error(ErrorKind::kValidationError,
                "cannot read angle \"" + std::string(text) + "\"");
  };
  if (s.empty()) return bad();

  std::size_t pos = 0;
  double sign = 1.0;
  if (s[pos] == '+' || s[pos] == '-') {
    sign = s[pos] == '-' ? -1.0 : 1.0;
    ++pos;
  }
  auto read_number = [&](double* out) {
    const char* begin = s.c_str() + pos;
    if (*begin == '+' || *begin == '-') return false;
    char* end = nullptr;
    *out = std::strtod(begin, &end);
    if (end == begin || !std::isfinite(*out)) return false;
    pos += static_cast<std::size_t>(end - begin);
    return true;
  };

  double value = 1.0;
  bool has_pi = false;
  if (s.compare(pos, 2, "pi") == 0) {
    has_pi = true;
    pos += 2;
  } else {
    if (!read_number(&value)) return bad();
    if (pos < s.size() && s[pos] == '*') {
      ++pos;
      if (s.compare(pos, 2, "pi") != 0) return bad();
      has_pi = true;
      pos += 2;
    }
  }
  if (has_pi) value *= std::numbers::pi;
  if (pos < s.size() && s[pos] == '/') {
    ++pos;
    double denom = 0.0;
    if (!read_number(&denom) || denom == 0.0) return bad();
    value /= denom;
  }
  if (pos != s.size()) return bad();
  return sign * value;
}

PayoffTable BuildPayoffs(const PayoffSource& source) {
  return std::visit(
      [](const auto& s) -> PayoffTable {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, UltimatumTriple>) {
          return Ultimatum2x2(s.a, s.b, s.c);
        } else if constexpr (std::is_same_v<T, OfferList>) {
          return UltimatumGeneral(s.params);
        } else {
          return PayoffTable(s.proposer, s.responder);
        }
      },
      source);
}

GameSetup BuildSetup(const PayoffSource& payoff_source,
                     const StateSource& state_source,
                     const std::optional<std::vector<Permutation>>& proposer,
                     const std::optional<std::vector<Permutation>>& responder) {
  PayoffTable payoffs =
      AtField("payoffs", [&] { return BuildPayoffs(payoff_source); });
  const int dp = payoffs.proposer_dim();
  const int dr = payoffs.responder_dim();

  QuantumState state = std::visit(
      [&](const auto& s) -> QuantumState {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, ExplicitAmplitudes>) {
          if (s.raw.rows() != dp || s.raw.cols() != dr) {
            Fail("state.amplitudes",
                 "DimensionMismatch: amplitudes are " +
                     std::to_string(s.raw.rows()) + "x" +
                     std::to_string(s.raw.cols()) + ", payoffs are " +
                     std::to_string(dp) + "x" + std::to_string(dr));
          }
          return AtField("state.amplitudes", [&] {
            return StateFromAmplitudes(s.raw, s.normalize);
          });
        } else {
          return AtField("state.bell", [&] {
            return BellLike(s.theta, s.first, s.second, dp, dr);
          });
        }
      },
      state_source);

  MoveSet pm = AtField("moves.proposer", [&] {
    return proposer ? MoveSet(dp, *proposer) : CyclicMoveSet(dp);
  });
  MoveSet rm = AtField("moves.responder", [&] {
    return responder ? MoveSet(dr, *responder) : CyclicMoveSet(dr);
  });
  BimatrixGame game =
      AtField("state", [&] { return InduceGame(state, payoffs, pm, rm); });
  return GameSetup{std::move(state), std::move(payoffs), std::move(pm),
                   std::move(rm), std::move(game)};
}

GameSetup BuildSetup(const GameSpecDocument& doc) {
  return BuildSetup(doc.payoffs, doc.state, doc.proposer_moves,
                    doc.responder_moves);
}

GameSpecDocument ParseGameSpec(std::string_view text) {
  const json root = Parse(text);
  RequireObject(root, "document");
  RejectUnknownKeys(root, "", {"payoffs", "state", "moves", "solver", "profile"});
  if (!root.contains("payoffs")) Fail("payoffs", "missing payoff block");
  if (!root.contains("state")) Fail("state", "missing state block");

  GameSpecDocument doc;
  doc.payoffs = ParsePayoffSource(root["payoffs"], "payoffs");
  doc.state = ParseStateSource(root["state"], "state");
  ParseMoves(root, &doc.proposer_moves, &doc.responder_moves);
  doc.solver = ParseSolver(root);
  if (root.contains("profile")) {
    const json& p = RequireObject(root["profile"], "profile");
    RejectUnknownKeys(p, "profile", {"proposer", "responder"});
    doc.profile = ProfileSpec{
        ParseVector(Field(p, "profile", "proposer"), "profile.proposer"),
        ParseVector(Field(p, "profile", "responder"), "profile.responder")};
  }

  const GameSetup setup = BuildSetup(doc);
  if (doc.profile) CheckProfile(*doc.profile, setup);
  return doc;
}

SweepSpec ParseSweepSpec(std::string_view text) {
  const json root = Parse(text);
  RequireObject(root, "document");
  RejectUnknownKeys(root, "", {"payoffs", "sweep", "outputs", "moves", "solver"});
  if (!root.contains("payoffs")) Fail("payoffs", "missing payoff block");
  if (!root.contains("sweep")) Fail("sweep", "missing sweep block");

  SweepSpec spec;
  spec.payoffs = ParsePayoffSource(root["payoffs"], "payoffs");
  const json& sweep = RequireObject(root["sweep"], "sweep");
  RejectUnknownKeys(sweep, "sweep", {"theta", "first", "second"});
  const json& theta =
      RequireObject(Field(sweep, "sweep", "theta"), "sweep.theta");
  RejectUnknownKeys(theta, "sweep.theta", {"start", "stop", "count"});
  spec.start = Angle(Field(theta, "sweep.theta", "start"), "sweep.theta.start");
  spec.stop = Angle(Field(theta, "sweep.theta", "stop"), "sweep.theta.stop");
  spec.count = Integer(Field(theta, "sweep.theta", "count"), "sweep.theta.count");
  if (spec.count < 2) Fail("sweep.theta.count", "must be at least 2");
  if (!(spec.start < spec.stop)) {
    Fail("sweep.theta", "start must be less than stop");
  }
  spec.first = ParseBasisIndex(Field(sweep, "sweep", "first"), "sweep.first");
  spec.second = ParseBasisIndex(Field(sweep, "sweep", "second"), "sweep.second");

  if (root.contains("outputs")) {
    const json& outs = RequireArray(root["outputs"], "outputs");
    spec.outputs.clear();
    std::set<SweepOutput> seen;
    for (std::size_t i = 0; i < outs.size(); ++i) {
      const std::string path = Index("outputs", i);
      if (!outs[i].is_string()) Fail(path, "expected a string");
      const std::string name = outs[i].get<std::string>();
      SweepOutput out;
      if (name == "case") {
        out = SweepOutput::kCase;
      } else if (name == "equilibria") {
        out = SweepOutput::kEquilibria;
      } else if (name == "payoffs") {
        out = SweepOutput::kPayoffs;
      } else {
        Fail(path, "unknown output \"" + name + "\"");
      }
      if (!seen.insert(out).second) Fail(path, "duplicate output");
      spec.outputs.push_back(out);
    }
  }
  ParseMoves(root, &spec.proposer_moves, &spec.responder_moves);
  spec.solver = ParseSolver(root);

  BuildSetup(spec.payoffs, BellRecipe{spec.start, spec.first, spec.second},
             spec.proposer_moves, spec.responder_moves);
  return spec;
}

std::string RenderGameSpec(const GameSpecDocument& doc) {
  json root;
  root["payoffs"] = RenderPayoffs(doc.payoffs);
  root["state"] = std::visit(
      [](const auto& s) -> json {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, ExplicitAmplitudes>) {
          json rows = json::array();
          for (Eigen::Index r = 0; r < s.raw.rows(); ++r) {
            json row = json::array();
            for (Eigen::Index c = 0; c < s.raw.cols(); ++c) {
              row.push_back({s.raw(r, c).real(), s.raw(r, c).imag()});
            }
            rows.push_back(std::move(row));
          }
          return {{"amplitudes", rows}, {"normalize", s.normalize}};
        } else {
          return {{"bell",
                   {{"theta", s.theta},
                    {"first", RenderBasis(s.first)},
                    {"second", RenderBasis(s.second)}}}};
        }
      },
      doc.state);
  if (doc.proposer_moves || doc.responder_moves) {
    root["moves"] = RenderMoves(doc.proposer_moves, doc.responder_moves);
  }
  root["solver"] = {{"eps", doc.solver.eps},
                    {"resolution", doc.solver.resolution}};
  if (doc.profile) {
    root["profile"] = {{"proposer", doc.profile->proposer},
                       {"responder", doc.profile->responder}};
  }
  return root.dump(2) + "\n";
}

std::string RenderSweepSpec(const SweepSpec& spec) {
  json root;
  root["payoffs"] = RenderPayoffs(spec.payoffs);
  root["sweep"] = {
      {"theta",
       {{"start", spec.start}, {"stop", spec.stop}, {"count", spec.count}}},
      {"first", RenderBasis(spec.first)},
      {"second", RenderBasis(spec.second)}};
  json outs = json::array();
  for (SweepOutput o : spec.outputs) {
    outs.push_back(o == SweepOutput::kCase         ? "case"
                   : o == SweepOutput::kEquilibria ? "equilibria"
                                                   : "payoffs");
  }
  root["outputs"] = outs;
  if (spec.proposer_moves || spec.responder_moves) {
    root["moves"] = RenderMoves(spec.proposer_moves, spec.responder_moves);
  }
  root["solver"] = {{"eps", spec.solver.eps},
                    {"resolution", spec.solver.resolution}};
  return root.dump(2) + "\n";
}

}  // namespace rqg::cli
