// Copyright 2026 The metriclat Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "metriclat/function_lattices.h"

#include <algorithm>
#include <map>
#include <set>

#include "metriclat/error.h"
#include "metriclat/ultravaluation.h"

namespace metriclat {

void FiniteMetricSpace::Validate() const {
  const std::size_t n = points.size();
  if (n == 0) throw Error(ErrorCode::kInvalidArgument, "metric space is empty");
  if (dist.size() != n) {
    throw Error(ErrorCode::kInvalidArgument, "distance matrix has wrong size");
  }
  for (const auto& row : dist) {
    if (row.size() != n) {
      throw Error(ErrorCode::kInvalidArgument, "distance matrix is not square");
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    if (dist[x][x] != 0) {
      throw Error(ErrorCode::kInvalidArgument,
                  "dist(" + points[x] + "," + points[x] + ") != 0");
    }
    for (std::size_t y = 0; y < n; ++y) {
      if (x != y && dist[x][y] <= 0) {
        throw Error(ErrorCode::kInvalidArgument,
                    "dist(" + points[x] + "," + points[y] + ") must be > 0");
      }
      if (dist[x][y] != dist[y][x]) {
        throw Error(ErrorCode::kInvalidArgument, "distance is not symmetric");
      }
      for (std::size_t z = 0; z < n; ++z) {
        if (dist[x][y] > dist[x][z] + dist[z][y]) {
          throw Error(ErrorCode::kInvalidArgument,
                      "triangle inequality fails at " + points[x] + "," +
                          points[z] + "," + points[y]);
        }
      }
    }
  }
  if (basepoint && *basepoint >= n) {
    throw Error(ErrorCode::kInvalidArgument, "basepoint out of range");
  }
}

unsigned GridLipschitzLattice::levels() const {
  Rational k = max / step;
  return static_cast<unsigned>(numerator(k));
}

namespace {

bool IsMultiple(const Rational& value, const Rational& step) {
  return denominator(Rational(value / step)) == 1;
}

std::string FunctionLabel(std::span<const Rational> values) {
  std::string s = "(";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) s += ",";
    s += FormatRational(values[i]);
  }
  return s + ")";
}

}  // namespace

GridLipschitzLattice BuildLipschitzLattice(FiniteMetricSpace space,
                                           const Rational& step,
                                           const Rational& max,
                                           std::vector<Rational> weights) {
  space.Validate();
  const std::size_t n = space.size();
  if (step <= 0) throw Error(ErrorCode::kInvalidArgument, "step must be > 0");
  if (max <= 0) throw Error(ErrorCode::kInvalidArgument, "max must be > 0");
  if (!IsMultiple(max, step)) {
    throw Error(ErrorCode::kGridMismatch,
                "max " + FormatRational(max) + " is not a multiple of step " +
                    FormatRational(step));
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (!IsMultiple(space.dist[x][y], step)) {
        throw Error(ErrorCode::kGridMismatch,
                    "dist(" + space.points[x] + "," + space.points[y] +
                        ") = " + FormatRational(space.dist[x][y]) +
                        " is not a multiple of step " + FormatRational(step));
      }
    }
  }
  if (weights.empty()) weights.assign(n, Rational(1));
  if (weights.size() != n) {
    throw Error(ErrorCode::kInvalidArgument, "one weight per point expected");
  }
  for (const Rational& m : weights) {
    if (m <= 0) throw Error(ErrorCode::kInvalidArgument, "weights must be > 0");
  }
  Rational k_rational = max / step;
  if (numerator(k_rational) > 4095) {
    throw Error(ErrorCode::kTooLarge, "too many grid levels");
  }
  const unsigned k = static_cast<unsigned>(numerator(k_rational));
  std::size_t total = 1;
  for (std::size_t x = 0; x < n; ++x) {
    total *= k + 1;
    if (total > FiniteLattice::kMaxElements) {
      throw Error(ErrorCode::kTooLarge,
                  "grid has more than " +
                      std::to_string(FiniteLattice::kMaxElements) +
                      " functions before the Lipschitz filter");
    }
  }
  // Distances in units of δ.
  std::vector<std::vector<Integer>> units(n, std::vector<Integer>(n));
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      units[x][y] = numerator(Rational(space.dist[x][y] / step));
    }
  }
  std::vector<std::vector<Rational>> values;
  std::vector<unsigned> digits(n, 0);
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t c = code;
    for (std::size_t x = n; x-- > 0;) {
      digits[x] = static_cast<unsigned>(c % (k + 1));
      c /= k + 1;
    }
    bool lipschitz = true;
    for (std::size_t x = 0; x < n && lipschitz; ++x) {
      for (std::size_t y = x + 1; y < n; ++y) {
        long diff = static_cast<long>(digits[x]) - static_cast<long>(digits[y]);
        if (Integer(diff < 0 ? -diff : diff) > units[x][y]) {
          lipschitz = false;
          break;
        }
      }
    }
    if (!lipschitz) continue;
    std::vector<Rational> f(n);
    for (std::size_t x = 0; x < n; ++x) f[x] = step * digits[x];
    values.push_back(std::move(f));
  }
  std::vector<std::string> labels;
  labels.reserve(values.size());
  for (const auto& f : values) labels.push_back(FunctionLabel(f));
  PointwiseLattice functions = MakePointwiseLattice(
      space.points, std::move(values), std::move(labels));
  return GridLipschitzLattice{std::move(space), step, max, std::move(weights),
                              std::move(functions)};
}

std::vector<Rational> ConeFunction(const FiniteMetricSpace& space,
                                   const LambdaCone& cone) {
  std::vector<Rational> f(space.size());
  for (std::size_t y = 0; y < space.size(); ++y) {
    Rational v = cone.radius - space.dist[cone.center][y];
    f[y] = v > 0 ? v : Rational(0);
  }
  return f;
}

Element LambdaConeElement(const GridLipschitzLattice& lat,
                          const LambdaCone& cone) {
  if (cone.center >= lat.space.size()) {
    throw Error(ErrorCode::kInvalidArgument, "cone center out of range");
  }
  if (cone.radius < 0 || cone.radius > lat.max ||
      !IsMultiple(cone.radius, lat.step)) {
    throw Error(ErrorCode::kInvalidArgument,
                "cone radius " + FormatRational(cone.radius) +
                    " is not a grid value");
  }
  auto f = ConeFunction(lat.space, cone);
  auto e = lat.functions.Find(f);
  if (!e) {
    throw Error(ErrorCode::kGridMismatch,
                "cone " + FunctionLabel(f) + " is missing from the lattice");
  }
  return *e;
}

namespace {

std::vector<Element> Cones(const GridLipschitzLattice& lat,
                           std::optional<std::size_t> skip) {
  std::set<Element> out;
  out.insert(lat.lattice().bottom());
  for (std::size_t x = 0; x < lat.space.size(); ++x) {
    if (skip && *skip == x) continue;
    for (unsigned i = 0; i <= lat.levels(); ++i) {
      out.insert(LambdaConeElement(lat, {x, lat.step * i}));
    }
  }
  return {out.begin(), out.end()};
}

void CheckWeights(const PointwiseLattice& functions,
                  std::span<const Rational> weights) {
  if (weights.size() != functions.points.size()) {
    throw Error(ErrorCode::kMismatch, "one weight per point expected");
  }
}

Rational Abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

}  // namespace

std::vector<Element> LambdaConeElements(const GridLipschitzLattice& lat) {
  return Cones(lat, std::nullopt);
}

std::vector<Element> LambdaConeElementsAwayFromBasepoint(
    const GridLipschitzLattice& lat) {
  if (!lat.space.basepoint) {
    throw Error(ErrorCode::kNoBasepoint, "metric space has no basepoint");
  }
  return Cones(lat, lat.space.basepoint);
}

MetricTable SupMetric(const PointwiseLattice& functions) {
  const std::size_t n = functions.size();
  PairTable d(n);
  for (Element f = 0; f < n; ++f) {
    for (Element g = 0; g < n; ++g) {
      Rational best = 0;
      for (std::size_t x = 0; x < functions.points.size(); ++x) {
        Rational v = Abs(functions.values[f][x] - functions.values[g][x]);
        if (v > best) best = std::move(v);
      }
      d(f, g) = std::move(best);
    }
  }
  return MetricTable::FromRationals(std::move(d), MetricKind::kIntervaluation,
                                    "sup");
}

MetricTable LpMetric(const PointwiseLattice& functions,
                     std::span<const Rational> weights, unsigned p) {
  if (p == 0) throw Error(ErrorCode::kInvalidArgument, "p must be >= 1");
  CheckWeights(functions, weights);
  const std::size_t n = functions.size();
  PairTable d(n);
  for (Element f = 0; f < n; ++f) {
    for (Element g = 0; g < n; ++g) {
      Rational sum = 0;
      for (std::size_t x = 0; x < weights.size(); ++x) {
        sum += weights[x] *
               Pow(Abs(functions.values[f][x] - functions.values[g][x]), p);
      }
      d(f, g) = std::move(sum);
    }
  }
  MetricKind kind = p == 1 ? MetricKind::kValuation : MetricKind::kIntervaluation;
  return MetricTable(SurdTable(std::move(d), p), kind,
                     p == 1 ? "l1" : "lp" + std::to_string(p));
}

MetricTable L1Metric(const PointwiseLattice& functions,
                     std::span<const Rational> weights) {
  return LpMetric(functions, weights, 1);
}

MetricTable L1Metric(const GridLipschitzLattice& lat) {
  return L1Metric(lat.functions, lat.weights);
}

MetricTable LpMetric(const GridLipschitzLattice& lat, unsigned p) {
  return LpMetric(lat.functions, lat.weights, p);
}

Valuation WeightedSumValuation(const PointwiseLattice& functions,
                               std::span<const Rational> weights) {
  CheckWeights(functions, weights);
  std::vector<Rational> v(functions.size());
  for (Element f = 0; f < functions.size(); ++f) {
    for (std::size_t x = 0; x < weights.size(); ++x) {
      v[f] += weights[x] * functions.values[f][x];
    }
  }
  return Valuation(std::move(v));
}

Intervaluation LpIntervaluation(const PointwiseLattice& functions,
                                std::span<const Rational> weights, unsigned p) {
  if (p == 0) throw Error(ErrorCode::kInvalidArgument, "p must be >= 1");
  CheckWeights(functions, weights);
  const std::size_t n = functions.size();
  PairTable w(n);
  for (Element f = 0; f < n; ++f) {
    for (Element g = 0; g < n; ++g) {
      Rational sum = 0;
      for (std::size_t x = 0; x < weights.size(); ++x) {
        Rational diff = functions.values[f][x] - functions.values[g][x];
        if (diff > 0) sum += weights[x] * Pow(diff, p);
      }
      w(f, g) = std::move(sum);
    }
  }
  CombineOp op = p == 1 ? CombineOp::Add() : CombineOp::Lp(p);
  return Intervaluation{SurdTable(std::move(w), p), op};
}

HypographLattice MakeHypographLattice(const PointwiseLattice& functions) {
  std::set<Rational> level_set{Rational(0)};
  for (const auto& f : functions.values) {
    for (const Rational& v : f) {
      if (v < 0) {
        throw Error(ErrorCode::kInvalidArgument,
                    "hypographs need nonnegative functions");
      }
      level_set.insert(v);
    }
  }
  std::vector<Rational> levels(level_set.begin(), level_set.end());
  const std::size_t points = functions.points.size();
  if (points * levels.size() > kMaxAtoms) {
    throw Error(ErrorCode::kTooLarge,
                "hypograph needs " + std::to_string(points * levels.size()) +
                    " atoms, at most " + std::to_string(kMaxAtoms) +
                    " are supported");
  }
  std::vector<std::size_t> atom_point;
  std::vector<Rational> atom_level;
  std::vector<Atom> ground;
  for (std::size_t x = 0; x < points; ++x) {
    for (const Rational& r : levels) {
      atom_point.push_back(x);
      atom_level.push_back(r);
      ground.push_back(
          {"(" + functions.points[x] + "," + FormatRational(r) + ")", {}});
    }
  }
  std::vector<AtomSet> members;
  members.reserve(functions.size());
  for (const auto& f : functions.values) {
    AtomSet set = 0;
    for (std::size_t a = 0; a < ground.size(); ++a) {
      if (atom_level[a] <= f[atom_point[a]]) set |= AtomSet{1} << a;
    }
    members.push_back(set);
  }
  SetLattice sets = SetLattice::FromMembers(std::move(ground), std::move(members));
  return HypographLattice{std::move(atom_point), std::move(atom_level),
                          std::move(sets)};
}

AtomSet Hypograph(const HypographLattice& hyp, Element f) {
  return hyp.sets.member(f);
}

namespace {

MetricTable KappaMetric(const HypographLattice& hyp,
                        const std::function<Rational(std::size_t,
                                                     const Rational&)>& kappa,
                        std::string note) {
  KappaWeights weights;
  for (std::size_t a = 0; a < hyp.atom_point.size(); ++a) {
    weights.kappa.push_back(kappa(hyp.atom_point[a], hyp.atom_level[a]));
  }
  Ultravaluation u = FromKappa(hyp.sets, weights);
  MetricTable d = MetricFromUltravaluation(hyp.sets.lattice(), u);
  return MetricTable(d.distances(), MetricKind::kUltravaluation,
                     std::move(note));
}

}  // namespace

MetricTable PeakMetric(const PointwiseLattice& functions) {
  HypographLattice hyp = MakeHypographLattice(functions);
  return KappaMetric(
      hyp, [](std::size_t, const Rational& r) { return r; }, "peak");
}

MetricTable BasepointMetric(const GridLipschitzLattice& lat,
                            BasepointMode mode) {
  if (!lat.space.basepoint) {
    throw Error(ErrorCode::kNoBasepoint, "metric space has no basepoint");
  }
  const std::size_t x0 = *lat.space.basepoint;
  HypographLattice hyp = MakeHypographLattice(lat.functions);
  if (mode == BasepointMode::kOuter) {
    return KappaMetric(
        hyp,
        [&](std::size_t x, const Rational&) { return lat.space.dist[x][x0]; },
        "basepoint-outer");
  }
  return KappaMetric(
      hyp,
      [&](std::size_t x, const Rational&) {
        return Rational(1) / (1 + lat.space.dist[x][x0]);
      },
      "basepoint-inner; kappa = 1/(1+dist) in place of exp(-dist)");
}

MetricTable LipschitzConstantMetric(const GridLipschitzLattice& lat) {
  const std::size_t n = lat.size();
  const std::size_t points = lat.space.size();
  PairTable d(n);
  for (Element f = 0; f < n; ++f) {
    for (Element g = 0; g < n; ++g) {
      Rational best = 0;
      for (std::size_t x = 0; x < points; ++x) {
        for (std::size_t y = x + 1; y < points; ++y) {
          Rational delta = (lat.value(f, x) - lat.value(g, x)) -
                           (lat.value(f, y) - lat.value(g, y));
          Rational q = Abs(delta) / lat.space.dist[x][y];
          if (q > best) best = std::move(q);
        }
      }
      d(f, g) = std::move(best);
    }
  }
  return MetricTable::FromRationals(std::move(d), MetricKind::kRaw,
                                    "lipschitz-constant");
}

}  // namespace metriclat
