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

#ifndef METRICLAT_FUNCTION_LATTICES_H_
#define METRICLAT_FUNCTION_LATTICES_H_

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "metriclat/generators.h"
#include "metriclat/intervaluation.h"
#include "metriclat/metric.h"
#include "metriclat/valuation.h"

namespace metriclat {

struct FiniteMetricSpace {
  std::vector<std::string> points;
  std::vector<std::vector<Rational>> dist;
  std::optional<std::size_t> basepoint;

  std::size_t size() const { return points.size(); }

  // Throws Error(kInvalidArgument) unless dist is a metric on the points.
  void Validate() const;
};

// All maps points -> {0, δ, ..., M} with |f(x) - f(y)| <= dist(x,y).
struct GridLipschitzLattice {
  FiniteMetricSpace space;
  Rational step;
  Rational max;
  std::vector<Rational> weights;  // μ, one positive weight per point
  PointwiseLattice functions;

  const FiniteLattice& lattice() const { return functions.lattice; }
  std::size_t size() const { return functions.size(); }
  unsigned levels() const;  // M / δ
  const Rational& value(Element f, std::size_t x) const {
    return functions.values[f][x];
  }
};

// Throws Error(kGridMismatch) when M or a distance is not a multiple of δ and
// Error(kTooLarge) when (M/δ + 1)^|points| exceeds the element cap. Empty
// weights mean μ ≡ 1.
GridLipschitzLattice BuildLipschitzLattice(FiniteMetricSpace space,
                                           const Rational& step,
                                           const Rational& max,
                                           std::vector<Rational> weights = {});

struct LambdaCone {
  std::size_t center;
  Rational radius;
};

// y ↦ 0 ∨ (r − dist(x,y)).
std::vector<Rational> ConeFunction(const FiniteMetricSpace& space,
                                   const LambdaCone& cone);

// Throws Error(kInvalidArgument) for radii off the grid or above M.
Element LambdaConeElement(const GridLipschitzLattice& lat,
                          const LambdaCone& cone);

// Distinct elements Λ(x, r) over all centers and grid radii, ascending.
std::vector<Element> LambdaConeElements(const GridLipschitzLattice& lat);

// Same, restricted to centers other than the basepoint (bottom included).
std::vector<Element> LambdaConeElementsAwayFromBasepoint(
    const GridLipschitzLattice& lat);

// max_x |f(x) − g(x)|.
MetricTable SupMetric(const PointwiseLattice& functions);
// Σ μ(x) |f(x) − g(x)|.
MetricTable L1Metric(const PointwiseLattice& functions,
                     std::span<const Rational> weights);
MetricTable L1Metric(const GridLipschitzLattice& lat);
// (Σ μ(x) |f(x) − g(x)|^p)^(1/p), stored as its p-th power.
MetricTable LpMetric(const PointwiseLattice& functions,
                     std::span<const Rational> weights, unsigned p);
MetricTable LpMetric(const GridLipschitzLattice& lat, unsigned p);

// v(f) = Σ μ(x) f(x).
Valuation WeightedSumValuation(const PointwiseLattice& functions,
                               std::span<const Rational> weights);

// w(f,g) = (Σ μ(x) (0 ∨ (f(x) − g(x)))^p)^(1/p) with op LP(p).
Intervaluation LpIntervaluation(const PointwiseLattice& functions,
                                std::span<const Rational> weights, unsigned p);

// Hypographs {(x, r) : r ≤ f(x)} over the atoms X × levels, where the levels
// are 0 together with every value taken by some function. Member e of the
// result is the hypograph of element e. Atom (x, r) is named "(x,r)".
struct HypographLattice {
  std::vector<std::size_t> atom_point;  // per atom
  std::vector<Rational> atom_level;     // per atom
  SetLattice sets;
};

HypographLattice MakeHypographLattice(const PointwiseLattice& functions);
AtomSet Hypograph(const HypographLattice& hyp, Element f);

// d(f,g) = 0 ∨ max{f(x) ∨ g(x) : f(x) ≠ g(x)}, via κ(x, r) = r.
MetricTable PeakMetric(const PointwiseLattice& functions);

enum class BasepointMode { kOuter, kInner };

// κ(x, r) = dist(x, x0) (outer) or 1 / (1 + dist(x, x0)) (inner).
// Throws Error(kNoBasepoint) when the space has none.
MetricTable BasepointMetric(const GridLipschitzLattice& lat,
                            BasepointMode mode);

// Lipschitz constant of f − g: max over x ≠ y of
// |(f−g)(x) − (f−g)(y)| / dist(x,y). A pseudo-metric (constants collapse).
MetricTable LipschitzConstantMetric(const GridLipschitzLattice& lat);

}  // namespace metriclat

#endif  // METRICLAT_FUNCTION_LATTICES_H_
