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

#ifndef METRICLAT_ULTRAVALUATION_H_
#define METRICLAT_ULTRAVALUATION_H_

#include <vector>

#include "metriclat/generators.h"
#include "metriclat/metric.h"

namespace metriclat {

// Difference ultravaluation: nonnegative w with
//   (1) f <= g  =>  w(f,g) = 0
//   (2) w(f,g) = w(f∧h, g) ∨ w(f, g∨h).
// Always stored extensionally; nothing is trusted about where it came from.
struct Ultravaluation {
  PairTable w;
};

// Per-atom weights κ >= 0 on a set lattice's ground set.
struct KappaWeights {
  std::vector<Rational> kappa;

  friend bool operator==(const KappaWeights&, const KappaWeights&) = default;
};

// w(A,B) = 0 ∨ max{κ(x) : x ∈ A \ B}.
Ultravaluation FromKappa(const SetLattice& sets, const KappaWeights& kappa);

struct UltraViolation {
  enum class Axiom { kNegative, kComparable, kCutLaw };
  Axiom axiom;
  Element f, g, h;
};

std::vector<UltraViolation> CheckUltravaluation(const FiniteLattice& lattice,
                                                const PairTable& w,
                                                std::size_t limit = 0);

// d(f,g) = w(f,g) ∨ w(g,f). Throws Error(kUltraAxiomViolated).
MetricTable MetricFromUltravaluation(const FiniteLattice& lattice,
                                     const Ultravaluation& u);

// κ(x) = min{w(C,D) : C, D ∈ L, x ∈ C, x ∉ D}, 0 when no pair separates x.
// Rebuilds w from κ and throws Error(kReconstructionMismatch) with the first
// differing pair if the two disagree.
KappaWeights ExtractKappa(const SetLattice& sets, const Ultravaluation& u);

}  // namespace metriclat

#endif  // METRICLAT_ULTRAVALUATION_H_
