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

#ifndef METRICLAT_VALUATION_H_
#define METRICLAT_VALUATION_H_

#include <vector>

#include "metriclat/lattice.h"
#include "metriclat/metric.h"
#include "metriclat/rational.h"

namespace metriclat {

// Exact per-element values v(f).
class Valuation {
 public:
  Valuation() = default;
  explicit Valuation(std::vector<Rational> values)
      : values_(std::move(values)) {}

  std::size_t size() const { return values_.size(); }
  const Rational& operator[](Element f) const { return values_[f]; }
  const std::vector<Rational>& values() const { return values_; }

  Valuation Scaled(const Rational& factor) const;

  friend bool operator==(const Valuation&, const Valuation&) = default;

 private:
  std::vector<Rational> values_;
};

struct ModularViolation {
  Element f, g;
  Rational lhs;  // v(f) + v(g)
  Rational rhs;  // v(f∧g) + v(f∨g)
};

// v(f) + v(g) = v(f∧g) + v(f∨g) for every pair; empty when the law holds.
std::vector<ModularViolation> CheckModularLaw(const FiniteLattice& lattice,
                                              const Valuation& v);

struct ValuationClass {
  bool isotone = false;   // f < g  =>  v(f) <= v(g)
  bool positive = false;  // f < g  =>  v(f) <  v(g)
};

ValuationClass ClassifyValuation(const FiniteLattice& lattice,
                                 const Valuation& v);

// d(f,g) = v(f∨g) − v(f∧g). Throws Error(kNotModular) or Error(kNotIsotone).
MetricTable MetricFromValuation(const FiniteLattice& lattice,
                                const Valuation& v);

// w(f,g) = v(f) − v(f∧g).
class DifferenceValuation {
 public:
  explicit DifferenceValuation(PairTable w) : w_(std::move(w)) {}

  const PairTable& table() const { return w_; }
  const Rational& operator()(Element f, Element g) const { return w_(f, g); }

  // All values nonnegative.
  bool IsIsotone() const;
  // w(f,g) = 0 implies f <= g.
  bool IsPositive(const FiniteLattice& lattice) const;
  // w(f,g) + w(g,f).
  MetricTable Metric() const;

 private:
  PairTable w_;
};

// Throws Error(kNotModular).
DifferenceValuation MakeDifferenceValuation(const FiniteLattice& lattice,
                                            const Valuation& v);

struct CutLawViolation {
  Element f, g, h;
  Rational lhs;  // w(f,g)
  Rational rhs;  // w(f, g∨h) + w(f∧h, g)
};

// w(f,g) = w(f, g∨h) + w(f∧h, g) for every triple.
std::vector<CutLawViolation> CheckCutLaw(const FiniteLattice& lattice,
                                         const PairTable& w,
                                         std::size_t limit = 0);

// v(f) = w(f, bottom) + c. Throws Error(kCutLawViolated).
Valuation ValuationFromDifference(const FiniteLattice& lattice,
                                  const PairTable& w, const Rational& c);

}  // namespace metriclat

#endif  // METRICLAT_VALUATION_H_
