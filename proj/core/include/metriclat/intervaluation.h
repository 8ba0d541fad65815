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

#ifndef METRICLAT_INTERVALUATION_H_
#define METRICLAT_INTERVALUATION_H_

#include <compare>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "metriclat/generators.h"
#include "metriclat/metric.h"

namespace metriclat {

// Commutative, associative combination r ∘ s on [0, ∞).
class CombineOp {
 public:
  enum class Kind { kAdd, kMax, kLp };

  static CombineOp Add() { return CombineOp(Kind::kAdd, 1); }
  static CombineOp Max() { return CombineOp(Kind::kMax, 1); }
  // (r^p + s^p)^(1/p), integer p >= 1.
  static CombineOp Lp(unsigned p);
  // "add", "max", "lp2", "lp:3", ... Non-integer exponents are rejected.
  static CombineOp Parse(std::string_view name);

  Kind kind() const { return kind_; }
  unsigned p() const { return p_; }
  std::string Name() const;

  // Exact r ∘ s. Throws Error(kUnsupportedArithmetic) when the result is not
  // a single surd (e.g. adding incommensurable roots).
  Surd Apply(const Surd& r, const Surd& s) const;

  // Exact ordering of (r ∘ s) against t; always decidable.
  std::strong_ordering Compare(const Surd& r, const Surd& s,
                               const Surd& t) const;

  friend bool operator==(const CombineOp&, const CombineOp&) = default;

 private:
  CombineOp(Kind kind, unsigned p) : kind_(kind), p_(p) {}
  Kind kind_;
  unsigned p_;
};

// The builtin ops in the order metric classification tries them.
std::vector<CombineOp> BuiltinOps();

struct OpSample {
  Rational r, s, t, u;
};

struct OpViolation {
  std::string property;
  OpSample sample;
};

// Identity, commutativity, associativity, the sandwich
//   r∘t <= (r+s)∘(t+u) <= (r∘t) + (s∘u)
// and r ∨ s <= r∘s on every sample, exactly. Samples must be nonnegative.
std::vector<OpViolation> CheckOpAxioms(const CombineOp& op,
                                       std::span<const OpSample> samples);

struct SymbolicVerdict {
  bool supported = false;  // only ADD and MAX are piecewise linear
  std::vector<std::string> proved;
  std::vector<std::string> unproved;
  bool holds() const { return supported && unproved.empty(); }
};

// Proves the op axioms for ADD and MAX over all nonnegative reals by
// normalizing both sides to maxima of linear forms and checking that every
// form on the left is dominated coefficient-wise by one on the right.
SymbolicVerdict VerifyOpAxiomsSymbolically(const CombineOp& op);

// A pair table w with its combination; see CheckIntervaluation.
struct Intervaluation {
  SurdTable w;
  CombineOp op = CombineOp::Add();
};

struct IntervaluationViolation {
  enum class Kind {
    kNegative,    // w(f,g) < 0
    kComparable,  // f <= g but w(f,g) != 0
    kLeftCut,     // w(f, g∨h) ∘ w(f∧h, g) > w(f,g)
    kRightCut,    // w(f,g) > w(f, g∨h) + w(f∧h, g)
  };
  Kind kind;
  Element f, g, h;
};

const char* IntervaluationViolationName(IntervaluationViolation::Kind kind);

std::vector<IntervaluationViolation> CheckIntervaluation(
    const FiniteLattice& lattice, const Intervaluation& iv,
    std::size_t limit = 0);

// w(f,g) = 0 implies f <= g.
bool IsPositive(const FiniteLattice& lattice, const Intervaluation& iv);

// d(f,g) = w(f,g) ∘ w(g,f) with no law checks (kind kRaw).
MetricTable CombinedMetric(const Intervaluation& iv);

// The same after CheckIntervaluation passes. Throws
// Error(kIntervaluationAxiomViolated) otherwise.
MetricTable MetricFromIntervaluation(const FiniteLattice& lattice,
                                     const Intervaluation& iv);

struct PropViolation {
  Element f, g;
  std::string which;  // the identity that failed
};

// w(f,g) = w(f∨g, g) = w(f, f∧g) = d(f∨g, g) for every pair.
std::vector<PropViolation> CheckPropIntervaluation(const FiniteLattice& lattice,
                                                   const Intervaluation& iv);

// w_d(f,g) = d(f∨g, g), at the metric's root index.
SurdTable WFromMetric(const FiniteLattice& lattice, const MetricTable& d);

struct OpQualification {
  CombineOp op;
  std::vector<IntervaluationViolation> violations;  // first few
  std::optional<std::pair<Element, Element>> recovery_failure;
  bool qualifies() const { return violations.empty() && !recovery_failure; }
};

// Probes w_d with each op: it qualifies when (w_d, op) is an intervaluation
// and d = w_d(f,g) ∘ w_d(g,f) everywhere. Every op is reported.
std::vector<OpQualification> ClassifyMetric(
    const FiniteLattice& lattice, const MetricTable& d,
    std::span<const CombineOp> ops = {});

// 0 ∨ (r − s): the difference intervaluation of the real chain.
Rational RealChainDifference(const Rational& r, const Rational& s);

struct ChainIntervaluation {
  std::function<Rational(const Rational&, const Rational&)> w =
      RealChainDifference;
  CombineOp op = CombineOp::Max();
};

// w_∞(f,g) = max_x w(f(x), g(x)) with ∘ = max. Throws Error(kInvalidArgument)
// for a chain op other than MAX.
Intervaluation PointwiseSupIntervaluation(const PointwiseLattice& functions,
                                          const ChainIntervaluation& chain = {});

}  // namespace metriclat

#endif  // METRICLAT_INTERVALUATION_H_
