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

#ifndef METRICLAT_METRIC_H_
#define METRICLAT_METRIC_H_

#include <cstddef>
#include <string>
#include <vector>

#include "metriclat/lattice.h"
#include "metriclat/rational.h"

namespace metriclat {

// Square table of exact rationals indexed by element pairs.
class PairTable {
 public:
  PairTable() = default;
  explicit PairTable(std::size_t n, const Rational& fill = Rational(0))
      : n_(n), cells_(n * n, fill) {}

  std::size_t size() const { return n_; }
  Rational& operator()(Element f, Element g) { return cells_[f * n_ + g]; }
  const Rational& operator()(Element f, Element g) const {
    return cells_[f * n_ + g];
  }

  friend bool operator==(const PairTable&, const PairTable&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Rational> cells_;
};

// Pair table whose true values are powers(f,g)^(1/root_index). All entries
// share the index, so order comparisons reduce to comparing the stored
// powers; sums go through LessEqualSum.
class SurdTable {
 public:
  SurdTable() = default;
  explicit SurdTable(PairTable powers, unsigned root_index = 1);

  std::size_t size() const { return powers_.size(); }
  unsigned root_index() const { return root_index_; }
  const PairTable& powers() const { return powers_; }
  const Rational& power(Element f, Element g) const { return powers_(f, g); }
  Surd at(Element f, Element g) const {
    return Surd(powers_(f, g), root_index_);
  }

  friend bool operator==(const SurdTable&, const SurdTable&) = default;

 private:
  PairTable powers_;
  unsigned root_index_ = 1;
};

enum class MetricKind { kValuation, kUltravaluation, kIntervaluation, kRaw };

const char* MetricKindName(MetricKind kind);

// A (pseudo-)metric on the elements of a lattice.
class MetricTable {
 public:
  MetricTable() = default;
  MetricTable(SurdTable distances, MetricKind kind, std::string note = {})
      : d_(std::move(distances)), kind_(kind), note_(std::move(note)) {}
  static MetricTable FromRationals(PairTable d, MetricKind kind,
                                   std::string note = {}) {
    return MetricTable(SurdTable(std::move(d)), kind, std::move(note));
  }

  std::size_t size() const { return d_.size(); }
  const SurdTable& distances() const { return d_; }
  unsigned root_index() const { return d_.root_index(); }
  // d(f,g)^root_index; monotone in d, so usable for every order comparison.
  const Rational& power(Element f, Element g) const { return d_.power(f, g); }
  Surd at(Element f, Element g) const { return d_.at(f, g); }
  MetricKind kind() const { return kind_; }
  // Free-form provenance, e.g. a substituted weight function.
  const std::string& note() const { return note_; }

  // d(f,g) = 0 implies f = g.
  bool IsMetric() const;

 private:
  SurdTable d_;
  MetricKind kind_ = MetricKind::kRaw;
  std::string note_;
};

struct MetricViolation {
  enum class Kind { kDiagonal, kNegative, kAsymmetric, kTriangle, kStrongTriangle };
  Kind kind;
  Element f, g, h;
};

const char* MetricViolationName(MetricViolation::Kind kind);

// d(f,f) = 0, d >= 0, symmetry and the triangle inequality, exhaustively.
// At most `limit` violations are collected (0 = unlimited).
std::vector<MetricViolation> CheckPseudoMetric(const MetricTable& d,
                                               std::size_t limit = 0);

// The strong triangle inequality d(f,g) <= d(f,h) ∨ d(h,g).
std::vector<MetricViolation> CheckStrongTriangle(const MetricTable& d,
                                                 std::size_t limit = 0);

// The discrete metric (1 off the diagonal).
MetricTable DiscreteMetric(std::size_t n);

// w(f,g) = 0 implies f <= g.
bool IsPositivePairTable(const FiniteLattice& lattice, const SurdTable& w);

}  // namespace metriclat

#endif  // METRICLAT_METRIC_H_
