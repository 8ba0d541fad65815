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

#include "metriclat/metric.h"

#include "metriclat/error.h"

namespace metriclat {

SurdTable::SurdTable(PairTable powers, unsigned root_index)
    : powers_(std::move(powers)), root_index_(root_index) {
  if (root_index_ == 0) {
    throw Error(ErrorCode::kInvalidArgument, "root index must be positive");
  }
  if (root_index_ > 1) {
    for (Element f = 0; f < powers_.size(); ++f) {
      for (Element g = 0; g < powers_.size(); ++g) {
        if (powers_(f, g) < 0) {
          throw Error(ErrorCode::kInvalidArgument,
                      "root tables need nonnegative powers");
        }
      }
    }
  }
}

const char* MetricKindName(MetricKind kind) {
  switch (kind) {
    case MetricKind::kValuation: return "valuation";
    case MetricKind::kUltravaluation: return "ultravaluation";
    case MetricKind::kIntervaluation: return "intervaluation";
    case MetricKind::kRaw: return "raw";
  }
  return "raw";
}

const char* MetricViolationName(MetricViolation::Kind kind) {
  switch (kind) {
    case MetricViolation::Kind::kDiagonal: return "nonzero diagonal";
    case MetricViolation::Kind::kNegative: return "negative distance";
    case MetricViolation::Kind::kAsymmetric: return "asymmetry";
    case MetricViolation::Kind::kTriangle: return "triangle inequality";
    case MetricViolation::Kind::kStrongTriangle: return "strong triangle inequality";
  }
  return "?";
}

bool MetricTable::IsMetric() const {
  for (Element f = 0; f < size(); ++f) {
    for (Element g = 0; g < size(); ++g) {
      if (f != g && power(f, g) == 0) return false;
    }
  }
  return true;
}

std::vector<MetricViolation> CheckPseudoMetric(const MetricTable& d,
                                               std::size_t limit) {
  using Kind = MetricViolation::Kind;
  std::vector<MetricViolation> out;
  auto full = [&] { return limit != 0 && out.size() >= limit; };
  const std::size_t n = d.size();
  for (Element f = 0; f < n && !full(); ++f) {
    if (d.power(f, f) != 0) out.push_back({Kind::kDiagonal, f, f, f});
    for (Element g = 0; g < n && !full(); ++g) {
      if (d.power(f, g) < 0) out.push_back({Kind::kNegative, f, g, g});
      if (g > f && d.power(f, g) != d.power(g, f)) {
        out.push_back({Kind::kAsymmetric, f, g, g});
      }
    }
  }
  const bool rational = d.root_index() == 1;
  for (Element f = 0; f < n && !full(); ++f) {
    for (Element g = f + 1; g < n && !full(); ++g) {
      for (Element h = 0; h < n && !full(); ++h) {
        if (h == f || h == g) continue;
        bool ok = rational
                      ? d.power(f, g) <= d.power(f, h) + d.power(h, g)
                      : LessEqualSum(d.at(f, g), d.at(f, h), d.at(h, g));
        if (!ok) out.push_back({Kind::kTriangle, f, g, h});
      }
    }
  }
  return out;
}

std::vector<MetricViolation> CheckStrongTriangle(const MetricTable& d,
                                                 std::size_t limit) {
  std::vector<MetricViolation> out;
  const std::size_t n = d.size();
  for (Element f = 0; f < n; ++f) {
    for (Element g = f + 1; g < n; ++g) {
      for (Element h = 0; h < n; ++h) {
        if (d.power(f, g) > std::max(d.power(f, h), d.power(h, g))) {
          out.push_back({MetricViolation::Kind::kStrongTriangle, f, g, h});
          if (limit != 0 && out.size() >= limit) return out;
        }
      }
    }
  }
  return out;
}

MetricTable DiscreteMetric(std::size_t n) {
  PairTable d(n, Rational(1));
  for (Element f = 0; f < n; ++f) d(f, f) = 0;
  return MetricTable::FromRationals(std::move(d), MetricKind::kUltravaluation,
                                    "discrete");
}

bool IsPositivePairTable(const FiniteLattice& lattice, const SurdTable& w) {
  for (Element f = 0; f < w.size(); ++f) {
    for (Element g = 0; g < w.size(); ++g) {
      if (w.power(f, g) == 0 && !lattice.Leq(f, g)) return false;
    }
  }
  return true;
}

}  // namespace metriclat
