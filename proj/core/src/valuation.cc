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

#include "metriclat/valuation.h"

#include "metriclat/error.h"

namespace metriclat {

namespace {

void CheckTotal(const FiniteLattice& lattice, std::size_t size) {
  if (size != lattice.size()) {
    throw Error(ErrorCode::kMismatch,
                "table covers " + std::to_string(size) +
                    " elements but the lattice has " +
                    std::to_string(lattice.size()));
  }
}

void RequireModular(const FiniteLattice& lattice, const Valuation& v) {
  auto violations = CheckModularLaw(lattice, v);
  if (!violations.empty()) {
    const auto& bad = violations.front();
    throw Error(ErrorCode::kNotModular,
                "modular law fails at (" + lattice.label(bad.f) + ", " +
                    lattice.label(bad.g) + "): " + FormatRational(bad.lhs) +
                    " != " + FormatRational(bad.rhs));
  }
}

}  // namespace

Valuation Valuation::Scaled(const Rational& factor) const {
  std::vector<Rational> scaled;
  scaled.reserve(values_.size());
  for (const auto& x : values_) scaled.push_back(x * factor);
  return Valuation(std::move(scaled));
}

std::vector<ModularViolation> CheckModularLaw(const FiniteLattice& lattice,
                                              const Valuation& v) {
  CheckTotal(lattice, v.size());
  std::vector<ModularViolation> out;
  for (Element f = 0; f < lattice.size(); ++f) {
    for (Element g = f + 1; g < lattice.size(); ++g) {
      Rational lhs = v[f] + v[g];
      Rational rhs = v[lattice.Meet(f, g)] + v[lattice.Join(f, g)];
      if (lhs != rhs) out.push_back({f, g, lhs, rhs});
    }
  }
  return out;
}

ValuationClass ClassifyValuation(const FiniteLattice& lattice,
                                 const Valuation& v) {
  CheckTotal(lattice, v.size());
  ValuationClass c{true, true};
  for (Element f = 0; f < lattice.size(); ++f) {
    for (Element g = 0; g < lattice.size(); ++g) {
      if (!lattice.Less(f, g)) continue;
      if (v[f] > v[g]) c.isotone = false;
      if (v[f] >= v[g]) c.positive = false;
    }
  }
  return c;
}

MetricTable MetricFromValuation(const FiniteLattice& lattice,
                                const Valuation& v) {
  RequireModular(lattice, v);
  if (!ClassifyValuation(lattice, v).isotone) {
    throw Error(ErrorCode::kNotIsotone, "valuation is not isotone");
  }
  const std::size_t n = lattice.size();
  PairTable d(n);
  for (Element f = 0; f < n; ++f) {
    for (Element g = 0; g < n; ++g) {
      d(f, g) = v[lattice.Join(f, g)] - v[lattice.Meet(f, g)];
    }
  }
  return MetricTable::FromRationals(std::move(d), MetricKind::kValuation);
}

bool DifferenceValuation::IsIsotone() const {
  for (Element f = 0; f < w_.size(); ++f) {
    for (Element g = 0; g < w_.size(); ++g) {
      if (w_(f, g) < 0) return false;
    }
  }
  return true;
}

bool DifferenceValuation::IsPositive(const FiniteLattice& lattice) const {
  return IsPositivePairTable(lattice, SurdTable(w_));
}

MetricTable DifferenceValuation::Metric() const {
  PairTable d(w_.size());
  for (Element f = 0; f < w_.size(); ++f) {
    for (Element g = 0; g < w_.size(); ++g) d(f, g) = w_(f, g) + w_(g, f);
  }
  return MetricTable::FromRationals(std::move(d), MetricKind::kValuation);
}

DifferenceValuation MakeDifferenceValuation(const FiniteLattice& lattice,
                                            const Valuation& v) {
  RequireModular(lattice, v);
  const std::size_t n = lattice.size();
  PairTable w(n);
  for (Element f = 0; f < n; ++f) {
    for (Element g = 0; g < n; ++g) w(f, g) = v[f] - v[lattice.Meet(f, g)];
  }
  return DifferenceValuation(std::move(w));
}

std::vector<CutLawViolation> CheckCutLaw(const FiniteLattice& lattice,
                                         const PairTable& w,
                                         std::size_t limit) {
  CheckTotal(lattice, w.size());
  std::vector<CutLawViolation> out;
  const std::size_t n = lattice.size();
  for (Element f = 0; f < n; ++f) {
    for (Element g = 0; g < n; ++g) {
      for (Element h = 0; h < n; ++h) {
        Rational rhs = w(f, lattice.Join(g, h)) + w(lattice.Meet(f, h), g);
        if (w(f, g) != rhs) {
          out.push_back({f, g, h, w(f, g), rhs});
          if (limit != 0 && out.size() >= limit) return out;
        }
      }
    }
  }
  return out;
}

Valuation ValuationFromDifference(const FiniteLattice& lattice,
                                  const PairTable& w, const Rational& c) {
  auto violations = CheckCutLaw(lattice, w, 1);
  if (!violations.empty()) {
    const auto& bad = violations.front();
    throw Error(ErrorCode::kCutLawViolated,
                "cut law fails at (" + lattice.label(bad.f) + ", " +
                    lattice.label(bad.g) + ", " + lattice.label(bad.h) + ")");
  }
  std::vector<Rational> values;
  for (Element f = 0; f < lattice.size(); ++f) {
    values.push_back(w(f, lattice.bottom()) + c);
  }
  return Valuation(std::move(values));
}

}  // namespace metriclat
