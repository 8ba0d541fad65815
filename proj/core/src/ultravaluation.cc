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

#include "metriclat/ultravaluation.h"

#include <optional>

#include "metriclat/error.h"

namespace metriclat {

Ultravaluation FromKappa(const SetLattice& sets, const KappaWeights& kappa) {
  if (kappa.kappa.size() != sets.ground().size()) {
    throw Error(ErrorCode::kMismatch, "kappa must cover every ground atom");
  }
  for (const auto& k : kappa.kappa) {
    if (k < 0) throw Error(ErrorCode::kInvalidArgument, "kappa must be >= 0");
  }
  const std::size_t n = sets.size();
  PairTable w(n);
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      AtomSet diff = sets.member(a) & ~sets.member(b);
      Rational best = 0;
      for (std::size_t x = 0; diff != 0; ++x, diff >>= 1) {
        if ((diff & 1u) && kappa.kappa[x] > best) best = kappa.kappa[x];
      }
      w(a, b) = best;
    }
  }
  return {std::move(w)};
}

std::vector<UltraViolation> CheckUltravaluation(const FiniteLattice& lattice,
                                                const PairTable& w,
                                                std::size_t limit) {
  using Axiom = UltraViolation::Axiom;
  if (w.size() != lattice.size()) {
    throw Error(ErrorCode::kMismatch, "table size does not match the lattice");
  }
  std::vector<UltraViolation> out;
  auto full = [&] { return limit != 0 && out.size() >= limit; };
  const std::size_t n = lattice.size();
  for (Element f = 0; f < n && !full(); ++f) {
    for (Element g = 0; g < n && !full(); ++g) {
      if (w(f, g) < 0) out.push_back({Axiom::kNegative, f, g, g});
      if (lattice.Leq(f, g) && w(f, g) != 0) {
        out.push_back({Axiom::kComparable, f, g, g});
      }
    }
  }
  for (Element f = 0; f < n && !full(); ++f) {
    for (Element g = 0; g < n && !full(); ++g) {
      for (Element h = 0; h < n && !full(); ++h) {
        const Rational& a = w(lattice.Meet(f, h), g);
        const Rational& b = w(f, lattice.Join(g, h));
        if (w(f, g) != std::max(a, b)) out.push_back({Axiom::kCutLaw, f, g, h});
      }
    }
  }
  return out;
}

MetricTable MetricFromUltravaluation(const FiniteLattice& lattice,
                                     const Ultravaluation& u) {
  auto violations = CheckUltravaluation(lattice, u.w, 1);
  if (!violations.empty()) {
    const auto& bad = violations.front();
    throw Error(ErrorCode::kUltraAxiomViolated,
                "ultravaluation axiom fails at (" + lattice.label(bad.f) +
                    ", " + lattice.label(bad.g) + ", " + lattice.label(bad.h) +
                    ")");
  }
  const std::size_t n = lattice.size();
  PairTable d(n);
  for (Element f = 0; f < n; ++f) {
    for (Element g = 0; g < n; ++g) d(f, g) = std::max(u.w(f, g), u.w(g, f));
  }
  return MetricTable::FromRationals(std::move(d), MetricKind::kUltravaluation);
}

KappaWeights ExtractKappa(const SetLattice& sets, const Ultravaluation& u) {
  const std::size_t n = sets.size();
  if (u.w.size() != n) {
    throw Error(ErrorCode::kMismatch, "table size does not match the lattice");
  }
  KappaWeights result;
  for (std::size_t x = 0; x < sets.ground().size(); ++x) {
    const AtomSet bit = AtomSet{1} << x;
    std::optional<Rational> best;
    for (Element c = 0; c < n; ++c) {
      if (!(sets.member(c) & bit)) continue;
      for (Element d = 0; d < n; ++d) {
        if (sets.member(d) & bit) continue;
        if (!best || u.w(c, d) < *best) best = u.w(c, d);
      }
    }
    result.kappa.push_back(best.value_or(Rational(0)));
  }
  Ultravaluation rebuilt = FromKappa(sets, result);
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      if (rebuilt.w(a, b) != u.w(a, b)) {
        const auto& lattice = sets.lattice();
        throw Error(ErrorCode::kReconstructionMismatch,
                    "rebuilt w(" + lattice.label(a) + ", " + lattice.label(b) +
                        ") = " + FormatRational(rebuilt.w(a, b)) +
                        " but the input has " + FormatRational(u.w(a, b)));
      }
    }
  }
  return result;
}

}  // namespace metriclat
