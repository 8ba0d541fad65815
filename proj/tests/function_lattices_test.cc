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

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "metriclat/error.h"
#include "metriclat/intervaluation.h"
#include "metriclat/ultravaluation.h"
#include "metriclat/valuation.h"
#include "support/oracles.h"

namespace metriclat {
namespace {

FiniteMetricSpace TwoPoints(const Rational& gap) {
  return {{"a", "b"}, {{0, gap}, {gap, 0}}, 0};
}

FiniteMetricSpace Path3() {
  return {{"a", "b", "c"}, {{0, 1, 2}, {1, 0, 1}, {2, 1, 0}}, 0};
}

FiniteMetricSpace Triangle() {
  return {{"a", "b", "c"}, {{0, 1, 2}, {1, 0, 2}, {2, 2, 0}}, 1};
}

Element At(const GridLipschitzLattice& lat, std::vector<Rational> f) {
  auto e = lat.functions.Find(f);
  EXPECT_TRUE(e.has_value());
  return e.value_or(0);
}

std::vector<GridLipschitzLattice> Corpus() {
  std::vector<GridLipschitzLattice> out;
  out.push_back(BuildLipschitzLattice(TwoPoints(1), 1, 1));
  out.push_back(BuildLipschitzLattice(TwoPoints(1), 1, 3));
  out.push_back(BuildLipschitzLattice(TwoPoints(Rational(1)), Rational(1, 2), 2,
                                      {2, Rational(1, 3)}));
  out.push_back(BuildLipschitzLattice(Path3(), 1, 2));
  out.push_back(BuildLipschitzLattice(Triangle(), 1, 3, {1, 2, 3}));
  return out;
}

TEST(FunctionLatticesTest, EnumerationMatchesOracle) {
  EXPECT_EQ(BuildLipschitzLattice(TwoPoints(1), 1, 1).size(), 4u);
  EXPECT_EQ(BuildLipschitzLattice(TwoPoints(2), 1, 1).size(), 4u);
  FiniteMetricSpace single{{"x"}, {{0}}, std::nullopt};
  GridLipschitzLattice chain = BuildLipschitzLattice(single, 1, 3);
  EXPECT_EQ(chain.size(), 4u);
  EXPECT_TRUE(chain.lattice().IsChain(chain.lattice().DownSet(chain.lattice().top())));
  for (const auto& lat : Corpus()) {
    auto expected = oracle::LipschitzFunctions(lat.space.dist, lat.step,
                                               lat.levels());
    std::set<std::vector<Rational>> want(expected.begin(), expected.end());
    std::set<std::vector<Rational>> got(lat.functions.values.begin(),
                                        lat.functions.values.end());
    EXPECT_EQ(got, want);
    EXPECT_EQ(lat.functions.values[lat.lattice().bottom()],
              std::vector<Rational>(lat.space.size(), Rational(0)));
    for (Element f = 0; f < lat.size(); ++f) {
      for (Element g = 0; g < lat.size(); ++g) {
        for (std::size_t x = 0; x < lat.space.size(); ++x) {
          EXPECT_EQ(lat.value(lat.lattice().Join(f, g), x),
                    std::max(lat.value(f, x), lat.value(g, x)));
          EXPECT_EQ(lat.value(lat.lattice().Meet(f, g), x),
                    std::min(lat.value(f, x), lat.value(g, x)));
        }
      }
    }
  }
}

TEST(FunctionLatticesTest, BuildErrors) {
  try {
    BuildLipschitzLattice(TwoPoints(Rational(1, 2)), 1, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kGridMismatch);
  }
  try {
    BuildLipschitzLattice(TwoPoints(1), 1, Rational(3, 2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kGridMismatch);
  }
  FiniteMetricSpace wide{{"a", "b", "c", "d", "e"},
                         std::vector<std::vector<Rational>>(
                             5, std::vector<Rational>(5, Rational(9))),
                         std::nullopt};
  for (std::size_t i = 0; i < 5; ++i) wide.dist[i][i] = 0;
  try {
    BuildLipschitzLattice(wide, 1, 9);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kTooLarge);
  }
}

TEST(FunctionLatticesTest, LambdaConeExamples) {
  GridLipschitzLattice two = BuildLipschitzLattice(TwoPoints(1), 1, 1);
  EXPECT_EQ(LambdaConeElement(two, {0, 0}), two.lattice().bottom());
  EXPECT_EQ(LambdaConeElement(two, {0, 1}), At(two, {1, 0}));
  GridLipschitzLattice path = BuildLipschitzLattice(Path3(), 1, 2);
  EXPECT_EQ(LambdaConeElement(path, {1, 2}), At(path, {1, 2, 1}));
  try {
    LambdaConeElement(two, {0, Rational(1, 2)});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidArgument);
  }
}

// Λ(x, r) is the least element taking value r at x, and every f is the
// join of the cones Λ(x, f(x)).
TEST(FunctionLatticesTest, ConesAreMinimalAndGenerate) {
  for (const auto& lat : Corpus()) {
    const FiniteLattice& l = lat.lattice();
    for (std::size_t x = 0; x < lat.space.size(); ++x) {
      for (unsigned k = 0; k <= lat.levels(); ++k) {
        Rational r = lat.step * k;
        Element cone = LambdaConeElement(lat, {x, r});
        EXPECT_EQ(lat.functions.values[cone],
                  oracle::Cone(lat.space.dist, x, r));
        for (Element f = 0; f < lat.size(); ++f) {
          if (lat.value(f, x) == r) {
            EXPECT_TRUE(l.Leq(cone, f));
          }
        }
      }
    }
    for (Element f = 0; f < lat.size(); ++f) {
      Element join = l.bottom();
      for (std::size_t x = 0; x < lat.space.size(); ++x) {
        join = l.Join(join, LambdaConeElement(lat, {x, lat.value(f, x)}));
      }
      EXPECT_EQ(join, f);
    }
    auto cones = LambdaConeElements(lat);
    EXPECT_TRUE(std::is_sorted(cones.begin(), cones.end()));
    EXPECT_TRUE(std::find(cones.begin(), cones.end(), l.bottom()) != cones.end());
  }
}

TEST(FunctionLatticesTest, ConesAwayFromBasepoint) {
  GridLipschitzLattice two = BuildLipschitzLattice(TwoPoints(1), 1, 1);
  auto away = LambdaConeElementsAwayFromBasepoint(two);
  std::vector<Element> want{two.lattice().bottom(), At(two, {0, 1})};
  std::sort(want.begin(), want.end());
  EXPECT_EQ(away, want);
  FiniteMetricSpace none = TwoPoints(1);
  none.basepoint.reset();
  try {
    LambdaConeElementsAwayFromBasepoint(BuildLipschitzLattice(none, 1, 1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNoBasepoint);
  }
}

TEST(FunctionLatticesTest, MetricExamples) {
  GridLipschitzLattice two = BuildLipschitzLattice(TwoPoints(1), 1, 1);
  Element f10 = At(two, {1, 0}), f01 = At(two, {0, 1}), f11 = At(two, {1, 1}),
          f00 = At(two, {0, 0});
  EXPECT_EQ(SupMetric(two.functions).power(f10, f01), Rational(1));
  EXPECT_EQ(L1Metric(two).power(f10, f01), Rational(2));
  MetricTable peak = PeakMetric(two.functions);
  EXPECT_EQ(peak.kind(), MetricKind::kUltravaluation);
  EXPECT_EQ(peak.power(f10, f11), Rational(1));
  EXPECT_EQ(peak.power(f10, f01), Rational(1));
  EXPECT_EQ(peak.power(f10, f10), Rational(0));
  MetricTable outer = BasepointMetric(two, BasepointMode::kOuter);
  EXPECT_EQ(outer.power(f00, f01), Rational(1));
  EXPECT_EQ(outer.power(f00, f10), Rational(0));
  EXPECT_FALSE(outer.IsMetric());
  MetricTable inner = BasepointMetric(two, BasepointMode::kInner);
  EXPECT_EQ(inner.power(f00, f10), Rational(1));
  EXPECT_EQ(inner.power(f00, f01), Rational(1, 2));
  EXPECT_TRUE(inner.IsMetric());
  EXPECT_FALSE(inner.note().empty());
}

TEST(FunctionLatticesTest, BasepointNeedsABasepoint) {
  FiniteMetricSpace none = TwoPoints(1);
  none.basepoint.reset();
  GridLipschitzLattice lat = BuildLipschitzLattice(none, 1, 1);
  try {
    BasepointMetric(lat, BasepointMode::kOuter);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNoBasepoint);
  }
}

TEST(FunctionLatticesTest, HypographExamples) {
  GridLipschitzLattice two = BuildLipschitzLattice(TwoPoints(1), 1, 1);
  HypographLattice hyp = MakeHypographLattice(two.functions);
  EXPECT_EQ(hyp.sets.FormatSet(Hypograph(hyp, At(two, {1, 0}))),
            "{(a,0),(a,1),(b,0)}");
  EXPECT_EQ(hyp.sets.FormatSet(Hypograph(hyp, two.lattice().bottom())),
            "{(a,0),(b,0)}");
}

// Function metrics across the corpus: the L1 identity, sup = pointwise sup,
// ultravaluation laws for the κ-metrics, and hypographs as a lattice
// isomorphism.
TEST(FunctionLatticesTest, CorpusIdentities) {
  for (const auto& lat : Corpus()) {
    const FiniteLattice& l = lat.lattice();
    EXPECT_EQ(L1Metric(lat).distances(),
              MetricFromValuation(
                  l, WeightedSumValuation(lat.functions, lat.weights))
                  .distances());
    EXPECT_EQ(SupMetric(lat.functions).distances(),
              MetricFromIntervaluation(
                  l, PointwiseSupIntervaluation(lat.functions))
                  .distances());
    EXPECT_EQ(LpMetric(lat, 1).distances(), L1Metric(lat).distances());

    HypographLattice hyp = MakeHypographLattice(lat.functions);
    for (Element f = 0; f < lat.size(); ++f) {
      for (Element g = 0; g < lat.size(); ++g) {
        EXPECT_EQ(Hypograph(hyp, l.Join(f, g)),
                  Hypograph(hyp, f) | Hypograph(hyp, g));
        EXPECT_EQ(Hypograph(hyp, l.Meet(f, g)),
                  Hypograph(hyp, f) & Hypograph(hyp, g));
      }
    }
    MetricTable peak = PeakMetric(lat.functions);
    EXPECT_TRUE(CheckStrongTriangle(peak).empty());
    EXPECT_TRUE(peak.IsMetric());
    for (Element f = 0; f < lat.size(); ++f) {
      for (Element g = 0; g < lat.size(); ++g) {
        Rational expect = 0;
        for (std::size_t x = 0; x < lat.space.size(); ++x) {
          if (lat.value(f, x) != lat.value(g, x)) {
            expect = std::max({expect, lat.value(f, x), lat.value(g, x)});
          }
        }
        EXPECT_EQ(peak.power(f, g), expect);
      }
    }
    for (auto mode : {BasepointMode::kOuter, BasepointMode::kInner}) {
      MetricTable d = BasepointMetric(lat, mode);
      EXPECT_EQ(d.kind(), MetricKind::kUltravaluation);
      EXPECT_TRUE(CheckStrongTriangle(d).empty());
      auto q = ClassifyMetric(l, d);
      EXPECT_TRUE(q[1].qualifies());
    }
  }
}

TEST(FunctionLatticesTest, LipschitzConstantIsAPseudoMetric) {
  GridLipschitzLattice two = BuildLipschitzLattice(TwoPoints(1), 1, 1);
  MetricTable lc = LipschitzConstantMetric(two);
  EXPECT_TRUE(CheckPseudoMetric(lc).empty());
  EXPECT_FALSE(lc.IsMetric());
  EXPECT_EQ(lc.power(At(two, {1, 0}), At(two, {0, 1})), Rational(2));
}

}  // namespace
}  // namespace metriclat
