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

#include "metriclat/analysis.h"

#include <gtest/gtest.h>

#include <algorithm>

#include "metriclat/error.h"
#include "metriclat/function_lattices.h"
#include "metriclat/ultravaluation.h"
#include "metriclat/valuation.h"
#include "support/oracles.h"

namespace metriclat {
namespace {

oracle::Order OrderOf(const FiniteLattice& l) {
  return [&l](std::size_t a, std::size_t b) { return l.Leq(a, b); };
}

oracle::Dist DistOf(const MetricTable& d) {
  return [&d](std::size_t a, std::size_t b) { return d.power(a, b); };
}

SetLattice ThreeAtomSets() {
  std::vector<std::int64_t> nums{1, 2, 3};
  std::vector<AtomSet> gens{0b010, 0b100};
  return SubsetLattice(NumericAtoms(nums), gens, true);
}

SetLattice RandomSets(oracle::Gen& gen, unsigned max_atoms = 5,
                      int max_gens = 6) {
  unsigned atoms = gen.Int(1, max_atoms);
  std::vector<std::int64_t> nums;
  for (unsigned i = 0; i < atoms; ++i) nums.push_back(gen.Int(1, 9) + 10 * i);
  std::vector<AtomSet> gens;
  for (int i = gen.Int(0, max_gens); i > 0; --i) gens.push_back(gen.Mask(atoms));
  return SubsetLattice(NumericAtoms(nums), gens, gen.Coin());
}

Valuation Counting(const SetLattice& s) {
  std::vector<Rational> v;
  for (AtomSet m : s.members()) v.push_back(std::popcount(m));
  return Valuation(v);
}

PointwiseLattice GridFive() {
  std::vector<unsigned> heights{3, 2};
  PointwiseLattice grid = ProductChainLattice(heights);
  std::vector<Element> keep;
  for (std::vector<Rational> f : std::vector<std::vector<Rational>>{
           {0, 0}, {1, 0}, {0, 1}, {1, 1}, {2, 2}}) {
    keep.push_back(*grid.Find(f));
  }
  return MakeSublattice(grid, keep);
}

Element At(const PointwiseLattice& p, std::vector<Rational> f) {
  return *p.Find(f);
}

FiniteLattice Chain(std::size_t n) {
  std::vector<std::pair<Element, Element>> leq;
  for (Element i = 0; i + 1 < n; ++i) leq.emplace_back(i, i + 1);
  return FiniteLattice::FromLeq(n, leq);
}

TEST(AnalysisTest, UltrametricCounterexample) {
  SetLattice s = ThreeAtomSets();
  MetricTable d = IdentityKappaMetric(s);
  Element x = *s.Find(0b111);
  DIrreducibility r = IsDIrreducible(s.lattice(), d, x);
  EXPECT_FALSE(r.irreducible);
  ASSERT_TRUE(r.witness);
  std::pair<AtomSet, AtomSet> w{s.member(r.witness->f), s.member(r.witness->g)};
  EXPECT_TRUE((w == std::pair<AtomSet, AtomSet>{0b010, 0b100}) ||
              (w == std::pair<AtomSet, AtomSet>{0b100, 0b010}));
  EXPECT_TRUE(IsDIrreducible(s.lattice(), d, s.lattice().bottom()).irreducible);
  EXPECT_EQ(FindJoinIrreducibleNotDIrreducible(s.lattice(), d),
            std::vector<Element>{x});
  MetricTable discrete = MetricFromUltravaluation(
      s.lattice(), FromKappa(s, KappaWeights{{1, 1, 1}}));
  EXPECT_TRUE(FindJoinIrreducibleNotDIrreducible(s.lattice(), discrete).empty());
}

TEST(AnalysisTest, IdentityKappaNeedsNumbers) {
  std::vector<std::string> names{"a", "b"};
  std::vector<AtomSet> gens{0b01};
  SetLattice s = SubsetLattice(NamedAtoms(names), gens, true);
  try {
    IdentityKappaMetric(s);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidArgument);
  }
}

TEST(AnalysisTest, GridFiveSupMetric) {
  PointwiseLattice grid = GridFive();
  MetricTable d = SupMetric(grid);
  Element top = At(grid, {2, 2});
  DIrreducibility r = IsDIrreducible(grid.lattice, d, top);
  EXPECT_FALSE(r.irreducible);
  ASSERT_TRUE(r.witness);
  EXPECT_EQ(std::min(d.power(top, r.witness->f), d.power(top, r.witness->g)),
            Rational(2));
  EXPECT_EQ(d.power(top, grid.lattice.Join(r.witness->f, r.witness->g)),
            Rational(1));
  std::vector<Element> want{At(grid, {0, 0}), At(grid, {1, 0}),
                            At(grid, {0, 1})};
  std::sort(want.begin(), want.end());
  EXPECT_EQ(Mli(grid.lattice, d), want);
  EXPECT_EQ(Mli(grid.lattice, d, 4), want);
}

TEST(AnalysisTest, DiscreteMetricMliIsJoinIrreducibles) {
  oracle::Gen gen(11);
  for (int round = 0; round < 40; ++round) {
    SetLattice s = RandomSets(gen);
    EXPECT_EQ(Mli(s.lattice(), DiscreteMetric(s.size())),
              s.lattice().JoinIrreducibles());
  }
  SubspaceLattice m3 = MakeSubspaceLattice(2, 2);
  EXPECT_EQ(Mli(m3.lattice, DiscreteMetric(m3.lattice.size())),
            m3.lattice.JoinIrreducibles());
}

TEST(AnalysisTest, ChainsAreEntirelyIrreducible) {
  FiniteLattice chain = Chain(5);
  Valuation v(std::vector<Rational>{0, 1, Rational(5, 2), 3, 7});
  MetricTable d = MetricFromValuation(chain, v);
  EXPECT_EQ(Mli(chain, d).size(), 5u);
}

// Pairwise and family verdicts agree, and the report agrees with the oracle.
TEST(AnalysisTest, PairwiseEqualsFamiliesAndOracle) {
  oracle::Gen gen(12);
  int checked = 0;
  for (int round = 0; round < 150; ++round) {
    SetLattice s = RandomSets(gen, 4, 4);
    if (s.size() > 10) continue;
    const FiniteLattice& l = s.lattice();
    KappaWeights kappa;
    for (std::size_t i = 0; i < s.ground().size(); ++i) {
      kappa.kappa.push_back(gen.NonNegative());
    }
    std::vector<MetricTable> metrics{
        MetricFromUltravaluation(l, FromKappa(s, kappa)),
        MetricFromValuation(l, Counting(s)), DiscreteMetric(s.size())};
    for (const MetricTable& d : metrics) {
      IrreducibilityReport rep = AnalyzeIrreducibility(l, d, 2);
      for (Element p = 0; p < l.size(); ++p) {
        bool pair = IsDIrreducible(l, d, p).irreducible;
        EXPECT_EQ(pair, IsDIrreducibleOverFamilies(l, d, p));
        EXPECT_EQ(pair, oracle::DIrreducible(l.size(), OrderOf(l), DistOf(d), p));
        EXPECT_EQ(pair, oracle::DIrreducibleFamilies(l.size(), OrderOf(l),
                                                     DistOf(d), p));
        EXPECT_EQ(rep.elements[p].d_irreducible, pair);
        if (pair && d.IsMetric()) {
          EXPECT_TRUE(rep.elements[p].join_irreducible);
        }
        if (auto w = rep.elements[p].witness) {
          EXPECT_GT(std::min(d.power(p, w->f), d.power(p, w->g)),
                    d.power(p, l.Join(w->f, w->g)));
        }
      }
      ++checked;
    }
  }
  EXPECT_GT(checked, 100);
}

TEST(AnalysisTest, DownsetTestMatchesFullTest) {
  DivisorLattice twelve = MakeDivisorLattice(12);
  CertifiedMetric cert = CertifyValuation(twelve.lattice, Valuation(twelve.Omega()));
  Element p = *twelve.lattice.Find("12");
  EXPECT_FALSE(IsDIrreducibleOnDownset(twelve.lattice, cert, p).irreducible);
  DownsetVerdict bottom =
      IsDIrreducibleOnDownset(twelve.lattice, cert, twelve.lattice.bottom());
  EXPECT_TRUE(bottom.irreducible);
  EXPECT_TRUE(bottom.equality);
  for (std::uint64_t n = 2; n <= 60; ++n) {
    DivisorLattice dl = MakeDivisorLattice(n);
    CertifiedMetric c = CertifyValuation(dl.lattice, Valuation(dl.Omega()));
    for (Element q = 0; q < dl.lattice.size(); ++q) {
      DownsetVerdict v = IsDIrreducibleOnDownset(dl.lattice, c, q);
      bool full = IsDIrreducible(dl.lattice, c.metric(), q).irreducible;
      EXPECT_EQ(v.irreducible, full) << n << " " << q;
      if (full) {
        EXPECT_TRUE(v.equality);
      }
    }
  }
}

TEST(AnalysisTest, CertificationRejectsBadInput) {
  SubspaceLattice m3 = MakeSubspaceLattice(2, 2);
  try {
    CertifyValuation(m3.lattice, Valuation(m3.Dimension()));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kMetricNotCertified);
  }
  SetLattice s = ThreeAtomSets();
  std::vector<Rational> flat(s.size(), Rational(1));
  try {
    CertifyValuation(s.lattice(), Valuation(flat));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kMetricNotCertified);
  }
  CertifiedMetric ultra = CertifyMetric(s.lattice(), IdentityKappaMetric(s));
  EXPECT_EQ(ultra.intervaluation().op, CombineOp::Max());
}

TEST(AnalysisTest, ChainCriterionOnDivisorLattices) {
  for (std::uint64_t n = 2; n <= 100; ++n) {
    DivisorLattice d = MakeDivisorLattice(n);
    EXPECT_TRUE(TheoremCrosscheck(d.lattice, Valuation(d.Omega())).empty()) << n;
    MetricTable m = MetricFromValuation(d.lattice, Valuation(d.Omega()));
    EXPECT_TRUE(FindJoinIrreducibleNotDIrreducible(d.lattice, m).empty());
  }
}

TEST(AnalysisTest, ChainCriterionOnRandomSetLattices) {
  oracle::Gen gen(13);
  for (int round = 0; round < 120; ++round) {
    SetLattice s = RandomSets(gen, 5, 10);
    std::vector<Rational> mu;
    for (std::size_t i = 0; i < s.ground().size(); ++i) {
      mu.push_back(gen.Positive());
    }
    std::vector<Rational> v;
    for (AtomSet m : s.members()) {
      Rational t = 0;
      for (std::size_t i = 0; i < mu.size(); ++i) {
        if ((m >> i) & 1u) t += mu[i];
      }
      v.push_back(t);
    }
    EXPECT_TRUE(TheoremCrosscheck(s.lattice(), Counting(s)).empty());
    EXPECT_TRUE(TheoremCrosscheck(s.lattice(), Valuation(v)).empty());
    MetricTable d1 = MetricFromValuation(s.lattice(), Valuation(v));
    MetricTable d2 =
        MetricFromValuation(s.lattice(), Valuation(v).Scaled(Rational(2)));
    EXPECT_EQ(Mli(s.lattice(), d1), Mli(s.lattice(), d2));
  }
}

TEST(AnalysisTest, ChainCriterionNeedsDistributivity) {
  SubspaceLattice m3 = MakeSubspaceLattice(2, 2);
  try {
    TheoremCrosscheck(m3.lattice, Valuation(m3.Dimension()));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kHypothesisUnmet);
  }
  // The unchecked comparison still reports: the top of M3 has a non-chain
  // down-set and is not d-irreducible, so nothing disagrees there.
  MetricTable d = MetricTable::FromRationals(
      [&] {
        PairTable t(m3.lattice.size());
        auto dims = m3.Dimension();
        for (Element f = 0; f < m3.lattice.size(); ++f) {
          for (Element g = 0; g < m3.lattice.size(); ++g) {
            t(f, g) = 2 * dims[m3.lattice.Join(f, g)] - dims[f] - dims[g];
          }
        }
        return t;
      }(),
      MetricKind::kRaw);
  for (const auto& c : CompareWithDownsetChains(m3.lattice, d)) {
    EXPECT_NE(c.p, m3.lattice.top());
  }
}

TEST(AnalysisTest, PuzzleOnTheThreeAtomLattice) {
  SetLattice s = ThreeAtomSets();
  Element x = *s.Find(0b111);
  PuzzleVerdict v = PuzzleCriterion(s, x);
  EXPECT_FALSE(v.d_irreducible);
  for (const PuzzleRow& row : SolvePuzzle(s)) {
    EXPECT_TRUE(row.agree()) << s.lattice().label(row.member);
    if (std::popcount(s.member(row.member)) <= 1) {
      EXPECT_TRUE(row.criterion.d_irreducible);
    }
  }
  EXPECT_FALSE(ShrinkPuzzleDisagreement(s));
}

// The criterion against the brute-force verdict on random instances; any
// disagreement must shrink to a smaller one that still disagrees.
TEST(AnalysisTest, PuzzleAgainstOracle) {
  oracle::Gen gen(14);
  for (int round = 0; round < 100; ++round) {
    SetLattice s = RandomSets(gen, 5, 5);
    MetricTable d = IdentityKappaMetric(s);
    for (const PuzzleRow& row : SolvePuzzle(s)) {
      EXPECT_EQ(row.oracle.irreducible,
                oracle::DIrreducible(s.size(), OrderOf(s.lattice()),
                                     DistOf(d), row.member));
    }
    if (auto shrunk = ShrinkPuzzleDisagreement(s)) {
      EXPECT_LE(shrunk->sets.size(), s.size());
      auto rows = SolvePuzzle(shrunk->sets);
      EXPECT_FALSE(rows[shrunk->member].agree());
    }
  }
}

TEST(AnalysisTest, BasesOnGridFive) {
  PointwiseLattice grid = GridFive();
  MetricTable d = SupMetric(grid);
  std::vector<Element> all(grid.size());
  for (Element e = 0; e < grid.size(); ++e) all[e] = e;
  EXPECT_TRUE(CheckRBase(grid.lattice, d, all, 0).covered);
  std::vector<Element> want{At(grid, {0, 0}), At(grid, {1, 0}),
                            At(grid, {0, 1}), At(grid, {2, 2})};
  std::sort(want.begin(), want.end());
  std::vector<Element> minimal = MinimalBase(grid.lattice, d, 0);
  EXPECT_EQ(minimal, want);
  BaseReport rep = CheckRBase(grid.lattice, d, minimal, 0);
  EXPECT_TRUE(rep.covered);
  EXPECT_TRUE(rep.mli_within_r);
  for (const auto& m : rep.mli_distances) EXPECT_TRUE(m.to_closure.IsZero());
  std::vector<Element> without_top{At(grid, {0, 0}), At(grid, {1, 0}),
                                   At(grid, {0, 1}), At(grid, {1, 1})};
  BaseReport missing = CheckRBase(grid.lattice, d, without_top, 0);
  EXPECT_FALSE(missing.covered);
  EXPECT_EQ(missing.uncovered, std::vector<Element>{At(grid, {2, 2})});
  EXPECT_TRUE(CheckRBase(grid.lattice, d, without_top, 1).covered);
}

TEST(AnalysisTest, MinimalBasesOfCubeAndChain) {
  std::vector<std::int64_t> nums{1, 2, 3};
  std::vector<AtomSet> gens{0b001, 0b010, 0b100};
  SetLattice cube = SubsetLattice(NumericAtoms(nums), gens, true);
  std::vector<Element> want{*cube.Find(0), *cube.Find(0b001),
                            *cube.Find(0b010), *cube.Find(0b100)};
  std::sort(want.begin(), want.end());
  EXPECT_EQ(MinimalBase(cube.lattice(), DiscreteMetric(8), 0), want);
  FiniteLattice chain = Chain(4);
  EXPECT_EQ(MinimalBase(chain, DiscreteMetric(4), 0).size(), 4u);
  std::vector<Element> tops{0, 3};
  EXPECT_EQ(JoinClosure(chain, tops), tops);
}

TEST(AnalysisTest, ConesAreZeroBases) {
  FiniteMetricSpace path{{"a", "b", "c"},
                         {{0, 1, 2}, {1, 0, 1}, {2, 1, 0}}, 0};
  GridLipschitzLattice lat = BuildLipschitzLattice(path, 1, 2);
  for (const MetricTable& d : {SupMetric(lat.functions), L1Metric(lat),
                               PeakMetric(lat.functions)}) {
    BaseReport rep = CheckRBase(lat.lattice(), d, LambdaConeElements(lat), 0);
    EXPECT_TRUE(rep.covered);
    EXPECT_TRUE(rep.mli_within_r);
  }
}

}  // namespace
}  // namespace metriclat
