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

#include <algorithm>
#include <limits>
#include <thread>

#include "metriclat/error.h"
#include "metriclat/ultravaluation.h"

namespace metriclat {

namespace {

void CheckSize(const FiniteLattice& lattice, const MetricTable& d) {
  if (d.size() != lattice.size()) {
    throw Error(ErrorCode::kMismatch,
                "metric has " + std::to_string(d.size()) +
                    " rows, lattice has " + std::to_string(lattice.size()));
  }
}

// d(p,f) ∧ d(p,g) <= d(p, f∨g), compared on stored powers.
bool PairHolds(const FiniteLattice& lattice, const MetricTable& d, Element p,
               Element f, Element g) {
  const Rational& a = d.power(p, f);
  const Rational& b = d.power(p, g);
  return (a < b ? a : b) <= d.power(p, lattice.Join(f, g));
}

bool PairEqual(const FiniteLattice& lattice, const MetricTable& d, Element p,
               Element f, Element g) {
  const Rational& a = d.power(p, f);
  const Rational& b = d.power(p, g);
  return (a < b ? a : b) == d.power(p, lattice.Join(f, g));
}

// Runs body(i) for i in [0, n) on up to `threads` workers.
template <typename Body>
void ParallelFor(std::size_t n, unsigned threads, Body body) {
  threads = std::max(1u, std::min<unsigned>(threads, n == 0 ? 1 : n));
  if (threads == 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      for (std::size_t i = t; i < n; i += threads) body(i);
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace

DIrreducibility IsDIrreducible(const FiniteLattice& lattice,
                               const MetricTable& d, Element p) {
  CheckSize(lattice, d);
  const std::size_t n = lattice.size();
  for (Element f = 0; f < n; ++f) {
    for (Element g = f; g < n; ++g) {
      if (!PairHolds(lattice, d, p, f, g)) return {false, DWitness{f, g}};
    }
  }
  return {true, std::nullopt};
}

bool IsDIrreducibleOverFamilies(const FiniteLattice& lattice,
                                const MetricTable& d, Element p) {
  CheckSize(lattice, d);
  const std::size_t n = lattice.size();
  if (n > 20) {
    throw Error(ErrorCode::kTooLarge, "family enumeration needs <= 20 elements");
  }
  const std::size_t count = std::size_t{1} << n;
  std::vector<Element> join(count), nearest(count);
  for (std::size_t mask = 1; mask < count; ++mask) {
    Element e = static_cast<Element>(__builtin_ctzll(mask));
    std::size_t rest = mask & (mask - 1);
    if (rest == 0) {
      join[mask] = e;
      nearest[mask] = e;
    } else {
      join[mask] = lattice.Join(join[rest], e);
      nearest[mask] =
          d.power(p, e) < d.power(p, nearest[rest]) ? e : nearest[rest];
    }
    if (d.power(p, nearest[mask]) > d.power(p, join[mask])) return false;
  }
  return true;
}

std::vector<Element> Mli(const FiniteLattice& lattice, const MetricTable& d,
                         unsigned threads) {
  return AnalyzeIrreducibility(lattice, d, threads).mli;
}

IrreducibilityReport AnalyzeIrreducibility(const FiniteLattice& lattice,
                                           const MetricTable& d,
                                           unsigned threads) {
  CheckSize(lattice, d);
  const std::size_t n = lattice.size();
  IrreducibilityReport report;
  report.elements.resize(n);
  for (Element p : lattice.JoinIrreducibles()) {
    report.elements[p].join_irreducible = true;
  }
  ParallelFor(n, threads, [&](std::size_t p) {
    ElementFlags& flags = report.elements[p];
    auto down = lattice.DownSet(p);
    flags.downset_chain = lattice.IsChain(down);
    DIrreducibility r = IsDIrreducible(lattice, d, p);
    flags.d_irreducible = r.irreducible;
    flags.witness = r.witness;
  });
  for (Element p = 0; p < n; ++p) {
    if (report.elements[p].d_irreducible) report.mli.push_back(p);
  }
  return report;
}

CertifiedMetric CertifyIntervaluation(const FiniteLattice& lattice,
                                      Intervaluation iv) {
  if (!lattice.IsDistributive()) {
    throw Error(ErrorCode::kMetricNotCertified, "lattice is not distributive");
  }
  auto bad = CheckIntervaluation(lattice, iv, 1);
  if (!bad.empty()) {
    const auto& v = bad.front();
    throw Error(ErrorCode::kMetricNotCertified,
                std::string("not an intervaluation: ") +
                    IntervaluationViolationName(v.kind) + " at f=" +
                    lattice.label(v.f) + ", g=" + lattice.label(v.g) +
                    ", h=" + lattice.label(v.h));
  }
  if (!IsPositive(lattice, iv)) {
    throw Error(ErrorCode::kMetricNotCertified, "intervaluation is not positive");
  }
  MetricTable d = MetricFromIntervaluation(lattice, iv);
  return CertifiedMetric(std::move(d), std::move(iv));
}

CertifiedMetric CertifyValuation(const FiniteLattice& lattice,
                                 const Valuation& v) {
  if (!CheckModularLaw(lattice, v).empty()) {
    throw Error(ErrorCode::kMetricNotCertified, "valuation is not modular");
  }
  if (!ClassifyValuation(lattice, v).positive) {
    throw Error(ErrorCode::kMetricNotCertified, "valuation is not positive");
  }
  DifferenceValuation w = MakeDifferenceValuation(lattice, v);
  return CertifyIntervaluation(
      lattice, Intervaluation{SurdTable(w.table()), CombineOp::Add()});
}

CertifiedMetric CertifyMetric(const FiniteLattice& lattice,
                              const MetricTable& d) {
  CheckSize(lattice, d);
  if (!lattice.IsDistributive()) {
    throw Error(ErrorCode::kMetricNotCertified, "lattice is not distributive");
  }
  for (const OpQualification& q : ClassifyMetric(lattice, d)) {
    if (!q.qualifies()) continue;
    try {
      return CertifyIntervaluation(
          lattice, Intervaluation{WFromMetric(lattice, d), q.op});
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kUnsupportedArithmetic &&
          e.code() != ErrorCode::kMetricNotCertified) {
        throw;
      }
    }
  }
  throw Error(ErrorCode::kMetricNotCertified,
              "no builtin op makes the metric a positive intervaluation metric");
}

DownsetVerdict IsDIrreducibleOnDownset(const FiniteLattice& lattice,
                                       const CertifiedMetric& cert,
                                       Element p) {
  const MetricTable& d = cert.metric();
  CheckSize(lattice, d);
  DownsetVerdict out;
  auto down = lattice.DownSet(p);
  for (std::size_t i = 0; i < down.size(); ++i) {
    for (std::size_t j = i; j < down.size(); ++j) {
      if (!PairHolds(lattice, d, p, down[i], down[j])) out.irreducible = false;
      if (!PairEqual(lattice, d, p, down[i], down[j])) out.equality = false;
    }
  }
  return out;
}

std::vector<ChainDiscrepancy> CompareWithDownsetChains(
    const FiniteLattice& lattice, const MetricTable& d) {
  IrreducibilityReport report = AnalyzeIrreducibility(lattice, d);
  std::vector<ChainDiscrepancy> out;
  for (Element p = 0; p < lattice.size(); ++p) {
    const auto& flags = report.elements[p];
    if (flags.d_irreducible != flags.downset_chain) {
      out.push_back({p, flags.d_irreducible, flags.downset_chain});
    }
  }
  return out;
}

std::vector<ChainDiscrepancy> TheoremCrosscheck(const FiniteLattice& lattice,
                                                const Valuation& v) {
  if (v.size() != lattice.size()) {
    throw Error(ErrorCode::kMismatch, "valuation size differs from lattice");
  }
  if (!lattice.IsDistributive()) {
    throw Error(ErrorCode::kHypothesisUnmet, "lattice is not distributive");
  }
  if (!CheckModularLaw(lattice, v).empty()) {
    throw Error(ErrorCode::kHypothesisUnmet, "valuation is not modular");
  }
  if (!ClassifyValuation(lattice, v).positive) {
    throw Error(ErrorCode::kHypothesisUnmet, "valuation is not positive");
  }
  return CompareWithDownsetChains(lattice, MetricFromValuation(lattice, v));
}

std::vector<Element> FindJoinIrreducibleNotDIrreducible(
    const FiniteLattice& lattice, const MetricTable& d) {
  std::vector<Element> out;
  for (Element p : lattice.JoinIrreducibles()) {
    if (!IsDIrreducible(lattice, d, p).irreducible) out.push_back(p);
  }
  return out;
}

namespace {

std::vector<std::int64_t> Numbers(const SetLattice& sets) {
  std::vector<std::int64_t> out;
  for (const Atom& a : sets.ground()) {
    if (!a.number || *a.number < 0) {
      throw Error(ErrorCode::kInvalidArgument,
                  "atom \"" + a.name + "\" is not a natural number");
    }
    out.push_back(*a.number);
  }
  return out;
}

}  // namespace

MetricTable IdentityKappaMetric(const SetLattice& sets) {
  KappaWeights kappa;
  for (std::int64_t x : Numbers(sets)) kappa.kappa.emplace_back(x);
  MetricTable d =
      MetricFromUltravaluation(sets.lattice(), FromKappa(sets, kappa));
  return MetricTable(d.distances(), MetricKind::kUltravaluation,
                     "kappa=identity");
}

PuzzleVerdict PuzzleCriterion(const SetLattice& sets, Element a) {
  const auto numbers = Numbers(sets);
  auto max_of = [&](AtomSet s) {
    std::int64_t best = std::numeric_limits<std::int64_t>::min();
    for (std::size_t i = 0; i < numbers.size(); ++i) {
      if ((s >> i) & 1u) best = std::max(best, numbers[i]);
    }
    return best;
  };
  const AtomSet whole = sets.member(a);
  std::vector<Element> inside;
  for (Element e = 0; e < sets.size(); ++e) {
    AtomSet m = sets.member(e);
    if (m != whole && (m & ~whole) == 0 && m != 0) inside.push_back(e);
  }
  for (std::size_t i = 0; i < inside.size(); ++i) {
    for (std::size_t j = i + 1; j < inside.size(); ++j) {
      AtomSet b = sets.member(inside[i]);
      AtomSet c = sets.member(inside[j]);
      std::int64_t rest = max_of(whole & ~(b | c));
      if (max_of(b) > rest && max_of(c) > rest) {
        return {false, std::make_pair(inside[i], inside[j])};
      }
    }
  }
  return {true, std::nullopt};
}

std::vector<PuzzleRow> SolvePuzzle(const SetLattice& sets) {
  MetricTable d = IdentityKappaMetric(sets);
  std::vector<PuzzleRow> rows;
  for (Element e = 0; e < sets.size(); ++e) {
    rows.push_back({e, PuzzleCriterion(sets, e),
                    IsDIrreducible(sets.lattice(), d, e)});
  }
  return rows;
}

namespace {

std::optional<Element> FirstDisagreement(const SetLattice& sets) {
  for (const PuzzleRow& row : SolvePuzzle(sets)) {
    if (!row.agree()) return row.member;
  }
  return std::nullopt;
}

std::optional<SetLattice> DropAtom(const SetLattice& sets, std::size_t atom) {
  std::vector<Atom> ground;
  for (std::size_t i = 0; i < sets.ground().size(); ++i) {
    if (i != atom) ground.push_back(sets.ground()[i]);
  }
  AtomSet low = (AtomSet{1} << atom) - 1;
  std::vector<AtomSet> members;
  for (AtomSet m : sets.members()) {
    AtomSet projected = (m & low) | ((m >> (atom + 1)) << atom);
    if (std::find(members.begin(), members.end(), projected) == members.end()) {
      members.push_back(projected);
    }
  }
  try {
    return SetLattice::FromMembers(std::move(ground), std::move(members));
  } catch (const Error&) {
    return std::nullopt;
  }
}

std::optional<SetLattice> DropMember(const SetLattice& sets, Element e) {
  if (sets.size() <= 1 || sets.member(e) == 0) return std::nullopt;
  std::vector<AtomSet> members;
  for (Element i = 0; i < sets.size(); ++i) {
    if (i != e) members.push_back(sets.member(i));
  }
  try {
    return SetLattice::FromMembers(sets.ground(), std::move(members));
  } catch (const Error&) {
    return std::nullopt;
  }
}

}  // namespace

std::optional<PuzzleDisagreement> ShrinkPuzzleDisagreement(
    const SetLattice& sets) {
  if (!FirstDisagreement(sets)) return std::nullopt;
  SetLattice current = sets;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t atom = current.ground().size(); atom-- > 0 && !changed;) {
      auto next = DropAtom(current, atom);
      if (next && FirstDisagreement(*next)) {
        current = std::move(*next);
        changed = true;
      }
    }
    for (Element e = current.size(); e-- > 0 && !changed;) {
      auto next = DropMember(current, e);
      if (next && FirstDisagreement(*next)) {
        current = std::move(*next);
        changed = true;
      }
    }
  }
  Element member = *FirstDisagreement(current);
  return PuzzleDisagreement{std::move(current), member};
}

std::vector<Element> JoinClosure(const FiniteLattice& lattice,
                                 std::span<const Element> base) {
  std::vector<char> in(lattice.size(), 0);
  std::vector<Element> members;
  for (Element b : base) {
    if (!in[b]) {
      in[b] = 1;
      members.push_back(b);
    }
  }
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      Element k = lattice.Join(members[i], members[j]);
      if (!in[k]) {
        in[k] = 1;
        members.push_back(k);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

namespace {

// Elements farther than R (given as R^index) from every closure member.
std::vector<Element> Uncovered(const FiniteLattice& lattice,
                               const MetricTable& d,
                               std::span<const Element> closure,
                               const Rational& r_power) {
  std::vector<Element> out;
  for (Element f = 0; f < lattice.size(); ++f) {
    bool ok = std::any_of(closure.begin(), closure.end(), [&](Element c) {
      return d.power(f, c) <= r_power;
    });
    if (!ok) out.push_back(f);
  }
  return out;
}

Surd Nearest(const MetricTable& d, Element p, std::span<const Element> set) {
  std::optional<Element> best;
  for (Element e : set) {
    if (!best || d.power(p, e) < d.power(p, *best)) best = e;
  }
  if (!best) return Surd(Rational(-1));
  return d.at(p, *best);
}

Rational RPower(const MetricTable& d, const Rational& r) {
  if (r < 0) throw Error(ErrorCode::kInvalidArgument, "R must be >= 0");
  return Pow(r, d.root_index());
}

}  // namespace

BaseReport CheckRBase(const FiniteLattice& lattice, const MetricTable& d,
                      std::span<const Element> base, const Rational& r) {
  CheckSize(lattice, d);
  const Rational r_power = RPower(d, r);
  BaseReport report;
  report.base.assign(base.begin(), base.end());
  std::sort(report.base.begin(), report.base.end());
  report.base.erase(std::unique(report.base.begin(), report.base.end()),
                    report.base.end());
  report.r = r;
  report.closure = JoinClosure(lattice, report.base);
  report.uncovered = Uncovered(lattice, d, report.closure, r_power);
  report.covered = report.uncovered.empty();
  report.mli_within_r = true;
  for (Element p : Mli(lattice, d)) {
    BaseReport::MliDistance m{p, Nearest(d, p, report.base),
                              Nearest(d, p, report.closure)};
    if (report.base.empty() || m.to_base.radicand() > r_power) {
      report.mli_within_r = false;
    }
    report.mli_distances.push_back(std::move(m));
  }
  return report;
}

std::vector<Element> MinimalBase(const FiniteLattice& lattice,
                                 const MetricTable& d, const Rational& r) {
  CheckSize(lattice, d);
  const Rational r_power = RPower(d, r);
  std::vector<Element> base(lattice.size());
  for (Element e = 0; e < base.size(); ++e) base[e] = e;
  for (Element e = lattice.size(); e-- > 0;) {
    std::vector<Element> trial;
    for (Element b : base) {
      if (b != e) trial.push_back(b);
    }
    if (trial.empty()) continue;
    if (Uncovered(lattice, d, JoinClosure(lattice, trial), r_power).empty()) {
      base = std::move(trial);
    }
  }
  return base;
}

}  // namespace metriclat
