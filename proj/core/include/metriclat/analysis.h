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

#ifndef METRICLAT_ANALYSIS_H_
#define METRICLAT_ANALYSIS_H_

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "metriclat/generators.h"
#include "metriclat/intervaluation.h"
#include "metriclat/metric.h"
#include "metriclat/valuation.h"

namespace metriclat {

// A pair (f, g) with d(p,f) ∧ d(p,g) > d(p, f∨g).
struct DWitness {
  Element f, g;
  friend bool operator==(const DWitness&, const DWitness&) = default;
};

struct DIrreducibility {
  bool irreducible = true;
  std::optional<DWitness> witness;
};

// Brute force over every pair of elements.
DIrreducibility IsDIrreducible(const FiniteLattice& lattice,
                               const MetricTable& d, Element p);

// The same inequality for every nonempty family of elements:
// min_j d(p, f_j) <= d(p, ⋁ f_j). Exponential; at most 20 elements.
bool IsDIrreducibleOverFamilies(const FiniteLattice& lattice,
                                const MetricTable& d, Element p);

// All d-irreducible elements, ascending.
std::vector<Element> Mli(const FiniteLattice& lattice, const MetricTable& d,
                         unsigned threads = 1);

struct ElementFlags {
  bool join_irreducible = false;
  bool d_irreducible = false;
  bool downset_chain = false;
  std::optional<DWitness> witness;
};

struct IrreducibilityReport {
  std::vector<ElementFlags> elements;
  std::vector<Element> mli;
};

IrreducibilityReport AnalyzeIrreducibility(const FiniteLattice& lattice,
                                           const MetricTable& d,
                                           unsigned threads = 1);

// A metric known to come from a positive intervaluation on a distributive
// lattice. Only the Certify* functions below produce one.
class CertifiedMetric {
 public:
  const MetricTable& metric() const { return d_; }
  const Intervaluation& intervaluation() const { return iv_; }

 private:
  friend CertifiedMetric CertifyIntervaluation(const FiniteLattice&,
                                               Intervaluation);
  CertifiedMetric(MetricTable d, Intervaluation iv)
      : d_(std::move(d)), iv_(std::move(iv)) {}
  MetricTable d_;
  Intervaluation iv_;
};

// Throws Error(kMetricNotCertified) naming the failed requirement.
CertifiedMetric CertifyIntervaluation(const FiniteLattice& lattice,
                                      Intervaluation iv);
CertifiedMetric CertifyValuation(const FiniteLattice& lattice,
                                 const Valuation& v);
// Tries w_d with every builtin op and keeps the first that qualifies.
CertifiedMetric CertifyMetric(const FiniteLattice& lattice,
                              const MetricTable& d);

struct DownsetVerdict {
  bool irreducible = true;
  // d(p,f) ∧ d(p,g) = d(p, f∨g) for all f, g < p.
  bool equality = true;
};

// The pairwise test restricted to f, g strictly below p.
DownsetVerdict IsDIrreducibleOnDownset(const FiniteLattice& lattice,
                                       const CertifiedMetric& d, Element p);

struct ChainDiscrepancy {
  Element p;
  bool d_irreducible;
  bool downset_chain;
};

// Elements where d-irreducibility and "↓p is a chain" disagree. No
// hypotheses are checked.
std::vector<ChainDiscrepancy> CompareWithDownsetChains(
    const FiniteLattice& lattice, const MetricTable& d);

// Same for the valuation metric of v. Throws Error(kHypothesisUnmet) unless
// the lattice is distributive and v is a positive valuation.
std::vector<ChainDiscrepancy> TheoremCrosscheck(const FiniteLattice& lattice,
                                                const Valuation& v);

std::vector<Element> FindJoinIrreducibleNotDIrreducible(
    const FiniteLattice& lattice, const MetricTable& d);

// κ(x) = x on a set lattice whose atoms are natural numbers. Throws
// Error(kInvalidArgument) for other atoms.
MetricTable IdentityKappaMetric(const SetLattice& sets);

struct PuzzleVerdict {
  bool d_irreducible = true;
  // Members B, C inside A that both reach above everything A \ (B ∪ C) keeps.
  std::optional<std::pair<Element, Element>> witness;
};

// A is not d-irreducible iff distinct members B, C ⊊ A each contain a
// number larger than every element of A \ (B ∪ C).
PuzzleVerdict PuzzleCriterion(const SetLattice& sets, Element a);

struct PuzzleRow {
  Element member;
  PuzzleVerdict criterion;
  DIrreducibility oracle;
  bool agree() const { return criterion.d_irreducible == oracle.irreducible; }
};

std::vector<PuzzleRow> SolvePuzzle(const SetLattice& sets);

struct PuzzleDisagreement {
  SetLattice sets;
  Element member;
};

// Repeatedly drops atoms and members while some member still disagrees. The
// empty member is always kept.
std::optional<PuzzleDisagreement> ShrinkPuzzleDisagreement(
    const SetLattice& sets);

// Joins of nonempty subfamilies of `base`, ascending.
std::vector<Element> JoinClosure(const FiniteLattice& lattice,
                                 std::span<const Element> base);

struct BaseReport {
  std::vector<Element> base;
  Rational r;
  bool covered = false;
  std::vector<Element> closure;
  std::vector<Element> uncovered;  // elements farther than R from the closure
  struct MliDistance {
    Element p;
    Surd to_base;     // min over b in B of d(p, b)
    Surd to_closure;  // min over the join-closure
  };
  std::vector<MliDistance> mli_distances;
  // Every d-irreducible element lies within R of B itself.
  bool mli_within_r = false;
};

BaseReport CheckRBase(const FiniteLattice& lattice, const MetricTable& d,
                      std::span<const Element> base, const Rational& r);

// Starts from every element and drops them in descending index order while
// the remainder stays an R-base.
std::vector<Element> MinimalBase(const FiniteLattice& lattice,
                                 const MetricTable& d, const Rational& r);

}  // namespace metriclat

#endif  // METRICLAT_ANALYSIS_H_
