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

#ifndef METRICLAT_GENERATORS_H_
#define METRICLAT_GENERATORS_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "metriclat/lattice.h"
#include "metriclat/rational.h"

namespace metriclat {

// Ground-set atom. `number` is set when the atom is an integer; the puzzle
// tooling and κ = identity need it.
struct Atom {
  std::string name;
  std::optional<std::int64_t> number;

  friend bool operator==(const Atom&, const Atom&) = default;
};

std::vector<Atom> NumericAtoms(std::span<const std::int64_t> numbers);
std::vector<Atom> NamedAtoms(std::span<const std::string> names);

// Subset of the ground list as a bit-vector (bit i = ground[i]).
using AtomSet = std::uint64_t;
inline constexpr std::size_t kMaxAtoms = 64;

// A lattice of subsets of a finite ground set under union and intersection.
class SetLattice {
 public:
  // Members must be closed under union and intersection; their order becomes
  // the element order of the lattice. Throws Error(kNotClosed) otherwise.
  static SetLattice FromMembers(std::vector<Atom> ground,
                                std::vector<AtomSet> members);

  const std::vector<Atom>& ground() const { return ground_; }
  const std::vector<AtomSet>& members() const { return members_; }
  AtomSet member(Element e) const { return members_[e]; }
  const FiniteLattice& lattice() const { return lattice_; }
  std::size_t size() const { return members_.size(); }

  std::optional<Element> Find(AtomSet set) const;
  // "{1,2}"; the empty set prints as "{}".
  std::string FormatSet(AtomSet set) const;
  AtomSet MaskOf(std::span<const std::string> names) const;

 private:
  SetLattice(std::vector<Atom> ground, std::vector<AtomSet> members,
             FiniteLattice lattice)
      : ground_(std::move(ground)),
        members_(std::move(members)),
        lattice_(std::move(lattice)) {}

  std::vector<Atom> ground_;
  std::vector<AtomSet> members_;
  FiniteLattice lattice_;
};

// Closure of `generators` (plus ∅, plus the ground set when flagged) under
// union and intersection. Members are numbered by (popcount, mask).
// Throws Error(kClosureTooLarge) beyond FiniteLattice::kMaxElements members.
SetLattice SubsetLattice(std::vector<Atom> ground,
                         std::span<const AtomSet> generators,
                         bool include_ground);

struct DivisorLattice {
  std::uint64_t n = 0;
  std::vector<std::uint64_t> divisors;  // ascending; element i is divisors[i]
  std::vector<std::uint64_t> primes;
  std::vector<std::vector<unsigned>> exponents;  // per divisor, per prime
  FiniteLattice lattice;

  // Ω: prime factors counted with multiplicity.
  std::vector<Rational> Omega() const;
};

// Divisors of n under divisibility (join = lcm, meet = gcd); 2 <= n <= 10^6.
DivisorLattice MakeDivisorLattice(std::uint64_t n);

// A lattice whose elements are functions from a finite point set to the
// rationals, ordered pointwise (join/meet are pointwise max/min).
struct PointwiseLattice {
  std::vector<std::string> points;
  std::vector<std::vector<Rational>> values;  // values[e][x]
  FiniteLattice lattice;

  std::size_t size() const { return values.size(); }
  std::optional<Element> Find(std::span<const Rational> function) const;
};

// Builds the pointwise lattice of the given functions; they must be closed
// under pointwise max and min. Labels default to "(v0,v1,...)".
PointwiseLattice MakePointwiseLattice(std::vector<std::string> points,
                                      std::vector<std::vector<Rational>> values,
                                      std::vector<std::string> labels = {});

// Integer grid ∏ [0, h_i] with componentwise order; elements are in
// lexicographic order, labelled "(i,j,...)".
PointwiseLattice ProductChainLattice(std::span<const unsigned> heights);

struct Sublattice {
  FiniteLattice lattice;
  std::vector<Element> origin;  // element i of the sublattice is origin[i]
};

// Restriction to `subset` (renumbered in ascending parent order). Throws
// NotClosedError naming the first pair whose join or meet escapes.
Sublattice MakeSublattice(const FiniteLattice& parent,
                          std::span<const Element> subset);
PointwiseLattice MakeSublattice(const PointwiseLattice& parent,
                                std::span<const Element> subset);
SetLattice MakeSublattice(const SetLattice& parent,
                          std::span<const Element> subset);

struct SubspaceLattice {
  unsigned q = 0;
  unsigned n = 0;
  // Reduced row-echelon bases, rows over {0..q-1}.
  std::vector<std::vector<std::vector<unsigned>>> bases;
  std::vector<unsigned> dims;
  FiniteLattice lattice;

  std::vector<Rational> Dimension() const;
};

// All subspaces of F_q^n (q prime, n <= 4), by dimension then basis.
SubspaceLattice MakeSubspaceLattice(unsigned q, unsigned n);

}  // namespace metriclat

#endif  // METRICLAT_GENERATORS_H_
