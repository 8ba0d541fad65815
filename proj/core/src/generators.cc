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

#include "metriclat/generators.h"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "metriclat/error.h"

namespace metriclat {

std::vector<Atom> NumericAtoms(std::span<const std::int64_t> numbers) {
  std::vector<Atom> atoms;
  for (auto v : numbers) atoms.push_back({std::to_string(v), v});
  return atoms;
}

std::vector<Atom> NamedAtoms(std::span<const std::string> names) {
  std::vector<Atom> atoms;
  for (const auto& name : names) atoms.push_back({name, std::nullopt});
  return atoms;
}

namespace {

void CheckGround(const std::vector<Atom>& ground) {
  if (ground.size() > kMaxAtoms) {
    throw Error(ErrorCode::kTooLarge,
                "ground sets are limited to " + std::to_string(kMaxAtoms) +
                    " atoms");
  }
  std::unordered_set<std::string> names;
  for (const auto& atom : ground) {
    if (!names.insert(atom.name).second) {
      throw Error(ErrorCode::kInvalidArgument,
                  "duplicate atom \"" + atom.name + "\"");
    }
  }
}

AtomSet GroundMask(std::size_t atoms) {
  return atoms == 64 ? ~AtomSet{0} : (AtomSet{1} << atoms) - 1;
}

std::string FormatAtomSet(const std::vector<Atom>& ground, AtomSet set) {
  std::string out = "{";
  bool first = true;
  for (std::size_t i = 0; i < ground.size(); ++i) {
    if ((set >> i) & 1u) {
      if (!first) out += ",";
      out += ground[i].name;
      first = false;
    }
  }
  return out + "}";
}

}  // namespace

std::string SetLattice::FormatSet(AtomSet set) const {
  return FormatAtomSet(ground_, set);
}

AtomSet SetLattice::MaskOf(std::span<const std::string> names) const {
  AtomSet mask = 0;
  for (const auto& name : names) {
    auto it = std::find_if(ground_.begin(), ground_.end(),
                           [&](const Atom& a) { return a.name == name; });
    if (it == ground_.end()) {
      throw Error(ErrorCode::kMismatch, "unknown atom \"" + name + "\"");
    }
    mask |= AtomSet{1} << (it - ground_.begin());
  }
  return mask;
}

std::optional<Element> SetLattice::Find(AtomSet set) const {
  auto it = std::find(members_.begin(), members_.end(), set);
  if (it == members_.end()) return std::nullopt;
  return static_cast<Element>(it - members_.begin());
}

SetLattice SetLattice::FromMembers(std::vector<Atom> ground,
                                   std::vector<AtomSet> members) {
  CheckGround(ground);
  const AtomSet all = GroundMask(ground.size());
  std::unordered_map<AtomSet, Element> index;
  for (Element i = 0; i < members.size(); ++i) {
    if (members[i] & ~all) {
      throw Error(ErrorCode::kInvalidArgument, "member uses atoms outside ground");
    }
    if (!index.emplace(members[i], i).second) {
      throw Error(ErrorCode::kInvalidArgument, "duplicate member");
    }
  }
  for (Element a = 0; a < members.size(); ++a) {
    for (Element b = a + 1; b < members.size(); ++b) {
      AtomSet u = members[a] | members[b];
      AtomSet m = members[a] & members[b];
      if (!index.contains(u) || !index.contains(m)) {
        bool is_join = !index.contains(u);
        throw NotClosedError(a, b, is_join, 0,
                             std::string("members not closed under ") +
                                 (is_join ? "union" : "intersection"));
      }
    }
  }
  std::vector<std::string> labels;
  for (AtomSet m : members) labels.push_back(FormatAtomSet(ground, m));
  FiniteLattice lattice = FiniteLattice::FromOrder(
      members.size(),
      [&](Element a, Element b) { return (members[a] & ~members[b]) == 0; },
      std::move(labels));
  return SetLattice(std::move(ground), std::move(members), std::move(lattice));
}

SetLattice SubsetLattice(std::vector<Atom> ground,
                         std::span<const AtomSet> generators,
                         bool include_ground) {
  CheckGround(ground);
  const AtomSet all = GroundMask(ground.size());
  std::set<AtomSet> closure{AtomSet{0}};
  std::vector<AtomSet> work;
  auto add = [&](AtomSet s) {
    if (closure.insert(s).second) {
      if (closure.size() > FiniteLattice::kMaxElements) {
        throw Error(ErrorCode::kClosureTooLarge,
                    "closure exceeds " +
                        std::to_string(FiniteLattice::kMaxElements) +
                        " members");
      }
      work.push_back(s);
    }
  };
  for (AtomSet g : generators) {
    if (g & ~all) {
      throw Error(ErrorCode::kInvalidArgument,
                  "generator uses atoms outside ground");
    }
    add(g);
  }
  if (include_ground) add(all);
  while (!work.empty()) {
    AtomSet x = work.back();
    work.pop_back();
    std::vector<AtomSet> snapshot(closure.begin(), closure.end());
    for (AtomSet y : snapshot) {
      add(x | y);
      add(x & y);
    }
  }
  std::vector<AtomSet> members(closure.begin(), closure.end());
  std::sort(members.begin(), members.end(), [](AtomSet a, AtomSet b) {
    int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  return SetLattice::FromMembers(std::move(ground), std::move(members));
}

std::vector<Rational> DivisorLattice::Omega() const {
  std::vector<Rational> values;
  for (const auto& e : exponents) {
    values.emplace_back(std::accumulate(e.begin(), e.end(), 0u));
  }
  return values;
}

DivisorLattice MakeDivisorLattice(std::uint64_t n) {
  if (n < 2 || n > 1'000'000) {
    throw Error(ErrorCode::kInvalidArgument,
                "divisor lattices need 2 <= n <= 1000000");
  }
  DivisorLattice result;
  result.n = n;
  std::vector<unsigned> multiplicity;
  std::uint64_t rest = n;
  for (std::uint64_t p = 2; p * p <= rest; ++p) {
    if (rest % p != 0) continue;
    result.primes.push_back(p);
    multiplicity.push_back(0);
    while (rest % p == 0) {
      rest /= p;
      ++multiplicity.back();
    }
  }
  if (rest > 1) {
    result.primes.push_back(rest);
    multiplicity.push_back(1);
  }
  for (std::uint64_t d = 1; d <= n; ++d) {
    if (n % d == 0) result.divisors.push_back(d);
  }
  std::vector<std::string> labels;
  for (std::uint64_t d : result.divisors) {
    std::vector<unsigned> exps;
    for (std::uint64_t p : result.primes) {
      unsigned k = 0;
      for (std::uint64_t x = d; x % p == 0; x /= p) ++k;
      exps.push_back(k);
    }
    result.exponents.push_back(std::move(exps));
    labels.push_back(std::to_string(d));
  }
  const auto& divs = result.divisors;
  result.lattice = FiniteLattice::FromOrder(
      divs.size(), [&](Element a, Element b) { return divs[b] % divs[a] == 0; },
      std::move(labels));
  return result;
}

namespace {

std::string FormatTuple(std::span<const Rational> values) {
  std::string out = "(";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ",";
    out += FormatRational(values[i]);
  }
  return out + ")";
}

}  // namespace

std::optional<Element> PointwiseLattice::Find(
    std::span<const Rational> function) const {
  for (Element e = 0; e < values.size(); ++e) {
    if (std::equal(values[e].begin(), values[e].end(), function.begin(),
                   function.end())) {
      return e;
    }
  }
  return std::nullopt;
}

PointwiseLattice MakePointwiseLattice(std::vector<std::string> points,
                                      std::vector<std::vector<Rational>> values,
                                      std::vector<std::string> labels) {
  const std::size_t dim = points.size();
  std::map<std::vector<Rational>, Element> index;
  for (Element e = 0; e < values.size(); ++e) {
    if (values[e].size() != dim) {
      throw Error(ErrorCode::kInvalidArgument,
                  "function arity does not match the point set");
    }
    if (!index.emplace(values[e], e).second) {
      throw Error(ErrorCode::kInvalidArgument, "duplicate function");
    }
  }
  std::vector<Rational> hi(dim), lo(dim);
  for (Element a = 0; a < values.size(); ++a) {
    for (Element b = a + 1; b < values.size(); ++b) {
      for (std::size_t x = 0; x < dim; ++x) {
        hi[x] = std::max(values[a][x], values[b][x]);
        lo[x] = std::min(values[a][x], values[b][x]);
      }
      if (!index.contains(hi) || !index.contains(lo)) {
        bool is_join = !index.contains(hi);
        throw NotClosedError(a, b, is_join, 0,
                             "functions not closed under pointwise " +
                                 std::string(is_join ? "max" : "min"));
      }
    }
  }
  if (labels.empty()) {
    for (const auto& v : values) labels.push_back(FormatTuple(v));
  }
  FiniteLattice lattice = FiniteLattice::FromOrder(
      values.size(),
      [&](Element a, Element b) {
        for (std::size_t x = 0; x < dim; ++x) {
          if (values[b][x] < values[a][x]) return false;
        }
        return true;
      },
      std::move(labels));
  return {std::move(points), std::move(values), std::move(lattice)};
}

PointwiseLattice ProductChainLattice(std::span<const unsigned> heights) {
  if (heights.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "need at least one chain");
  }
  std::size_t total = 1;
  for (unsigned h : heights) {
    if (h == 0) throw Error(ErrorCode::kInvalidArgument, "heights must be >= 1");
    total *= h + 1;
    if (total > FiniteLattice::kMaxElements) {
      throw Error(ErrorCode::kTooLarge, "grid exceeds the table limit");
    }
  }
  std::vector<std::vector<Rational>> values;
  std::vector<unsigned> digits(heights.size(), 0);
  for (std::size_t k = 0; k < total; ++k) {
    values.emplace_back(digits.begin(), digits.end());
    for (std::size_t i = heights.size(); i-- > 0;) {
      if (++digits[i] <= heights[i]) break;
      digits[i] = 0;
    }
  }
  std::vector<std::string> points;
  for (std::size_t i = 0; i < heights.size(); ++i) {
    points.push_back(std::to_string(i));
  }
  return MakePointwiseLattice(std::move(points), std::move(values));
}

namespace {

std::vector<Element> SortedSubset(std::size_t size,
                                  std::span<const Element> subset) {
  std::vector<Element> sorted(subset.begin(), subset.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error(ErrorCode::kInvalidArgument, "sublattice lists an element twice");
  }
  if (sorted.empty() || sorted.back() >= size) {
    throw Error(ErrorCode::kInvalidArgument,
                "sublattice elements must be a nonempty subset of the parent");
  }
  return sorted;
}

}  // namespace

Sublattice MakeSublattice(const FiniteLattice& parent,
                          std::span<const Element> subset) {
  std::vector<Element> origin = SortedSubset(parent.size(), subset);
  std::vector<bool> inside(parent.size(), false);
  for (Element e : origin) inside[e] = true;
  for (std::size_t i = 0; i < origin.size(); ++i) {
    for (std::size_t j = i + 1; j < origin.size(); ++j) {
      Element a = origin[i], b = origin[j];
      for (bool is_join : {true, false}) {
        Element r = is_join ? parent.Join(a, b) : parent.Meet(a, b);
        if (!inside[r]) {
          throw NotClosedError(
              a, b, is_join, r,
              std::string(is_join ? "join" : "meet") + " of " +
                  parent.label(a) + " and " + parent.label(b) + " is " +
                  parent.label(r) + ", which is missing");
        }
      }
    }
  }
  std::vector<std::string> labels;
  for (Element e : origin) labels.push_back(parent.label(e));
  FiniteLattice lattice = FiniteLattice::FromOrder(
      origin.size(),
      [&](Element a, Element b) { return parent.Leq(origin[a], origin[b]); },
      std::move(labels));
  return {std::move(lattice), std::move(origin)};
}

PointwiseLattice MakeSublattice(const PointwiseLattice& parent,
                                std::span<const Element> subset) {
  Sublattice sub = MakeSublattice(parent.lattice, subset);
  PointwiseLattice result;
  result.points = parent.points;
  for (Element e : sub.origin) result.values.push_back(parent.values[e]);
  result.lattice = std::move(sub.lattice);
  return result;
}

SetLattice MakeSublattice(const SetLattice& parent,
                          std::span<const Element> subset) {
  Sublattice sub = MakeSublattice(parent.lattice(), subset);
  std::vector<AtomSet> members;
  for (Element e : sub.origin) members.push_back(parent.member(e));
  return SetLattice::FromMembers(parent.ground(), std::move(members));
}

std::vector<Rational> SubspaceLattice::Dimension() const {
  return {dims.begin(), dims.end()};
}

namespace {

using Row = std::vector<unsigned>;
using Basis = std::vector<Row>;

bool IsPrime(unsigned q) {
  if (q < 2) return false;
  for (unsigned d = 2; d * d <= q; ++d) {
    if (q % d == 0) return false;
  }
  return true;
}

// Gaussian binomial [n choose k]_q.
std::uint64_t GaussianBinomial(unsigned n, unsigned k, unsigned q) {
  std::uint64_t num = 1, den = 1;
  for (unsigned i = 0; i < k; ++i) {
    std::uint64_t qn = 1, qd = 1;
    for (unsigned j = 0; j < n - i; ++j) qn *= q;
    for (unsigned j = 0; j < i + 1; ++j) qd *= q;
    num *= qn - 1;
    den *= qd - 1;
  }
  return num / den;
}

// True iff v lies in the row space of the RREF basis.
bool InSpan(Row v, const Basis& basis, unsigned q) {
  for (const Row& row : basis) {
    std::size_t pivot = 0;
    while (row[pivot] == 0) ++pivot;
    unsigned c = v[pivot];
    if (c == 0) continue;
    for (std::size_t i = 0; i < v.size(); ++i) {
      v[i] = (v[i] + (q - c) * row[i]) % q;
    }
  }
  return std::all_of(v.begin(), v.end(), [](unsigned x) { return x == 0; });
}

std::string FormatBasis(const Basis& basis, unsigned q) {
  if (basis.empty()) return "0";
  std::string out = "<";
  for (std::size_t r = 0; r < basis.size(); ++r) {
    if (r) out += ";";
    for (std::size_t i = 0; i < basis[r].size(); ++i) {
      if (q > 10 && i) out += ",";
      out += std::to_string(basis[r][i]);
    }
  }
  return out + ">";
}

}  // namespace

SubspaceLattice MakeSubspaceLattice(unsigned q, unsigned n) {
  if (!IsPrime(q)) {
    throw Error(ErrorCode::kInvalidArgument, "q must be prime");
  }
  if (n < 1 || n > 4) {
    throw Error(ErrorCode::kInvalidArgument, "dimension must be 1..4");
  }
  std::uint64_t total = 0;
  for (unsigned k = 0; k <= n; ++k) total += GaussianBinomial(n, k, q);
  if (total > FiniteLattice::kMaxElements) {
    throw Error(ErrorCode::kTooLarge,
                std::to_string(total) + " subspaces exceed the table limit");
  }

  SubspaceLattice result;
  result.q = q;
  result.n = n;
  for (unsigned k = 0; k <= n; ++k) {
    // Pivot columns as a k-subset, ascending.
    std::vector<bool> choose(n, false);
    std::fill(choose.begin(), choose.begin() + k, true);
    std::vector<std::vector<unsigned>> pivot_sets;
    do {
      std::vector<unsigned> pivots;
      for (unsigned c = 0; c < n; ++c) {
        if (choose[c]) pivots.push_back(c);
      }
      pivot_sets.push_back(pivots);
    } while (std::prev_permutation(choose.begin(), choose.end()));
    for (const auto& pivots : pivot_sets) {
      std::vector<bool> is_pivot(n, false);
      for (unsigned c : pivots) is_pivot[c] = true;
      std::vector<std::pair<unsigned, unsigned>> free_cells;
      for (unsigned r = 0; r < k; ++r) {
        for (unsigned c = pivots[r] + 1; c < n; ++c) {
          if (!is_pivot[c]) free_cells.emplace_back(r, c);
        }
      }
      std::vector<unsigned> fill(free_cells.size(), 0);
      while (true) {
        Basis basis(k, Row(n, 0));
        for (unsigned r = 0; r < k; ++r) basis[r][pivots[r]] = 1;
        for (std::size_t i = 0; i < free_cells.size(); ++i) {
          basis[free_cells[i].first][free_cells[i].second] = fill[i];
        }
        result.bases.push_back(std::move(basis));
        result.dims.push_back(k);
        std::size_t i = fill.size();
        while (i > 0) {
          if (++fill[i - 1] < q) break;
          fill[i - 1] = 0;
          --i;
        }
        if (i == 0) break;
      }
    }
  }
  std::vector<std::string> labels;
  for (const auto& b : result.bases) labels.push_back(FormatBasis(b, q));
  const auto& bases = result.bases;
  result.lattice = FiniteLattice::FromOrder(
      bases.size(),
      [&](Element a, Element b) {
        if (bases[a].size() > bases[b].size()) return false;
        for (const Row& row : bases[a]) {
          if (!InSpan(row, bases[b], q)) return false;
        }
        return true;
      },
      std::move(labels));
  return result;
}

}  // namespace metriclat
