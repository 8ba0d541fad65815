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

#include "cli/corpus.h"

#include <algorithm>
#include <numeric>

namespace metriclat::cli {

namespace {

int Uniform(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

}  // namespace

SetLattice RandomSubsetLattice(std::mt19937_64& rng,
                               const RandomLatticeOptions& options) {
  const unsigned atoms = static_cast<unsigned>(
      Uniform(rng, 1, static_cast<int>(std::max(1u, options.max_atoms))));
  std::vector<std::int64_t> pool(
      static_cast<std::size_t>(std::max<std::int64_t>(options.max_number, atoms)));
  std::iota(pool.begin(), pool.end(), 1);
  std::shuffle(pool.begin(), pool.end(), rng);
  pool.resize(atoms);
  std::sort(pool.begin(), pool.end());
  std::vector<Atom> ground = NumericAtoms(pool);
  const AtomSet full = atoms == 64 ? ~AtomSet{0} : (AtomSet{1} << atoms) - 1;
  unsigned count = static_cast<unsigned>(
      Uniform(rng, 0, static_cast<int>(options.max_generators)));
  while (true) {
    std::vector<AtomSet> generators;
    for (unsigned i = 0; i < count; ++i) {
      generators.push_back(
          std::uniform_int_distribution<AtomSet>(0, full)(rng));
    }
    bool include_ground = Uniform(rng, 0, 1) == 1;
    SetLattice sets = SubsetLattice(ground, generators, include_ground);
    if (sets.size() <= options.max_elements) return sets;
    if (count > 0) --count;
  }
}

Rational RandomPositiveRational(std::mt19937_64& rng, int max_num,
                                int max_den) {
  return Rational(Uniform(rng, 1, max_num), Uniform(rng, 1, max_den));
}

Valuation RandomPositiveValuation(std::mt19937_64& rng,
                                  const SetLattice& sets) {
  std::vector<Rational> mu;
  for (std::size_t i = 0; i < sets.ground().size(); ++i) {
    mu.push_back(RandomPositiveRational(rng));
  }
  Rational c = Uniform(rng, 0, 1) == 1 ? RandomPositiveRational(rng) : Rational(0);
  std::vector<Rational> v;
  for (AtomSet m : sets.members()) {
    Rational total = c;
    for (std::size_t i = 0; i < mu.size(); ++i) {
      if ((m >> i) & 1u) total += mu[i];
    }
    v.push_back(std::move(total));
  }
  return Valuation(std::move(v));
}

}  // namespace metriclat::cli
