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

#ifndef METRICLAT_TOOLS_CLI_CORPUS_H_
#define METRICLAT_TOOLS_CLI_CORPUS_H_

#include <cstdint>
#include <random>

#include "metriclat/generators.h"
#include "metriclat/valuation.h"

namespace metriclat::cli {

struct RandomLatticeOptions {
  unsigned max_atoms = 5;
  unsigned max_generators = 6;
  std::size_t max_elements = 12;
  // Atoms are distinct naturals drawn from 1..max_number, otherwise 1..atoms.
  std::int64_t max_number = 9;
};

// Closure of random generators over random natural atoms, re-drawn until it
// has at most max_elements members.
SetLattice RandomSubsetLattice(std::mt19937_64& rng,
                               const RandomLatticeOptions& options = {});

// A random rational p/q with 1 <= p <= max_num, 1 <= q <= max_den.
Rational RandomPositiveRational(std::mt19937_64& rng, int max_num = 9,
                                int max_den = 4);

// v(A) = c + Σ_{x∈A} μ(x) with random μ > 0 and c >= 0.
Valuation RandomPositiveValuation(std::mt19937_64& rng, const SetLattice& sets);

}  // namespace metriclat::cli

#endif  // METRICLAT_TOOLS_CLI_CORPUS_H_
