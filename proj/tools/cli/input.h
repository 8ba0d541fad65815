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

#ifndef METRICLAT_TOOLS_CLI_INPUT_H_
#define METRICLAT_TOOLS_CLI_INPUT_H_

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "metriclat/function_lattices.h"
#include "metriclat/generators.h"
#include "metriclat/intervaluation.h"
#include "metriclat/metric.h"
#include "metriclat/ultravaluation.h"
#include "metriclat/valuation.h"

namespace metriclat::cli {

// A lattice file after parsing, with whatever concrete representation the
// generator produced kept alongside the bare lattice.
struct LoadedLattice {
  std::string kind;
  FiniteLattice lattice;
  std::optional<SetLattice> sets;
  std::optional<PointwiseLattice> functions;
  std::optional<GridLipschitzLattice> lipschitz;
  std::optional<DivisorLattice> divisors;
  std::optional<SubspaceLattice> subspaces;
};

// What a metric file declared, plus the metric itself.
struct LoadedMetric {
  std::string kind;  // valuation | ultravaluation | intervaluation | builtin | table
  std::string name;  // builtin name, if any
  MetricTable d;
  std::optional<Valuation> valuation;
  std::optional<PairTable> ultra;
  std::optional<Intervaluation> intervaluation;
  // Ops the declared structure promises (empty: any builtin op will do).
  std::vector<CombineOp> expected_ops;
};

// Parses JSON text, reporting syntax errors as Error(kParse) with
// "<source>:<line>:<column>: ...".
nlohmann::json ParseJsonText(const std::string& text, const std::string& source);
nlohmann::json ReadJsonFile(const std::string& path);

LoadedLattice ParseLattice(const nlohmann::json& node);
LoadedMetric ParseMetric(const nlohmann::json& node, const LoadedLattice& lat);

LoadedLattice LoadLatticeFile(const std::string& path);
LoadedMetric LoadMetricFile(const std::string& path, const LoadedLattice& lat);

// Accepts integers and "p/q" strings; anything else is Error(kParse).
Rational JsonRational(const nlohmann::json& value, const std::string& where);

}  // namespace metriclat::cli

#endif  // METRICLAT_TOOLS_CLI_INPUT_H_
