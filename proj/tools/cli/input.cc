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

#include "cli/input.h"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "metriclat/error.h"

namespace metriclat::cli {

using nlohmann::json;

namespace {

[[noreturn]] void Fail(const std::string& message) {
  throw Error(ErrorCode::kParse, message);
}

void CheckFields(const json& obj, std::initializer_list<const char*> allowed,
                 const std::string& where) {
  if (!obj.is_object()) Fail(where + ": expected an object");
  for (const auto& item : obj.items()) {
    bool known = std::any_of(allowed.begin(), allowed.end(),
                             [&](const char* a) { return item.key() == a; });
    if (!known) Fail(where + ": unknown field \"" + item.key() + "\"");
  }
}

const json& Require(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) Fail(where + ": missing field \"" + key + "\"");
  return *it;
}

std::int64_t JsonInt(const json& value, const std::string& where) {
  if (!value.is_number_integer()) Fail(where + ": expected an integer");
  return value.get<std::int64_t>();
}

unsigned JsonUnsigned(const json& value, const std::string& where) {
  std::int64_t v = JsonInt(value, where);
  if (v < 0 || v > 1'000'000'000) Fail(where + ": out of range");
  return static_cast<unsigned>(v);
}

const json& JsonArray(const json& value, const std::string& where) {
  if (!value.is_array()) Fail(where + ": expected an array");
  return value;
}

bool AllDigits(const std::string& s) {
  return !s.empty() && s.size() < 18 &&
         std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

Atom JsonAtom(const json& value, const std::string& where) {
  if (value.is_number_integer()) {
    std::int64_t v = value.get<std::int64_t>();
    return {std::to_string(v), v};
  }
  if (value.is_string()) {
    std::string s = value.get<std::string>();
    if (AllDigits(s)) return {s, std::stoll(s)};
    return {s, std::nullopt};
  }
  Fail(where + ": atoms must be integers or strings");
}

AtomSet AtomMask(const std::vector<Atom>& ground, const json& list,
                 const std::string& where) {
  AtomSet mask = 0;
  for (const json& item : JsonArray(list, where)) {
    Atom atom = JsonAtom(item, where);
    auto it = std::find_if(ground.begin(), ground.end(),
                           [&](const Atom& a) { return a.name == atom.name; });
    if (it == ground.end()) {
      throw Error(ErrorCode::kMismatch,
                  where + ": atom \"" + atom.name + "\" is not in the ground set");
    }
    mask |= AtomSet{1} << (it - ground.begin());
  }
  return mask;
}

std::vector<Rational> RationalList(const json& value, const std::string& where) {
  std::vector<Rational> out;
  std::size_t i = 0;
  for (const json& item : JsonArray(value, where)) {
    out.push_back(JsonRational(item, where + "[" + std::to_string(i++) + "]"));
  }
  return out;
}

PairTable RationalMatrix(const json& value, std::size_t n,
                         const std::string& where) {
  const json& rows = JsonArray(value, where);
  if (rows.size() != n) {
    throw Error(ErrorCode::kMismatch, where + ": expected " + std::to_string(n) +
                                          " rows, got " +
                                          std::to_string(rows.size()));
  }
  PairTable t(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto row = RationalList(rows[i], where + "[" + std::to_string(i) + "]");
    if (row.size() != n) {
      throw Error(ErrorCode::kMismatch,
                  where + "[" + std::to_string(i) + "]: expected " +
                      std::to_string(n) + " entries");
    }
    for (std::size_t j = 0; j < n; ++j) t(i, j) = row[j];
  }
  return t;
}

Element ResolveElement(const LoadedLattice& parent, const json& ref,
                       const std::string& where) {
  if (ref.is_array()) {
    if (parent.sets) {
      AtomSet mask = AtomMask(parent.sets->ground(), ref, where);
      if (auto e = parent.sets->Find(mask)) return *e;
    } else if (parent.functions) {
      auto values = RationalList(ref, where);
      if (auto e = parent.functions->Find(values)) return *e;
    } else {
      Fail(where + ": array references need a set or function lattice");
    }
    throw Error(ErrorCode::kMismatch, where + ": " + ref.dump() +
                                          " is not an element of the lattice");
  }
  std::string label;
  if (ref.is_number_integer()) {
    label = std::to_string(ref.get<std::int64_t>());
  } else if (ref.is_string()) {
    label = ref.get<std::string>();
  } else {
    Fail(where + ": element references are labels, integers or arrays");
  }
  if (auto e = parent.lattice.Find(label)) return *e;
  throw Error(ErrorCode::kMismatch,
              where + ": no element labelled \"" + label + "\"");
}

LoadedLattice ParseLatticeAt(const json& node, const std::string& where) {
  if (!node.is_object()) Fail(where + ": expected an object");
  const json& kind_value = Require(node, "kind", where);
  if (!kind_value.is_string()) Fail(where + ".kind: expected a string");
  LoadedLattice out;
  out.kind = kind_value.get<std::string>();
  const std::string& kind = out.kind;
  if (kind == "explicit") {
    CheckFields(node, {"kind", "n", "leq", "labels"}, where);
    std::size_t n = JsonUnsigned(Require(node, "n", where), where + ".n");
    std::vector<std::pair<Element, Element>> leq;
    for (const json& pair : JsonArray(Require(node, "leq", where), where + ".leq")) {
      if (!pair.is_array() || pair.size() != 2) {
        Fail(where + ".leq: each entry is a pair [a, b]");
      }
      Element a = JsonUnsigned(pair[0], where + ".leq");
      Element b = JsonUnsigned(pair[1], where + ".leq");
      if (a >= n || b >= n) {
        throw Error(ErrorCode::kMismatch,
                    where + ".leq: element index out of range");
      }
      leq.emplace_back(a, b);
    }
    std::vector<std::string> labels;
    if (auto it = node.find("labels"); it != node.end()) {
      for (const json& l : JsonArray(*it, where + ".labels")) {
        if (!l.is_string()) Fail(where + ".labels: expected strings");
        labels.push_back(l.get<std::string>());
      }
    }
    out.lattice = FiniteLattice::FromLeq(n, leq, std::move(labels));
  } else if (kind == "subsets") {
    CheckFields(node, {"kind", "ground", "generators", "include_ground"}, where);
    std::vector<Atom> ground;
    for (const json& a : JsonArray(Require(node, "ground", where), where + ".ground")) {
      ground.push_back(JsonAtom(a, where + ".ground"));
    }
    std::vector<AtomSet> generators;
    if (auto it = node.find("generators"); it != node.end()) {
      for (const json& g : JsonArray(*it, where + ".generators")) {
        generators.push_back(AtomMask(ground, g, where + ".generators"));
      }
    }
    bool include_ground = false;
    if (auto it = node.find("include_ground"); it != node.end()) {
      if (!it->is_boolean()) Fail(where + ".include_ground: expected a boolean");
      include_ground = it->get<bool>();
    }
    out.sets = SubsetLattice(std::move(ground), generators, include_ground);
    out.lattice = out.sets->lattice();
  } else if (kind == "divisors") {
    CheckFields(node, {"kind", "n"}, where);
    std::int64_t n = JsonInt(Require(node, "n", where), where + ".n");
    if (n < 1) Fail(where + ".n: must be positive");
    out.divisors = MakeDivisorLattice(static_cast<std::uint64_t>(n));
    out.lattice = out.divisors->lattice;
  } else if (kind == "grid") {
    CheckFields(node, {"kind", "heights"}, where);
    std::vector<unsigned> heights;
    for (const json& h : JsonArray(Require(node, "heights", where), where + ".heights")) {
      heights.push_back(JsonUnsigned(h, where + ".heights"));
    }
    out.functions = ProductChainLattice(heights);
    out.lattice = out.functions->lattice;
  } else if (kind == "sublattice") {
    CheckFields(node, {"kind", "of", "elements"}, where);
    LoadedLattice parent = ParseLatticeAt(Require(node, "of", where), where + ".of");
    std::vector<Element> subset;
    for (const json& ref :
         JsonArray(Require(node, "elements", where), where + ".elements")) {
      subset.push_back(ResolveElement(parent, ref, where + ".elements"));
    }
    std::sort(subset.begin(), subset.end());
    subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
    if (parent.sets) {
      out.sets = MakeSublattice(*parent.sets, subset);
      out.lattice = out.sets->lattice();
    } else if (parent.functions) {
      out.functions = MakeSublattice(*parent.functions, subset);
      out.lattice = out.functions->lattice;
    } else {
      out.lattice = MakeSublattice(parent.lattice, subset).lattice;
    }
  } else if (kind == "subspaces") {
    CheckFields(node, {"kind", "q", "n"}, where);
    unsigned q = JsonUnsigned(Require(node, "q", where), where + ".q");
    unsigned n = JsonUnsigned(Require(node, "n", where), where + ".n");
    out.subspaces = MakeSubspaceLattice(q, n);
    out.lattice = out.subspaces->lattice;
  } else if (kind == "lipschitz") {
    CheckFields(node, {"kind", "points", "dist", "step", "max", "weights",
                       "basepoint"},
                where);
    FiniteMetricSpace space;
    for (const json& p : JsonArray(Require(node, "points", where), where + ".points")) {
      if (!p.is_string()) Fail(where + ".points: expected strings");
      space.points.push_back(p.get<std::string>());
    }
    PairTable dist =
        RationalMatrix(Require(node, "dist", where), space.size(), where + ".dist");
    space.dist.assign(space.size(), std::vector<Rational>(space.size()));
    for (std::size_t x = 0; x < space.size(); ++x) {
      for (std::size_t y = 0; y < space.size(); ++y) space.dist[x][y] = dist(x, y);
    }
    if (auto it = node.find("basepoint"); it != node.end()) {
      if (!it->is_string()) Fail(where + ".basepoint: expected a point name");
      auto pos = std::find(space.points.begin(), space.points.end(),
                           it->get<std::string>());
      if (pos == space.points.end()) {
        throw Error(ErrorCode::kMismatch,
                    where + ".basepoint: unknown point \"" +
                        it->get<std::string>() + "\"");
      }
      space.basepoint = static_cast<std::size_t>(pos - space.points.begin());
    }
    std::vector<Rational> weights;
    if (auto it = node.find("weights"); it != node.end()) {
      weights = RationalList(*it, where + ".weights");
    }
    out.lipschitz = BuildLipschitzLattice(
        std::move(space), JsonRational(Require(node, "step", where), where + ".step"),
        JsonRational(Require(node, "max", where), where + ".max"),
        std::move(weights));
    out.functions = out.lipschitz->functions;
    out.lattice = out.lipschitz->lattice();
  } else {
    Fail(where + ": unknown lattice kind \"" + kind + "\"");
  }
  return out;
}

// v(f∨g) − v(f∧g) without any law checks.
MetricTable RawValuationMetric(const FiniteLattice& l, const Valuation& v) {
  PairTable d(l.size());
  for (Element f = 0; f < l.size(); ++f) {
    for (Element g = 0; g < l.size(); ++g) {
      d(f, g) = v[l.Join(f, g)] - v[l.Meet(f, g)];
    }
  }
  return MetricTable::FromRationals(std::move(d), MetricKind::kRaw,
                                    "valuation (laws not satisfied)");
}

MetricTable RawUltraMetric(const PairTable& w) {
  PairTable d(w.size());
  for (Element f = 0; f < w.size(); ++f) {
    for (Element g = 0; g < w.size(); ++g) {
      d(f, g) = std::max(w(f, g), w(g, f));
    }
  }
  return MetricTable::FromRationals(std::move(d), MetricKind::kRaw,
                                    "ultravaluation (laws not satisfied)");
}

bool IsLawError(const Error& e) {
  switch (e.code()) {
    case ErrorCode::kNotModular:
    case ErrorCode::kNotIsotone:
    case ErrorCode::kUltraAxiomViolated:
    case ErrorCode::kIntervaluationAxiomViolated:
    case ErrorCode::kCutLawViolated:
      return true;
    default:
      return false;
  }
}

Valuation ValuationByLabel(const LoadedLattice& lat, const json& values,
                           const std::string& where) {
  const std::size_t n = lat.lattice.size();
  std::vector<Rational> v(n);
  if (values.is_array()) {
    v = RationalList(values, where);
    if (v.size() != n) {
      throw Error(ErrorCode::kMismatch, where + ": expected " +
                                            std::to_string(n) + " values");
    }
    return Valuation(std::move(v));
  }
  if (!values.is_object()) Fail(where + ": expected an object or array");
  std::vector<char> seen(n, 0);
  for (const auto& item : values.items()) {
    auto e = lat.lattice.Find(item.key());
    if (!e) {
      throw Error(ErrorCode::kMismatch,
                  where + ": no element labelled \"" + item.key() + "\"");
    }
    v[*e] = JsonRational(item.value(), where + "." + item.key());
    seen[*e] = 1;
  }
  for (Element e = 0; e < n; ++e) {
    if (!seen[e]) {
      throw Error(ErrorCode::kMismatch,
                  where + ": missing value for \"" + lat.lattice.label(e) + "\"");
    }
  }
  return Valuation(std::move(v));
}

void SetValuation(LoadedMetric& out, const LoadedLattice& lat, Valuation v) {
  try {
    out.d = MetricFromValuation(lat.lattice, v);
  } catch (const Error& e) {
    if (!IsLawError(e)) throw;
    out.d = RawValuationMetric(lat.lattice, v);
  }
  out.valuation = std::move(v);
  out.expected_ops = {CombineOp::Add()};
}

void SetUltra(LoadedMetric& out, const LoadedLattice& lat, PairTable w) {
  try {
    out.d = MetricFromUltravaluation(lat.lattice, Ultravaluation{w});
  } catch (const Error& e) {
    if (!IsLawError(e)) throw;
    out.d = RawUltraMetric(w);
  }
  out.ultra = std::move(w);
  out.expected_ops = {CombineOp::Max()};
}

const SetLattice& NeedSets(const LoadedLattice& lat, const std::string& what) {
  if (!lat.sets) {
    throw Error(ErrorCode::kMismatch, what + " needs a subsets lattice");
  }
  return *lat.sets;
}

const PointwiseLattice& NeedFunctions(const LoadedLattice& lat,
                                      const std::string& what) {
  if (!lat.functions) {
    throw Error(ErrorCode::kMismatch, what + " needs a function lattice");
  }
  return *lat.functions;
}

const GridLipschitzLattice& NeedLipschitz(const LoadedLattice& lat,
                                          const std::string& what) {
  if (!lat.lipschitz) {
    throw Error(ErrorCode::kMismatch, what + " needs a lipschitz lattice");
  }
  return *lat.lipschitz;
}

std::vector<Rational> WeightsOf(const LoadedLattice& lat) {
  if (lat.lipschitz) return lat.lipschitz->weights;
  return std::vector<Rational>(lat.functions->points.size(), Rational(1));
}

void ParseBuiltin(const json& node, const LoadedLattice& lat, LoadedMetric& out) {
  CheckFields(node, {"kind", "name", "p"}, "metric");
  const json& name_value = Require(node, "name", "metric");
  if (!name_value.is_string()) Fail("metric.name: expected a string");
  out.name = name_value.get<std::string>();
  const std::string& name = out.name;
  if (node.contains("p") && name != "lp") {
    Fail("metric.p: only the lp builtin takes an exponent");
  }
  if (name == "sup") {
    out.d = SupMetric(NeedFunctions(lat, name));
    out.expected_ops = {CombineOp::Max()};
  } else if (name == "l1") {
    out.d = L1Metric(NeedFunctions(lat, name), WeightsOf(lat));
    out.expected_ops = {CombineOp::Add()};
  } else if (name == "lp") {
    const json& p_value = Require(node, "p", "metric");
    if (!p_value.is_number_integer()) {
      throw Error(ErrorCode::kUnsupportedArithmetic,
                  "metric.p: only integer exponents are supported");
    }
    unsigned p = JsonUnsigned(p_value, "metric.p");
    if (p < 1) Fail("metric.p: must be >= 1");
    out.d = LpMetric(NeedFunctions(lat, name), WeightsOf(lat), p);
    out.expected_ops = {p == 1 ? CombineOp::Add() : CombineOp::Lp(p)};
  } else if (name == "peak") {
    out.d = PeakMetric(NeedFunctions(lat, name));
    out.expected_ops = {CombineOp::Max()};
  } else if (name == "basepoint-outer" || name == "basepoint-inner") {
    out.d = BasepointMetric(NeedLipschitz(lat, name),
                            name == "basepoint-outer" ? BasepointMode::kOuter
                                                      : BasepointMode::kInner);
    out.expected_ops = {CombineOp::Max()};
  } else if (name == "discrete") {
    out.d = DiscreteMetric(lat.lattice.size());
    out.expected_ops = {CombineOp::Max()};
  } else if (name == "lipschitz-constant") {
    out.d = LipschitzConstantMetric(NeedLipschitz(lat, name));
  } else if (name == "omega") {
    if (!lat.divisors) {
      throw Error(ErrorCode::kMismatch, "omega needs a divisors lattice");
    }
    SetValuation(out, lat, Valuation(lat.divisors->Omega()));
  } else if (name == "counting") {
    const SetLattice& sets = NeedSets(lat, name);
    std::vector<Rational> v;
    for (AtomSet m : sets.members()) v.emplace_back(std::popcount(m));
    SetValuation(out, lat, Valuation(std::move(v)));
  } else if (name == "dimension") {
    if (!lat.subspaces) {
      throw Error(ErrorCode::kMismatch, "dimension needs a subspaces lattice");
    }
    SetValuation(out, lat, Valuation(lat.subspaces->Dimension()));
  } else if (name == "kappa-identity") {
    const SetLattice& sets = NeedSets(lat, name);
    KappaWeights kappa;
    for (const Atom& a : sets.ground()) {
      if (!a.number) {
        throw Error(ErrorCode::kMismatch,
                    "kappa-identity needs numeric atoms, got \"" + a.name + "\"");
      }
      kappa.kappa.emplace_back(*a.number);
    }
    SetUltra(out, lat, FromKappa(sets, kappa).w);
  } else {
    Fail("metric.name: unknown builtin \"" + name + "\"");
  }
}

}  // namespace

Rational JsonRational(const json& value, const std::string& where) {
  if (value.is_number_integer()) return Rational(value.get<std::int64_t>());
  if (value.is_number_float()) {
    Fail(where + ": floating-point numbers are not accepted; use \"p/q\"");
  }
  if (!value.is_string()) Fail(where + ": expected a rational");
  try {
    return ParseRational(value.get<std::string>());
  } catch (const Error& e) {
    Fail(where + ": " + e.what());
  }
}

json ParseJsonText(const std::string& text, const std::string& source) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1, column = 1;
    std::size_t end = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1,
                                            text.size());
    for (std::size_t i = 0; i < end; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    std::string message = e.what();
    if (auto pos = message.find("syntax error"); pos != std::string::npos) {
      message = message.substr(pos);
    }
    Fail(source + ":" + std::to_string(line) + ":" + std::to_string(column) +
         ": " + message);
  }
}

json ReadJsonFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) Fail(path + ": cannot open file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return ParseJsonText(buffer.str(), path);
}

LoadedLattice ParseLattice(const json& node) {
  return ParseLatticeAt(node, "lattice");
}

LoadedMetric ParseMetric(const json& node, const LoadedLattice& lat) {
  if (!node.is_object()) Fail("metric: expected an object");
  const json& kind_value = Require(node, "kind", "metric");
  if (!kind_value.is_string()) Fail("metric.kind: expected a string");
  LoadedMetric out;
  out.kind = kind_value.get<std::string>();
  const std::size_t n = lat.lattice.size();
  if (out.kind == "valuation") {
    CheckFields(node, {"kind", "values"}, "metric");
    SetValuation(out, lat,
                 ValuationByLabel(lat, Require(node, "values", "metric"),
                                  "metric.values"));
  } else if (out.kind == "ultravaluation") {
    CheckFields(node, {"kind", "kappa", "w"}, "metric");
    if (node.contains("kappa") == node.contains("w")) {
      Fail("metric: give exactly one of \"kappa\" and \"w\"");
    }
    if (node.contains("kappa")) {
      const SetLattice& sets = NeedSets(lat, "kappa");
      const json& kappa_json = node["kappa"];
      if (!kappa_json.is_object()) Fail("metric.kappa: expected an object");
      KappaWeights kappa;
      kappa.kappa.assign(sets.ground().size(), Rational(0));
      std::vector<char> seen(sets.ground().size(), 0);
      for (const auto& item : kappa_json.items()) {
        auto it = std::find_if(sets.ground().begin(), sets.ground().end(),
                               [&](const Atom& a) { return a.name == item.key(); });
        if (it == sets.ground().end()) {
          throw Error(ErrorCode::kMismatch,
                      "metric.kappa: \"" + item.key() + "\" is not an atom");
        }
        std::size_t i = it - sets.ground().begin();
        kappa.kappa[i] = JsonRational(item.value(), "metric.kappa." + item.key());
        seen[i] = 1;
      }
      for (std::size_t i = 0; i < seen.size(); ++i) {
        if (!seen[i]) {
          throw Error(ErrorCode::kMismatch, "metric.kappa: missing atom \"" +
                                                sets.ground()[i].name + "\"");
        }
      }
      SetUltra(out, lat, FromKappa(sets, kappa).w);
    } else {
      SetUltra(out, lat, RationalMatrix(node["w"], n, "metric.w"));
    }
  } else if (out.kind == "intervaluation") {
    CheckFields(node, {"kind", "op", "w"}, "metric");
    const json& op_value = Require(node, "op", "metric");
    if (!op_value.is_string()) Fail("metric.op: expected a string");
    Intervaluation iv{SurdTable(RationalMatrix(Require(node, "w", "metric"), n,
                                               "metric.w")),
                      CombineOp::Parse(op_value.get<std::string>())};
    try {
      out.d = MetricFromIntervaluation(lat.lattice, iv);
    } catch (const Error& e) {
      if (!IsLawError(e)) throw;
      out.d = CombinedMetric(iv);
    }
    out.expected_ops = {iv.op};
    out.intervaluation = std::move(iv);
  } else if (out.kind == "table") {
    CheckFields(node, {"kind", "d"}, "metric");
    out.d = MetricTable::FromRationals(
        RationalMatrix(Require(node, "d", "metric"), n, "metric.d"),
        MetricKind::kRaw, "table");
  } else if (out.kind == "builtin") {
    ParseBuiltin(node, lat, out);
  } else {
    Fail("metric.kind: unknown metric kind \"" + out.kind + "\"");
  }
  return out;
}

LoadedLattice LoadLatticeFile(const std::string& path) {
  return ParseLattice(ReadJsonFile(path));
}

LoadedMetric LoadMetricFile(const std::string& path, const LoadedLattice& lat) {
  return ParseMetric(ReadJsonFile(path), lat);
}

}  // namespace metriclat::cli
