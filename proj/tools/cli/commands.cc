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

#include "cli/commands.h"

#include <algorithm>
#include <iomanip>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cli/corpus.h"
#include "cli/input.h"
#include "metriclat/analysis.h"
#include "metriclat/error.h"

namespace metriclat::cli {

using nlohmann::json;

namespace {

struct GlobalOptions {
  bool json = false;
  std::uint64_t seed = 1;
  unsigned threads = 1;
};

std::string Join(const std::vector<std::string>& parts,
                 const std::string& sep = ", ") {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) s += sep;
    s += parts[i];
  }
  return s;
}

std::vector<std::string> LabelsOf(const FiniteLattice& l,
                                  std::span<const Element> elements) {
  std::vector<std::string> out;
  for (Element e : elements) out.push_back(l.label(e));
  return out;
}

std::string LabelList(const FiniteLattice& l, std::span<const Element> elements) {
  if (elements.empty()) return "(none)";
  return Join(LabelsOf(l, elements));
}

const char* YesNo(bool b) { return b ? "yes" : "no"; }

// Left-aligned columns separated by two spaces.
class TextTable {
 public:
  void Add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

  void Print(std::ostream& out) const {
    std::vector<std::size_t> widths;
    for (const auto& row : rows_) {
      widths.resize(std::max(widths.size(), row.size()), 0);
      for (std::size_t i = 0; i < row.size(); ++i) {
        widths[i] = std::max(widths[i], row[i].size());
      }
    }
    for (const auto& row : rows_) {
      std::string line;
      for (std::size_t i = 0; i < row.size(); ++i) {
        line += row[i];
        if (i + 1 < row.size()) line += std::string(widths[i] - row[i].size() + 2, ' ');
      }
      while (!line.empty() && line.back() == ' ') line.pop_back();
      out << line << "\n";
    }
  }

 private:
  std::vector<std::vector<std::string>> rows_;
};

int ExitFor(const Error& e, bool loading_lattice) {
  switch (e.code()) {
    case ErrorCode::kParse:
      return kExitParse;
    case ErrorCode::kNotAPoset:
    case ErrorCode::kNotALattice:
    case ErrorCode::kTooLarge:
    case ErrorCode::kNotClosed:
    case ErrorCode::kClosureTooLarge:
    case ErrorCode::kGridMismatch:
      return kExitInvalidLattice;
    case ErrorCode::kInvalidArgument:
      return loading_lattice ? kExitInvalidLattice : kExitMismatch;
    default:
      return kExitMismatch;
  }
}

// ---- validate ----------------------------------------------------------

int Validate(const LoadedLattice& lat, const GlobalOptions& opt,
             std::ostream& out) {
  const FiniteLattice& l = lat.lattice;
  auto axioms = l.CheckAxioms();
  bool distributive = l.IsDistributive();
  bool modular = l.IsModular();
  auto ji = l.JoinIrreducibles();
  if (opt.json) {
    json j;
    j["lattice"] = axioms.empty() ? "ok" : "invalid";
    j["kind"] = lat.kind;
    j["elements"] = l.size();
    j["distributive"] = distributive;
    j["modular"] = modular;
    j["labels"] = l.labels();
    j["join_irreducibles"] = LabelsOf(l, ji);
    j["axiom_failures"] = axioms;
    out << j.dump(2) << "\n";
  } else {
    out << "lattice: " << (axioms.empty() ? "ok" : "invalid")
        << ", distributive: " << YesNo(distributive) << ", " << l.size()
        << " elements\n";
    out << "modular: " << YesNo(modular) << "\n";
    out << "bottom: " << l.label(l.bottom()) << ", top: " << l.label(l.top())
        << "\n";
    out << "join-irreducibles: " << LabelList(l, ji) << "\n";
    for (const auto& a : axioms) out << "axiom failure: " << a << "\n";
  }
  return axioms.empty() ? kExitOk : kExitInvalidLattice;
}

// ---- check -------------------------------------------------------------

struct CheckLine {
  std::string name;
  std::string status;  // pass | fail | info
  std::string detail;
};

const char* UltraAxiomName(UltraViolation::Axiom a) {
  switch (a) {
    case UltraViolation::Axiom::kNegative: return "negative";
    case UltraViolation::Axiom::kComparable: return "comparable-nonzero";
    case UltraViolation::Axiom::kCutLaw: return "cut-law";
  }
  return "?";
}

std::string Triple(const FiniteLattice& l, Element f, Element g, Element h) {
  return "f=" + l.label(f) + ", g=" + l.label(g) + ", h=" + l.label(h);
}

std::string OpSymbol(const CombineOp& op) {
  switch (op.kind()) {
    case CombineOp::Kind::kAdd: return "+";
    case CombineOp::Kind::kMax: return "∨";
    case CombineOp::Kind::kLp: return "∘" + op.Name();
  }
  return "?";
}

std::string DescribeIntervaluation(const FiniteLattice& l,
                                   const Intervaluation& iv,
                                   const IntervaluationViolation& v) {
  using Kind = IntervaluationViolation::Kind;
  std::string s = IntervaluationViolationName(v.kind);
  if (v.kind == Kind::kNegative || v.kind == Kind::kComparable) {
    return s + " at f=" + l.label(v.f) + ", g=" + l.label(v.g) +
           ": w=" + iv.w.at(v.f, v.g).ToString();
  }
  Element gh = l.Join(v.g, v.h);
  Element fh = l.Meet(v.f, v.h);
  Surd a = iv.w.at(v.f, gh);
  Surd b = iv.w.at(fh, v.g);
  Surd w = iv.w.at(v.f, v.g);
  s += " at " + Triple(l, v.f, v.g, v.h) + ": ";
  if (v.kind == Kind::kLeftCut) {
    s += "w(f,g∨h)=" + a.ToString() + " " + OpSymbol(iv.op) + " w(f∧h,g)=" +
         b.ToString() + " exceeds w(f,g)=" + w.ToString();
  } else {
    s += "w(f,g)=" + w.ToString() + " exceeds w(f,g∨h)+w(f∧h,g)=" +
         a.ToString() + "+" + b.ToString();
  }
  return s;
}

int Check(const LoadedLattice& lat, const LoadedMetric& m,
          const GlobalOptions& opt, std::ostream& out) {
  const FiniteLattice& l = lat.lattice;
  std::vector<CheckLine> lines;
  auto add = [&](std::string name, bool ok, std::string detail) {
    lines.push_back({std::move(name), ok ? "pass" : "fail", std::move(detail)});
  };
  auto info = [&](std::string name, std::string detail) {
    lines.push_back({std::move(name), "info", std::move(detail)});
  };

  auto pm = CheckPseudoMetric(m.d, 1);
  std::string pm_detail;
  if (!pm.empty()) {
    pm_detail = std::string(MetricViolationName(pm[0].kind)) + " at " +
                Triple(l, pm[0].f, pm[0].g, pm[0].h);
  }
  add("pseudo-metric axioms", pm.empty(), pm_detail);
  info("metric", m.d.IsMetric() ? "yes (d=0 only on the diagonal)"
                                : "no (pseudo-metric)");
  auto st = CheckStrongTriangle(m.d, 1);
  std::string st_detail =
      st.empty() ? "yes"
                 : "no: " + Triple(l, st[0].f, st[0].g, st[0].h);
  bool declared_ultra = m.ultra.has_value() ||
                        m.d.kind() == MetricKind::kUltravaluation;
  if (declared_ultra) {
    add("strong triangle inequality", st.empty(), st.empty() ? "" : st_detail);
  } else {
    info("ultrametric", st_detail);
  }

  if (m.valuation) {
    auto mod = CheckModularLaw(l, *m.valuation);
    std::string detail;
    if (!mod.empty()) {
      detail = "f=" + l.label(mod[0].f) + ", g=" + l.label(mod[0].g) +
               ": v(f)+v(g)=" + FormatRational(mod[0].lhs) +
               ", v(f∧g)+v(f∨g)=" + FormatRational(mod[0].rhs);
    }
    add("modular law", mod.empty(), detail);
    auto cls = ClassifyValuation(l, *m.valuation);
    info("valuation class", std::string("isotone: ") + YesNo(cls.isotone) +
                                ", positive: " + YesNo(cls.positive));
    if (mod.empty()) {
      DifferenceValuation w = MakeDifferenceValuation(l, *m.valuation);
      auto cut = CheckCutLaw(l, w.table(), 1);
      std::string cd;
      if (!cut.empty()) {
        cd = Triple(l, cut[0].f, cut[0].g, cut[0].h) + ": w(f,g)=" +
             FormatRational(cut[0].lhs) + ", w(f,g∨h)+w(f∧h,g)=" +
             FormatRational(cut[0].rhs);
      }
      add("cut law (difference valuation)", cut.empty(), cd);
    }
  }
  if (m.ultra) {
    auto uv = CheckUltravaluation(l, *m.ultra, 1);
    std::string detail;
    if (!uv.empty()) {
      detail = std::string(UltraAxiomName(uv[0].axiom)) + " at " +
               Triple(l, uv[0].f, uv[0].g, uv[0].h);
    }
    add("ultravaluation axioms", uv.empty(), detail);
  }
  if (m.intervaluation) {
    auto iv = CheckIntervaluation(l, *m.intervaluation, 1);
    add("intervaluation axioms (" + m.intervaluation->op.Name() + ")",
        iv.empty(),
        iv.empty() ? "" : DescribeIntervaluation(l, *m.intervaluation, iv[0]));
    if (iv.empty()) {
      auto prop = CheckPropIntervaluation(l, *m.intervaluation);
      add("w(f,g) = w(f∨g,g) = w(f,f∧g) = d(f∨g,g)", prop.empty(),
          prop.empty() ? ""
                       : prop[0].which + " fails at f=" + l.label(prop[0].f) +
                             ", g=" + l.label(prop[0].g));
      info("positive", YesNo(IsPositive(l, *m.intervaluation)));
    }
  }

  // Probe w_d(f,g) = d(f∨g, g) with every builtin op.
  std::vector<CombineOp> ops = BuiltinOps();
  for (const CombineOp& op : m.expected_ops) {
    if (std::find(ops.begin(), ops.end(), op) == ops.end()) ops.push_back(op);
  }
  SurdTable w = WFromMetric(l, m.d);
  auto quals = ClassifyMetric(l, m.d, ops);
  bool expected_ok = false, any_ok = false;
  json op_json = json::array();
  for (const auto& q : quals) {
    std::string detail;
    if (q.qualifies()) {
      detail = "qualifies";
    } else if (!q.violations.empty()) {
      detail = DescribeIntervaluation(l, Intervaluation{w, q.op}, q.violations[0]);
    } else {
      detail = "recovery d = w∘w' fails at f=" + l.label(q.recovery_failure->first) +
               ", g=" + l.label(q.recovery_failure->second);
    }
    any_ok |= q.qualifies();
    if (std::find(m.expected_ops.begin(), m.expected_ops.end(), q.op) !=
        m.expected_ops.end()) {
      expected_ok |= q.qualifies();
    }
    info("w_d probe, op " + q.op.Name(), detail);
  }
  if (m.expected_ops.empty()) {
    add("intervaluation probe (some builtin op qualifies)", any_ok,
        any_ok ? "" : "no builtin op qualifies");
  } else {
    std::vector<std::string> names;
    for (const auto& op : m.expected_ops) names.push_back(op.Name());
    add("intervaluation probe (" + Join(names) + ")", expected_ok,
        expected_ok ? "" : "declared op does not qualify");
  }

  std::size_t failures = std::count_if(lines.begin(), lines.end(),
                                       [](const CheckLine& c) {
                                         return c.status == "fail";
                                       });
  if (opt.json) {
    json j;
    j["metric"] = m.kind + (m.name.empty() ? "" : ":" + m.name);
    j["checks"] = json::array();
    for (const auto& c : lines) {
      j["checks"].push_back({{"name", c.name}, {"status", c.status},
                             {"detail", c.detail}});
    }
    j["violations"] = failures;
    out << j.dump(2) << "\n";
  } else {
    for (const auto& c : lines) {
      std::string tag = c.status == "pass" ? "PASS" : c.status == "fail" ? "FAIL" : "INFO";
      out << tag << "  " << c.name;
      if (!c.detail.empty()) out << ": " << c.detail;
      out << "\n";
    }
    out << "violations: " << failures << "\n";
  }
  return failures == 0 ? kExitOk : kExitViolation;
}

// ---- analyze -----------------------------------------------------------

int Analyze(const LoadedLattice& lat, const LoadedMetric& m,
            const GlobalOptions& opt, std::ostream& out) {
  const FiniteLattice& l = lat.lattice;
  IrreducibilityReport report = AnalyzeIrreducibility(l, m.d, opt.threads);
  std::vector<Element> ji_not_d;
  for (Element p = 0; p < l.size(); ++p) {
    const auto& e = report.elements[p];
    if (e.join_irreducible && !e.d_irreducible) ji_not_d.push_back(p);
  }
  auto witness_text = [&](Element p, const DWitness& w) {
    return "(" + l.label(w.f) + ", " + l.label(w.g) + "): d(p,f)=" +
           m.d.at(p, w.f).ToString() + ", d(p,g)=" + m.d.at(p, w.g).ToString() +
           ", d(p,f∨g)=" + m.d.at(p, l.Join(w.f, w.g)).ToString();
  };
  if (opt.json) {
    json j;
    j["elements"] = json::array();
    for (Element p = 0; p < l.size(); ++p) {
      const auto& e = report.elements[p];
      json row = {{"index", p},
                  {"label", l.label(p)},
                  {"join_irreducible", e.join_irreducible},
                  {"downset_chain", e.downset_chain},
                  {"d_irreducible", e.d_irreducible}};
      if (e.witness) {
        row["witness"] = {l.label(e.witness->f), l.label(e.witness->g)};
        row["witness_distances"] = {
            m.d.at(p, e.witness->f).ToString(), m.d.at(p, e.witness->g).ToString(),
            m.d.at(p, l.Join(e.witness->f, e.witness->g)).ToString()};
      }
      j["elements"].push_back(row);
    }
    j["mli"] = LabelsOf(l, report.mli);
    j["join_irreducible_not_d_irreducible"] = LabelsOf(l, ji_not_d);
    j["metric_note"] = m.d.note();
    out << j.dump(2) << "\n";
    return kExitOk;
  }
  if (!m.d.note().empty()) out << "metric: " << m.d.note() << "\n";
  TextTable table;
  table.Add({"index", "label", "join-irr", "down-chain", "d-irr", "witness"});
  for (Element p = 0; p < l.size(); ++p) {
    const auto& e = report.elements[p];
    table.Add({std::to_string(p), l.label(p), YesNo(e.join_irreducible),
               YesNo(e.downset_chain), YesNo(e.d_irreducible),
               e.witness ? witness_text(p, *e.witness) : ""});
  }
  table.Print(out);
  out << "mli: " << LabelList(l, report.mli) << "\n";
  out << "join-irreducible but not d-irreducible: " << LabelList(l, ji_not_d)
      << "\n";
  return kExitOk;
}

// ---- bases -------------------------------------------------------------

int Bases(const LoadedLattice& lat, const LoadedMetric& m,
          const std::string& r_text, const std::vector<std::string>& base_labels,
          const GlobalOptions& opt, std::ostream& out) {
  const FiniteLattice& l = lat.lattice;
  Rational r = ParseRational(r_text);
  if (r < 0) throw Error(ErrorCode::kInvalidArgument, "--r must be >= 0");
  std::vector<Element> base;
  bool minimal = base_labels.empty();
  if (minimal) {
    base = MinimalBase(l, m.d, r);
  } else {
    for (const auto& label : base_labels) {
      auto e = l.Find(label);
      if (!e) {
        throw Error(ErrorCode::kMismatch, "no element labelled \"" + label + "\"");
      }
      base.push_back(*e);
    }
  }
  BaseReport report = CheckRBase(l, m.d, base, r);
  std::optional<BaseReport> cones;
  if (lat.lipschitz) {
    auto cone_set = LambdaConeElements(*lat.lipschitz);
    cones = CheckRBase(l, m.d, cone_set, r);
  }
  if (opt.json) {
    json j;
    j["r"] = FormatRational(r);
    j["base_source"] = minimal ? "minimal" : "given";
    j["base"] = LabelsOf(l, report.base);
    j["covered"] = report.covered;
    j["uncovered"] = LabelsOf(l, report.uncovered);
    j["closure"] = LabelsOf(l, report.closure);
    j["mli_within_r"] = report.mli_within_r;
    j["mli_distances"] = json::array();
    for (const auto& md : report.mli_distances) {
      j["mli_distances"].push_back({{"element", l.label(md.p)},
                                    {"in_base", std::binary_search(
                                                    report.base.begin(),
                                                    report.base.end(), md.p)},
                                    {"to_base", md.to_base.ToString()},
                                    {"to_closure", md.to_closure.ToString()}});
    }
    if (cones) {
      j["lambda_cones"] = {{"elements", LabelsOf(l, cones->base)},
                           {"covered", cones->covered}};
    }
    out << j.dump(2) << "\n";
  } else {
    out << "R: " << FormatRational(r) << "\n";
    out << (minimal ? "minimal base: " : "base: ") << LabelList(l, report.base)
        << "\n";
    out << "covered: " << YesNo(report.covered) << "\n";
    if (!report.covered) {
      out << "uncovered: " << LabelList(l, report.uncovered) << "\n";
    }
    out << "join-closure: " << LabelList(l, report.closure) << "\n";
    out << "mli distances:\n";
    TextTable table;
    table.Add({"  element", "in-base", "to-base", "to-closure"});
    for (const auto& md : report.mli_distances) {
      table.Add({"  " + l.label(md.p),
                 YesNo(std::binary_search(report.base.begin(),
                                          report.base.end(), md.p)),
                 md.to_base.ToString(), md.to_closure.ToString()});
    }
    table.Print(out);
    out << "mli within R of the base: " << YesNo(report.mli_within_r) << "\n";
    if (cones) {
      out << "lambda cones (" << cones->base.size()
          << " elements) form an R-base: " << YesNo(cones->covered) << "\n";
    }
  }
  return kExitOk;
}

// ---- puzzle ------------------------------------------------------------

std::string PuzzleWitness(const SetLattice& sets, const PuzzleVerdict& v) {
  if (!v.witness) return "";
  return "B=" + sets.lattice().label(v.witness->first) +
         " C=" + sets.lattice().label(v.witness->second);
}

int Puzzle(const LoadedLattice& lat, const GlobalOptions& opt,
           std::ostream& out) {
  if (!lat.sets) {
    throw Error(ErrorCode::kMismatch, "puzzle needs a subsets lattice");
  }
  const SetLattice& sets = *lat.sets;
  const FiniteLattice& l = sets.lattice();
  auto rows = SolvePuzzle(sets);
  std::size_t agree = std::count_if(rows.begin(), rows.end(),
                                    [](const PuzzleRow& r) { return r.agree(); });
  if (opt.json) {
    json j;
    j["rows"] = json::array();
    for (const auto& r : rows) {
      json row = {{"member", l.label(r.member)},
                  {"criterion_d_irreducible", r.criterion.d_irreducible},
                  {"oracle_d_irreducible", r.oracle.irreducible},
                  {"agree", r.agree()}};
      if (r.criterion.witness) {
        row["criterion_witness"] = {l.label(r.criterion.witness->first),
                                    l.label(r.criterion.witness->second)};
      }
      if (r.oracle.witness) {
        row["oracle_witness"] = {l.label(r.oracle.witness->f),
                                 l.label(r.oracle.witness->g)};
      }
      j["rows"].push_back(row);
    }
    j["agreement"] = {{"agree", agree}, {"total", rows.size()}};
    out << j.dump(2) << "\n";
    return kExitOk;
  }
  TextTable table;
  table.Add({"member", "criterion", "oracle", "agree", "criterion-witness",
             "oracle-witness"});
  for (const auto& r : rows) {
    std::string ow;
    if (r.oracle.witness) {
      ow = "(" + l.label(r.oracle.witness->f) + ", " +
           l.label(r.oracle.witness->g) + ")";
    }
    table.Add({l.label(r.member),
               r.criterion.d_irreducible ? "d-irr" : "not d-irr",
               r.oracle.irreducible ? "d-irr" : "not d-irr",
               r.agree() ? "yes" : "NO", PuzzleWitness(sets, r.criterion), ow});
  }
  table.Print(out);
  out << "agreement: " << agree << "/" << rows.size() << "\n";
  return kExitOk;
}

// ---- crosscheck --------------------------------------------------------

int Crosscheck(unsigned count, const GlobalOptions& opt, std::ostream& out) {
  std::mt19937_64 rng(opt.seed);
  std::size_t discrepancies = 0, lattices = 0;
  std::size_t members = 0, agreeing = 0, disagreeing_lattices = 0;
  std::optional<PuzzleDisagreement> first;
  for (unsigned i = 0; i < count; ++i) {
    SetLattice sets = RandomSubsetLattice(rng);
    Valuation v = RandomPositiveValuation(rng, sets);
    discrepancies += TheoremCrosscheck(sets.lattice(), v).size();
    ++lattices;
    auto rows = SolvePuzzle(sets);
    bool any = false;
    for (const auto& r : rows) {
      ++members;
      if (r.agree()) {
        ++agreeing;
      } else {
        any = true;
      }
    }
    if (any) {
      ++disagreeing_lattices;
      if (!first) first = ShrinkPuzzleDisagreement(sets);
    }
  }
  if (opt.json) {
    json j;
    j["seed"] = opt.seed;
    j["theorem"] = {{"lattices", lattices}, {"discrepancies", discrepancies}};
    j["puzzle"] = {{"members", members},
                   {"agree", agreeing},
                   {"lattices_with_disagreement", disagreeing_lattices}};
    if (first) {
      j["puzzle"]["minimal_witness"] = {
          {"members", first->sets.lattice().labels()},
          {"member", first->sets.lattice().label(first->member)}};
    }
    out << j.dump(2) << "\n";
  } else {
    out << "seed: " << opt.seed << "\n";
    out << "theorem crosscheck: " << lattices << " lattices, " << discrepancies
        << " discrepancies\n";
    out << "puzzle criterion vs oracle: " << agreeing << "/" << members
        << " members agree, " << disagreeing_lattices
        << " lattices with disagreement\n";
    if (first) {
      out << "minimal disagreement: lattice "
          << Join(first->sets.lattice().labels()) << ", member "
          << first->sets.lattice().label(first->member) << "\n";
    }
  }
  return discrepancies == 0 ? kExitOk : kExitViolation;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Metric irreducibility analysis on finite lattices", "metriclat"};
  app.require_subcommand(1);
  GlobalOptions opt;
  app.add_flag("--json", opt.json, "Machine-readable JSON output");
  app.add_option("--seed", opt.seed, "Seed for randomized commands");
  app.add_option("--threads", opt.threads, "Worker threads")
      ->check(CLI::Range(1u, 256u));

  std::string lattice_path, metric_path, r_text = "0";
  std::vector<std::string> base_labels;
  unsigned count = 100;

  auto* validate = app.add_subcommand("validate", "Check the lattice axioms");
  validate->add_option("lattice", lattice_path)->required();
  auto* check = app.add_subcommand("check", "Run every applicable law checker");
  check->add_option("lattice", lattice_path)->required();
  check->add_option("metric", metric_path)->required();
  auto* analyze = app.add_subcommand("analyze", "Per-element irreducibility");
  analyze->add_option("lattice", lattice_path)->required();
  analyze->add_option("metric", metric_path)->required();
  auto* bases = app.add_subcommand("bases", "Minimal R-base and mli distances");
  bases->add_option("lattice", lattice_path)->required();
  bases->add_option("metric", metric_path)->required();
  bases->add_option("--r", r_text, "Radius R (rational)");
  bases->add_option("--base", base_labels, "Check this base instead (labels)");
  auto* puzzle = app.add_subcommand("puzzle", "Puzzle criterion vs brute force");
  puzzle->add_option("lattice", lattice_path)->required();
  auto* crosscheck =
      app.add_subcommand("crosscheck", "Randomized corpus cross-checks");
  crosscheck->add_option("--count", count, "Number of random lattices");
  for (auto* sub : {validate, check, analyze, bases, puzzle, crosscheck}) {
    sub->fallthrough();
  }

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kExitOk;
    }
    app.exit(e, out, err);
    return kExitParse;
  }

  bool loading_lattice = true;
  try {
    if (*crosscheck) return Crosscheck(count, opt, out);
    LoadedLattice lat = LoadLatticeFile(lattice_path);
    loading_lattice = false;
    if (*validate) return Validate(lat, opt, out);
    if (*puzzle) return Puzzle(lat, opt, out);
    LoadedMetric metric = LoadMetricFile(metric_path, lat);
    if (*check) return Check(lat, metric, opt, out);
    if (*analyze) return Analyze(lat, metric, opt, out);
    if (*bases) return Bases(lat, metric, r_text, base_labels, opt, out);
  } catch (const Error& e) {
    err << "error (" << ErrorCodeName(e.code()) << "): " << e.what() << "\n";
    return ExitFor(e, loading_lattice);
  } catch (const nlohmann::json::exception& e) {
    err << "error (Parse): " << e.what() << "\n";
    return kExitParse;
  }
  return kExitOk;
}

}  // namespace metriclat::cli
