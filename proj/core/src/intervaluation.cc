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

#include "metriclat/intervaluation.h"

#include <algorithm>
#include <array>
#include <cctype>
#include <numeric>
#include <set>

#include "metriclat/error.h"

namespace metriclat {

CombineOp CombineOp::Lp(unsigned p) {
  if (p == 0) throw Error(ErrorCode::kInvalidArgument, "lp exponent must be >= 1");
  return CombineOp(Kind::kLp, p);
}

CombineOp CombineOp::Parse(std::string_view name) {
  std::string s(name);
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  if (s == "add" || s == "sum" || s == "+") return Add();
  if (s == "max") return Max();
  if (s.rfind("lp", 0) == 0) {
    std::string rest = s.substr(2);
    if (!rest.empty() && rest[0] == ':') rest = rest.substr(1);
    if (rest.empty()) {
      throw Error(ErrorCode::kParse, "lp op needs an exponent: \"" + s + "\"");
    }
    if (!std::all_of(rest.begin(), rest.end(),
                     [](unsigned char c) { return std::isdigit(c); })) {
      if (rest.find_first_of("./") != std::string::npos) {
        throw Error(ErrorCode::kUnsupportedArithmetic,
                    "only integer lp exponents are supported: \"" + s + "\"");
      }
      throw Error(ErrorCode::kParse, "bad lp exponent: \"" + s + "\"");
    }
    if (rest.size() > 3) {
      throw Error(ErrorCode::kUnsupportedArithmetic, "lp exponent too large");
    }
    return Lp(static_cast<unsigned>(std::stoul(rest)));
  }
  throw Error(ErrorCode::kParse, "unknown combine op \"" + s + "\"");
}

std::string CombineOp::Name() const {
  switch (kind_) {
    case Kind::kAdd: return "add";
    case Kind::kMax: return "max";
    case Kind::kLp: return "lp" + std::to_string(p_);
  }
  return "?";
}

namespace {

// r^p as a surd of r's index.
Surd PowerOf(const Surd& r, unsigned p) {
  return Surd(Pow(r.radicand(), p), r.index());
}

// r^p as a rational, when r's index divides p.
std::optional<Rational> RationalPower(const Surd& r, unsigned p) {
  if (p % r.index() == 0) return Pow(r.radicand(), p / r.index());
  Surd n = r.Normalized();
  if (p % n.index() == 0) return Pow(n.radicand(), p / n.index());
  return std::nullopt;
}

}  // namespace

Surd CombineOp::Apply(const Surd& r, const Surd& s) const {
  switch (kind_) {
    case Kind::kMax:
      return metriclat::Max(r, s);
    case Kind::kAdd: {
      auto sum = Sum(r, s);
      if (!sum) {
        throw Error(ErrorCode::kUnsupportedArithmetic,
                    r.ToString() + " + " + s.ToString() +
                        " is not a single radical");
      }
      return *sum;
    }
    case Kind::kLp: {
      auto a = RationalPower(r, p_);
      auto b = RationalPower(s, p_);
      if (!a || !b) {
        throw Error(ErrorCode::kUnsupportedArithmetic,
                    "lp" + std::to_string(p_) + " of " + r.ToString() +
                        " and " + s.ToString() + " is not a single radical");
      }
      if (p_ == 1) return Surd(*a + *b);
      return Surd(*a + *b, p_);
    }
  }
  return r;
}

std::strong_ordering CombineOp::Compare(const Surd& r, const Surd& s,
                                        const Surd& t) const {
  switch (kind_) {
    case Kind::kMax:
      return metriclat::Max(r, s) <=> t;
    case Kind::kAdd:
      return CompareSum(r, s, t);
    case Kind::kLp:
      return CompareSum(PowerOf(r, p_), PowerOf(s, p_), PowerOf(t, p_));
  }
  return std::strong_ordering::equal;
}

std::vector<CombineOp> BuiltinOps() {
  return {CombineOp::Add(), CombineOp::Max(), CombineOp::Lp(2),
          CombineOp::Lp(3)};
}

std::vector<OpViolation> CheckOpAxioms(const CombineOp& op,
                                       std::span<const OpSample> samples) {
  std::vector<OpViolation> out;
  for (const OpSample& x : samples) {
    if (x.r < 0 || x.s < 0 || x.t < 0 || x.u < 0) {
      throw Error(ErrorCode::kInvalidArgument, "op samples must be nonnegative");
    }
    Surd r(x.r), s(x.s), t(x.t), u(x.u), zero;
    auto fail = [&](const char* what) { out.push_back({what, x}); };
    if (op.Apply(r, zero) != r || op.Apply(zero, r) != r) fail("identity");
    if (op.Apply(r, s) != op.Apply(s, r)) fail("commutativity");
    if (op.Apply(op.Apply(r, s), t) != op.Apply(r, op.Apply(s, t))) {
      fail("associativity");
    }
    Surd rt = op.Apply(r, t);
    Surd wide = op.Apply(Surd(x.r + x.s), Surd(x.t + x.u));
    if (rt > wide) fail("sandwich-left");
    if (!LessEqualSum(wide, rt, op.Apply(s, u))) fail("sandwich-right");
    if (Max(r, s) > op.Apply(r, s)) fail("domination");
  }
  return out;
}

namespace {

// Max of linear forms with nonnegative integer coefficients in r, s, t, u.
using Form = std::array<int, 4>;
using Expr = std::set<Form>;

Expr Var(int i) {
  Form f{};
  f[i] = 1;
  return {f};
}

Expr Zero() { return {Form{}}; }

Expr Plus(const Expr& a, const Expr& b) {
  Expr out;
  for (const Form& x : a) {
    for (const Form& y : b) {
      Form z;
      for (int i = 0; i < 4; ++i) z[i] = x[i] + y[i];
      out.insert(z);
    }
  }
  return out;
}

Expr Join(const Expr& a, const Expr& b) {
  Expr out = a;
  out.insert(b.begin(), b.end());
  return out;
}

bool Dominated(const Expr& a, const Expr& b) {
  return std::all_of(a.begin(), a.end(), [&](const Form& x) {
    return std::any_of(b.begin(), b.end(), [&](const Form& y) {
      for (int i = 0; i < 4; ++i) {
        if (x[i] > y[i]) return false;
      }
      return true;
    });
  });
}

bool Equivalent(const Expr& a, const Expr& b) {
  return Dominated(a, b) && Dominated(b, a);
}

}  // namespace

SymbolicVerdict VerifyOpAxiomsSymbolically(const CombineOp& op) {
  SymbolicVerdict verdict;
  if (op.kind() == CombineOp::Kind::kLp) return verdict;
  verdict.supported = true;
  auto apply = [&](const Expr& a, const Expr& b) {
    return op.kind() == CombineOp::Kind::kAdd ? Plus(a, b) : Join(a, b);
  };
  Expr r = Var(0), s = Var(1), t = Var(2), u = Var(3);
  auto record = [&](const char* name, bool ok) {
    (ok ? verdict.proved : verdict.unproved).push_back(name);
  };
  record("identity", Equivalent(apply(r, Zero()), r) &&
                         Equivalent(apply(Zero(), r), r));
  record("commutativity", Equivalent(apply(r, s), apply(s, r)));
  record("associativity",
         Equivalent(apply(apply(r, s), t), apply(r, apply(s, t))));
  Expr wide = apply(Plus(r, s), Plus(t, u));
  record("sandwich-left", Dominated(apply(r, t), wide));
  record("sandwich-right", Dominated(wide, Plus(apply(r, t), apply(s, u))));
  record("domination", Dominated(Join(r, s), apply(r, s)));
  return verdict;
}

const char* IntervaluationViolationName(IntervaluationViolation::Kind kind) {
  switch (kind) {
    case IntervaluationViolation::Kind::kNegative: return "negative";
    case IntervaluationViolation::Kind::kComparable: return "comparable-nonzero";
    case IntervaluationViolation::Kind::kLeftCut: return "left-cut";
    case IntervaluationViolation::Kind::kRightCut: return "right-cut";
  }
  return "?";
}

namespace {

// Orders (a ∘ b) against c for table entries, with rational fast paths.
class Combiner {
 public:
  Combiner(const SurdTable& w, const CombineOp& op) : w_(w), op_(op) {
    unsigned k = w.root_index();
    std::size_t n = w.size();
    if (op.kind() == CombineOp::Kind::kMax) {
      mode_ = Mode::kPowersMax;
    } else if (op.kind() == CombineOp::Kind::kAdd && k == 1) {
      mode_ = Mode::kPowersSum;
      exponent_ = 1;
    } else if (op.kind() == CombineOp::Kind::kLp && op.p() % k == 0) {
      mode_ = Mode::kPowersSum;
      exponent_ = op.p() / k;
    }
    if (mode_ == Mode::kPowersSum && exponent_ != 1) {
      raised_ = PairTable(n);
      for (Element f = 0; f < n; ++f) {
        for (Element g = 0; g < n; ++g) {
          raised_(f, g) = Pow(w.power(f, g), exponent_);
        }
      }
    }
  }

  std::strong_ordering Compare(Element af, Element ag, Element bf, Element bg,
                               Element cf, Element cg) const {
    switch (mode_) {
      case Mode::kPowersMax: {
        const Rational& a = w_.power(af, ag);
        const Rational& b = w_.power(bf, bg);
        return Order(a < b ? b : a, w_.power(cf, cg));
      }
      case Mode::kPowersSum: {
        const PairTable& t = exponent_ == 1 ? w_.powers() : raised_;
        return Order(t(af, ag) + t(bf, bg), t(cf, cg));
      }
      case Mode::kSurds:
        return op_.Compare(w_.at(af, ag), w_.at(bf, bg), w_.at(cf, cg));
    }
    return std::strong_ordering::equal;
  }

 private:
  enum class Mode { kSurds, kPowersMax, kPowersSum };

  static std::strong_ordering Order(const Rational& a, const Rational& b) {
    if (a < b) return std::strong_ordering::less;
    if (b < a) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  const SurdTable& w_;
  const CombineOp& op_;
  Mode mode_ = Mode::kSurds;
  unsigned exponent_ = 1;
  PairTable raised_;
};

// z <= x + y for three entries of a table at a common root index, decided on
// the powers when x^p + y^p <= (x+y)^p <= 2^(p-1) (x^p + y^p) settles it.
bool RightCutHolds(const SurdTable& w, Element zf, Element zg, Element xf,
                   Element xg, Element yf, Element yg) {
  const Rational& z = w.power(zf, zg);
  const Rational& x = w.power(xf, xg);
  const Rational& y = w.power(yf, yg);
  const Rational sum = x + y;
  if (z <= sum) return true;
  const unsigned p = w.root_index();
  if (p == 1) return false;
  if (z > sum * Pow(Rational(2), p - 1)) return false;
  return LessEqualSum(w.at(zf, zg), w.at(xf, xg), w.at(yf, yg));
}

}  // namespace

std::vector<IntervaluationViolation> CheckIntervaluation(
    const FiniteLattice& lattice, const Intervaluation& iv,
    std::size_t limit) {
  const std::size_t n = lattice.size();
  if (iv.w.size() != n) {
    throw Error(ErrorCode::kMismatch, "intervaluation table has " +
                                          std::to_string(iv.w.size()) +
                                          " rows, lattice has " +
                                          std::to_string(n));
  }
  std::vector<IntervaluationViolation> out;
  auto full = [&] { return limit != 0 && out.size() >= limit; };
  using Kind = IntervaluationViolation::Kind;
  for (Element f = 0; f < n && !full(); ++f) {
    for (Element g = 0; g < n && !full(); ++g) {
      const Rational& p = iv.w.power(f, g);
      if (p < 0) out.push_back({Kind::kNegative, f, g, f});
      if (!full() && lattice.Leq(f, g) && p != 0) {
        out.push_back({Kind::kComparable, f, g, f});
      }
    }
  }
  if (!out.empty()) return out;
  Combiner combine(iv.w, iv.op);
  for (Element f = 0; f < n && !full(); ++f) {
    for (Element g = 0; g < n && !full(); ++g) {
      for (Element h = 0; h < n && !full(); ++h) {
        Element gh = lattice.Join(g, h);
        Element fh = lattice.Meet(f, h);
        if (combine.Compare(f, gh, fh, g, f, g) ==
            std::strong_ordering::greater) {
          out.push_back({Kind::kLeftCut, f, g, h});
          if (full()) break;
        }
        if (!RightCutHolds(iv.w, f, g, f, gh, fh, g)) out.push_back({Kind::kRightCut, f, g, h});
      }
    }
  }
  return out;
}

bool IsPositive(const FiniteLattice& lattice, const Intervaluation& iv) {
  return IsPositivePairTable(lattice, iv.w);
}

namespace {

std::string Witness(const FiniteLattice& lattice,
                    const IntervaluationViolation& v) {
  std::string s = IntervaluationViolationName(v.kind);
  s += " at f=" + lattice.label(v.f) + ", g=" + lattice.label(v.g);
  if (v.kind == IntervaluationViolation::Kind::kLeftCut ||
      v.kind == IntervaluationViolation::Kind::kRightCut) {
    s += ", h=" + lattice.label(v.h);
  }
  return s;
}

}  // namespace

MetricTable CombinedMetric(const Intervaluation& iv) {
  const std::size_t n = iv.w.size();
  std::vector<Surd> cells(n * n);
  unsigned index = 1;
  for (Element f = 0; f < n; ++f) {
    for (Element g = 0; g < n; ++g) {
      Surd d = iv.op.Apply(iv.w.at(f, g), iv.w.at(g, f));
      index = std::lcm(index, d.index());
      cells[f * n + g] = std::move(d);
    }
  }
  PairTable powers(n);
  for (Element f = 0; f < n; ++f) {
    for (Element g = 0; g < n; ++g) {
      powers(f, g) = cells[f * n + g].RadicandAtIndex(index);
    }
  }
  return MetricTable(SurdTable(std::move(powers), index), MetricKind::kRaw,
                     "op=" + iv.op.Name());
}

MetricTable MetricFromIntervaluation(const FiniteLattice& lattice,
                                     const Intervaluation& iv) {
  auto bad = CheckIntervaluation(lattice, iv, 1);
  if (!bad.empty()) {
    throw Error(ErrorCode::kIntervaluationAxiomViolated,
                "not an intervaluation for " + iv.op.Name() + ": " +
                    Witness(lattice, bad.front()));
  }
  MetricTable d = CombinedMetric(iv);
  return MetricTable(d.distances(), MetricKind::kIntervaluation,
                     "op=" + iv.op.Name());
}

std::vector<PropViolation> CheckPropIntervaluation(const FiniteLattice& lattice,
                                                   const Intervaluation& iv) {
  const std::size_t n = lattice.size();
  std::vector<PropViolation> out;
  for (Element f = 0; f < n; ++f) {
    for (Element g = 0; g < n; ++g) {
      Element j = lattice.Join(f, g);
      Element m = lattice.Meet(f, g);
      const Rational& w = iv.w.power(f, g);
      if (w != iv.w.power(j, g)) out.push_back({f, g, "w(f,g) = w(f∨g,g)"});
      if (w != iv.w.power(f, m)) out.push_back({f, g, "w(f,g) = w(f,f∧g)"});
      if (iv.op.Compare(iv.w.at(j, g), iv.w.at(g, j), iv.w.at(f, g)) !=
          std::strong_ordering::equal) {
        out.push_back({f, g, "w(f,g) = d(f∨g,g)"});
      }
    }
  }
  return out;
}

SurdTable WFromMetric(const FiniteLattice& lattice, const MetricTable& d) {
  const std::size_t n = lattice.size();
  if (d.size() != n) {
    throw Error(ErrorCode::kMismatch, "metric has " + std::to_string(d.size()) +
                                          " rows, lattice has " +
                                          std::to_string(n));
  }
  PairTable w(n);
  for (Element f = 0; f < n; ++f) {
    for (Element g = 0; g < n; ++g) w(f, g) = d.power(lattice.Join(f, g), g);
  }
  return SurdTable(std::move(w), d.root_index());
}

std::vector<OpQualification> ClassifyMetric(const FiniteLattice& lattice,
                                            const MetricTable& d,
                                            std::span<const CombineOp> ops) {
  std::vector<CombineOp> builtin;
  if (ops.empty()) {
    builtin = BuiltinOps();
    ops = builtin;
  }
  SurdTable w = WFromMetric(lattice, d);
  const std::size_t n = lattice.size();
  std::vector<OpQualification> out;
  for (const CombineOp& op : ops) {
    OpQualification q{op, {}, std::nullopt};
    q.violations = CheckIntervaluation(lattice, Intervaluation{w, op}, 3);
    for (Element f = 0; f < n && !q.recovery_failure; ++f) {
      for (Element g = 0; g < n; ++g) {
        auto c = op.Compare(w.at(f, g), w.at(g, f), d.at(f, g));
        if (c != std::strong_ordering::equal) {
          q.recovery_failure = std::make_pair(f, g);
          break;
        }
      }
    }
    out.push_back(std::move(q));
  }
  return out;
}

Rational RealChainDifference(const Rational& r, const Rational& s) {
  return r > s ? Rational(r - s) : Rational(0);
}

Intervaluation PointwiseSupIntervaluation(const PointwiseLattice& functions,
                                          const ChainIntervaluation& chain) {
  if (chain.op.kind() != CombineOp::Kind::kMax) {
    throw Error(ErrorCode::kInvalidArgument,
                "pointwise sup needs the max op on the chain, got " +
                    chain.op.Name());
  }
  const std::size_t n = functions.size();
  PairTable w(n);
  for (Element f = 0; f < n; ++f) {
    for (Element g = 0; g < n; ++g) {
      Rational best = 0;
      const auto& a = functions.values[f];
      const auto& b = functions.values[g];
      for (std::size_t x = 0; x < a.size(); ++x) {
        Rational v = chain.w(a[x], b[x]);
        if (x == 0 || v > best) best = std::move(v);
      }
      w(f, g) = std::move(best);
    }
  }
  return Intervaluation{SurdTable(std::move(w)), CombineOp::Max()};
}

}  // namespace metriclat
