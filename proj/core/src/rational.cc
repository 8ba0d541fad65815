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

#include "metriclat/rational.h"

#include <numeric>
#include <stdexcept>

#include "metriclat/error.h"

namespace metriclat {

const char* ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kParse: return "Parse";
    case ErrorCode::kNotAPoset: return "NotAPoset";
    case ErrorCode::kNotALattice: return "NotALattice";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kNotClosed: return "NotClosed";
    case ErrorCode::kClosureTooLarge: return "ClosureTooLarge";
    case ErrorCode::kNotModular: return "NotModular";
    case ErrorCode::kNotIsotone: return "NotIsotone";
    case ErrorCode::kNoBottom: return "NoBottom";
    case ErrorCode::kCutLawViolated: return "CutLawViolated";
    case ErrorCode::kUltraAxiomViolated: return "UltraAxiomViolated";
    case ErrorCode::kReconstructionMismatch: return "ReconstructionMismatch";
    case ErrorCode::kIntervaluationAxiomViolated:
      return "IntervaluationAxiomViolated";
    case ErrorCode::kUnsupportedArithmetic: return "UnsupportedArithmetic";
    case ErrorCode::kGridMismatch: return "GridMismatch";
    case ErrorCode::kNoBasepoint: return "NoBasepoint";
    case ErrorCode::kMetricNotCertified: return "MetricNotCertified";
    case ErrorCode::kHypothesisUnmet: return "HypothesisUnmet";
    case ErrorCode::kMismatch: return "Mismatch";
  }
  return "Unknown";
}

namespace {

Integer ParseInteger(std::string_view text, std::string_view whole) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    negative = text[pos] == '-';
    ++pos;
  }
  if (pos == text.size()) {
    throw Error(ErrorCode::kParse,
                "malformed rational \"" + std::string(whole) + "\"");
  }
  Integer value = 0;
  for (; pos < text.size(); ++pos) {
    char c = text[pos];
    if (c < '0' || c > '9') {
      throw Error(ErrorCode::kParse,
                  "malformed rational \"" + std::string(whole) + "\"");
    }
    value = value * 10 + (c - '0');
  }
  return negative ? Integer(-value) : value;
}

}  // namespace

Rational ParseRational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(ParseInteger(text, text));
  }
  Integer num = ParseInteger(text.substr(0, slash), text);
  Integer den = ParseInteger(text.substr(slash + 1), text);
  if (den == 0) {
    throw Error(ErrorCode::kParse,
                "zero denominator in \"" + std::string(text) + "\"");
  }
  return Rational(num, den);
}

std::string FormatRational(const Rational& value) {
  if (denominator(value) == 1) return numerator(value).str();
  return numerator(value).str() + "/" + denominator(value).str();
}

Integer Pow(const Integer& base, unsigned exponent) {
  Integer result = 1;
  Integer b = base;
  while (exponent > 0) {
    if (exponent & 1u) result *= b;
    exponent >>= 1;
    if (exponent > 0) b *= b;
  }
  return result;
}

Rational Pow(const Rational& base, unsigned exponent) {
  return Rational(Pow(numerator(base), exponent),
                  Pow(denominator(base), exponent));
}

Integer FloorRoot(const Integer& n, unsigned k) {
  if (n < 0) throw Error(ErrorCode::kInvalidArgument, "root of negative");
  if (k == 0) throw Error(ErrorCode::kInvalidArgument, "zeroth root");
  if (k == 1 || n < 2) return n;
  std::size_t bits = msb(n) + 1;
  // 2^ceil(bits/k) is an over-estimate; Newton descends monotonically from it.
  Integer x = Integer(1) << ((bits + k - 1) / k);
  while (true) {
    Integer y = ((k - 1) * x + n / Pow(x, k - 1)) / k;
    if (y >= x) break;
    x = y;
  }
  while (Pow(x, k) > n) --x;
  while (Pow(x + 1, k) <= n) ++x;
  return x;
}

std::optional<Rational> ExactRoot(const Rational& value, unsigned k) {
  if (value < 0) return std::nullopt;
  if (k == 1) return value;
  Integer num = numerator(value);
  Integer den = denominator(value);
  Integer rn = FloorRoot(num, k);
  if (Pow(rn, k) != num) return std::nullopt;
  Integer rd = FloorRoot(den, k);
  if (Pow(rd, k) != den) return std::nullopt;
  return Rational(rn, rd);
}

Surd::Surd(Rational radicand, unsigned index)
    : radicand_(std::move(radicand)), index_(index) {
  if (index_ == 0) throw Error(ErrorCode::kInvalidArgument, "surd index 0");
  if (index_ > 1 && radicand_ < 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "even-index surds of negative radicands are not real");
  }
}

std::optional<Rational> Surd::ToRational() const {
  return ExactRoot(radicand_, index_);
}

Rational Surd::RadicandAtIndex(unsigned index) const {
  if (index % index_ != 0) {
    throw Error(ErrorCode::kInvalidArgument, "index is not a multiple");
  }
  return Pow(radicand_, index / index_);
}

Surd Surd::Normalized() const {
  if (index_ == 1) return *this;
  for (unsigned d = index_; d > 1; --d) {
    if (index_ % d != 0) continue;
    if (auto r = ExactRoot(radicand_, d)) return Surd(*r, index_ / d);
  }
  return *this;
}

std::string Surd::ToString() const {
  Surd n = Normalized();
  if (n.index() == 1) return FormatRational(n.radicand());
  return "(" + FormatRational(n.radicand()) + ")^(1/" +
         std::to_string(n.index()) + ")";
}

std::strong_ordering operator<=>(const Surd& a, const Surd& b) {
  bool a_neg = a.radicand_ < 0;
  bool b_neg = b.radicand_ < 0;
  if (a.index_ == 1 && b.index_ == 1) {
    if (a.radicand_ < b.radicand_) return std::strong_ordering::less;
    if (b.radicand_ < a.radicand_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }
  if (a_neg != b_neg) {
    return a_neg ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  unsigned l = std::lcm(a.index_, b.index_);
  Rational ra = a.RadicandAtIndex(l);
  Rational rb = b.RadicandAtIndex(l);
  if (ra < rb) return std::strong_ordering::less;
  if (rb < ra) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

const Surd& Max(const Surd& a, const Surd& b) { return a < b ? b : a; }
const Surd& Min(const Surd& a, const Surd& b) { return b < a ? b : a; }

namespace {

struct Bounds {
  Rational lo, hi;
};

// Encloses value^(1/k) in an interval of width 1/(den * 2^bits).
Bounds RootBounds(const Rational& value, unsigned k, unsigned bits) {
  const Integer& num = numerator(value);
  const Integer& den = denominator(value);
  Integer scaled = num * Pow(den, k - 1) * Pow(Integer(2), bits * k);
  Integer floor_root = FloorRoot(scaled, k);
  Integer scale = den * Pow(Integer(2), bits);
  return {Rational(floor_root, scale), Rational(floor_root + 1, scale)};
}

}  // namespace

bool LessEqualSum(const Surd& z, const Surd& x, const Surd& y) {
  if (z.index() == 1 && x.index() == 1 && y.index() == 1) {
    return z.radicand() <= x.radicand() + y.radicand();
  }
  if (z.radicand() < 0) return x.radicand() >= 0 && y.radicand() >= 0;
  if (x.radicand() < 0 || y.radicand() < 0) {
    throw Error(ErrorCode::kUnsupportedArithmetic,
                "mixed-index sum with a negative term");
  }
  if (auto s = Sum(x, y)) return z <= *s;
  // x, y > 0 with irrational ratio: z == x + y is impossible.
  unsigned l = std::lcm(z.index(), std::lcm(x.index(), y.index()));
  Rational a = z.RadicandAtIndex(l);
  Rational b = x.RadicandAtIndex(l);
  Rational c = y.RadicandAtIndex(l);
  for (unsigned bits = 16; bits <= (1u << 16); bits *= 2) {
    Bounds bz = RootBounds(a, l, bits);
    Bounds bx = RootBounds(b, l, bits);
    Bounds by = RootBounds(c, l, bits);
    if (bz.hi <= bx.lo + by.lo) return true;
    if (bz.lo > bx.hi + by.hi) return false;
  }
  throw std::logic_error("LessEqualSum: refinement did not separate");
}

std::strong_ordering CompareSum(const Surd& x, const Surd& y, const Surd& z) {
  if (auto s = Sum(x, y)) return *s <=> z;
  // Not representable, so x + y != z.
  return LessEqualSum(z, x, y) ? std::strong_ordering::greater
                               : std::strong_ordering::less;
}

std::optional<Surd> Sum(const Surd& x, const Surd& y) {
  if (x.index() == 1 && y.index() == 1) return Surd(x.radicand() + y.radicand());
  if (x.IsZero()) return y;
  if (y.IsZero()) return x;
  if (x.radicand() < 0 || y.radicand() < 0) return std::nullopt;
  unsigned l = std::lcm(x.index(), y.index());
  Rational b = x.RadicandAtIndex(l);
  Rational c = y.RadicandAtIndex(l);
  auto ratio = ExactRoot(b / c, l);
  if (!ratio) return std::nullopt;
  // x + y = (ratio + 1) * y.
  return Surd(Pow(*ratio + 1, l) * c, l).Normalized();
}

}  // namespace metriclat
