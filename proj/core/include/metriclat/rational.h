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

#ifndef METRICLAT_RATIONAL_H_
#define METRICLAT_RATIONAL_H_

#include <compare>
#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace metriclat {

using Integer = boost::multiprecision::number<
    boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<
    boost::multiprecision::rational_adaptor<
        boost::multiprecision::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

// Accepts "p", "-p" and "p/q"; anything else (including decimals) throws
// Error(kParse).
Rational ParseRational(std::string_view text);

// "p" for integers, otherwise "p/q" in lowest terms.
std::string FormatRational(const Rational& value);

Rational Pow(const Rational& base, unsigned exponent);
Integer Pow(const Integer& base, unsigned exponent);

// floor(n^(1/k)) for n >= 0, k >= 1.
Integer FloorRoot(const Integer& n, unsigned k);

// The rational k-th root of a nonnegative rational, if there is one.
std::optional<Rational> ExactRoot(const Rational& value, unsigned k);

// A nonnegative real of the form radicand^(1/index). Lp metrics and
// intervaluations live here so that every comparison stays exact.
class Surd {
 public:
  Surd() = default;
  Surd(Rational value) : radicand_(std::move(value)) {}  // NOLINT
  Surd(Rational radicand, unsigned index);

  const Rational& radicand() const { return radicand_; }
  unsigned index() const { return index_; }

  bool IsZero() const { return radicand_ == 0; }

  // Rational value when the root is exact.
  std::optional<Rational> ToRational() const;

  // radicand raised so that the surd reads as r^(1/index).
  Rational RadicandAtIndex(unsigned index) const;

  // Lowest index representation (perfect powers collapse).
  Surd Normalized() const;

  std::string ToString() const;

  friend std::strong_ordering operator<=>(const Surd& a, const Surd& b);
  friend bool operator==(const Surd& a, const Surd& b) {
    return (a <=> b) == std::strong_ordering::equal;
  }

 private:
  Rational radicand_ = 0;
  unsigned index_ = 1;
};

const Surd& Max(const Surd& a, const Surd& b);
const Surd& Min(const Surd& a, const Surd& b);

// Decides z <= x + y exactly. Two positive radicals of a common index can only
// sum to a third when their ratio is rational, so the irrational case is
// settled by interval refinement that always terminates.
bool LessEqualSum(const Surd& z, const Surd& x, const Surd& y);

// Exact ordering of x + y against z (nonnegative operands).
std::strong_ordering CompareSum(const Surd& x, const Surd& y, const Surd& z);

// x + y as a surd when representable (one side zero or rational ratio).
std::optional<Surd> Sum(const Surd& x, const Surd& y);

}  // namespace metriclat

#endif  // METRICLAT_RATIONAL_H_
