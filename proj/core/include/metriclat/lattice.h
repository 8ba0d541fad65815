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

#ifndef METRICLAT_LATTICE_H_
#define METRICLAT_LATTICE_H_

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace metriclat {

// Index of an element inside a FiniteLattice.
using Element = std::size_t;

// A finite lattice stored as explicit order, join and meet tables.
//
// Tables are materialized eagerly, so construction refuses anything above
// kMaxElements. Instances are immutable after construction (the lazily
// computed distributivity flag is an atomic cache) and may be shared across
// threads for reading.
class FiniteLattice {
 public:
  static constexpr std::size_t kMaxElements = 4096;

  // Builds the lattice generated by the reflexive-transitive closure of
  // `leq_pairs` over elements 0..n-1. Labels default to the decimal index.
  //
  // Throws Error(kNotAPoset) on an antisymmetry violation and
  // Error(kNotALattice) when some pair lacks a unique join or meet.
  static FiniteLattice FromLeq(
      std::size_t n, std::span<const std::pair<Element, Element>> leq_pairs,
      std::vector<std::string> labels = {});

  // Same, from an order predicate that is already reflexive and transitive
  // (closure is still computed, so a generating relation is fine too).
  static FiniteLattice FromOrder(
      std::size_t n, const std::function<bool(Element, Element)>& leq,
      std::vector<std::string> labels = {});

  // An empty placeholder; assign a built lattice before use.
  FiniteLattice() = default;
  FiniteLattice(const FiniteLattice& other);
  FiniteLattice& operator=(const FiniteLattice& other);
  FiniteLattice(FiniteLattice&&) noexcept;
  FiniteLattice& operator=(FiniteLattice&&) noexcept;
  ~FiniteLattice() = default;

  std::size_t size() const { return size_; }
  Element bottom() const { return bottom_; }
  Element top() const { return top_; }

  bool Leq(Element a, Element b) const {
    return (up_[a * words_ + b / 64] >> (b % 64)) & 1u;
  }
  bool Less(Element a, Element b) const { return a != b && Leq(a, b); }
  bool Comparable(Element a, Element b) const {
    return Leq(a, b) || Leq(b, a);
  }
  Element Join(Element a, Element b) const { return join_[a * size_ + b]; }
  Element Meet(Element a, Element b) const { return meet_[a * size_ + b]; }

  const std::string& label(Element e) const { return labels_[e]; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<Element> Find(std::string_view label) const;

  // f ∧ (g ∨ h) = (f ∧ g) ∨ (f ∧ h) for every triple. Cached.
  bool IsDistributive() const;

  // f ∨ (g ∧ (f ∨ h)) = (f ∨ g) ∧ (f ∨ h) for every triple.
  bool IsModular() const;

  // Strictly lower set {f : f < p}, ascending by index.
  std::vector<Element> DownSet(Element p) const;

  // True iff every two elements of `elements` are comparable.
  bool IsChain(std::span<const Element> elements) const;

  // Every p such that p = f ∨ g forces p = f or p = g. With this binary
  // definition the bottom element qualifies.
  std::vector<Element> JoinIrreducibles() const;

  // Same, but excluding bottom (the convention that forbids the empty join).
  std::vector<Element> JoinIrreduciblesExcludingBottom() const;

  // Exhaustive check of the order and lattice axioms against the stored
  // tables; returns one message per violated law (empty when all hold).
  std::vector<std::string> CheckAxioms() const;

  // Length of the longest chain from bottom to e.
  std::size_t Rank(Element e) const { return rank_[e]; }

  // Elements sorted by (rank, label): the renumbering used for equality.
  std::vector<Element> CanonicalOrder() const;

  // Equality of tables after canonical renumbering (labels included).
  friend bool operator==(const FiniteLattice& a, const FiniteLattice& b);

 private:
  static FiniteLattice Build(std::size_t n, std::vector<std::uint64_t> up,
                             std::vector<std::string> labels);

  std::size_t size_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> up_;  // row a: bitset of {b : a <= b}
  std::vector<std::uint16_t> join_;
  std::vector<std::uint16_t> meet_;
  std::vector<std::size_t> rank_;
  std::vector<std::string> labels_;
  Element bottom_ = 0;
  Element top_ = 0;
  // -1 unknown, 0 no, 1 yes.
  mutable std::atomic<int> distributive_{-1};
};

}  // namespace metriclat

#endif  // METRICLAT_LATTICE_H_
