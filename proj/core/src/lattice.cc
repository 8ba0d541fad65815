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

#include "metriclat/lattice.h"

#include <algorithm>
#include <bit>
#include <numeric>
#include <unordered_set>

#include "metriclat/error.h"

namespace metriclat {

namespace {

std::vector<std::string> DefaultLabels(std::size_t n,
                                       std::vector<std::string> labels) {
  if (labels.empty()) {
    labels.reserve(n);
    for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  }
  if (labels.size() != n) {
    throw Error(ErrorCode::kInvalidArgument,
                "expected " + std::to_string(n) + " labels, got " +
                    std::to_string(labels.size()));
  }
  std::unordered_set<std::string> seen;
  for (const auto& l : labels) {
    if (!seen.insert(l).second) {
      throw Error(ErrorCode::kInvalidArgument, "duplicate label \"" + l + "\"");
    }
  }
  return labels;
}

void CheckSize(std::size_t n) {
  if (n == 0) {
    throw Error(ErrorCode::kNotALattice, "a lattice needs at least one element");
  }
  if (n > FiniteLattice::kMaxElements) {
    throw Error(ErrorCode::kTooLarge,
                std::to_string(n) + " elements exceeds the table limit of " +
                    std::to_string(FiniteLattice::kMaxElements));
  }
}

inline bool TestBit(const std::vector<std::uint64_t>& bits, std::size_t words,
                    std::size_t row, std::size_t col) {
  return (bits[row * words + col / 64] >> (col % 64)) & 1u;
}

inline void SetBit(std::vector<std::uint64_t>& bits, std::size_t words,
                   std::size_t row, std::size_t col) {
  bits[row * words + col / 64] |= std::uint64_t{1} << (col % 64);
}

}  // namespace

FiniteLattice::FiniteLattice(const FiniteLattice& other)
    : size_(other.size_),
      words_(other.words_),
      up_(other.up_),
      join_(other.join_),
      meet_(other.meet_),
      rank_(other.rank_),
      labels_(other.labels_),
      bottom_(other.bottom_),
      top_(other.top_),
      distributive_(other.distributive_.load()) {}

FiniteLattice& FiniteLattice::operator=(const FiniteLattice& other) {
  if (this != &other) {
    FiniteLattice copy(other);
    *this = std::move(copy);
  }
  return *this;
}

FiniteLattice::FiniteLattice(FiniteLattice&& other) noexcept
    : size_(other.size_),
      words_(other.words_),
      up_(std::move(other.up_)),
      join_(std::move(other.join_)),
      meet_(std::move(other.meet_)),
      rank_(std::move(other.rank_)),
      labels_(std::move(other.labels_)),
      bottom_(other.bottom_),
      top_(other.top_),
      distributive_(other.distributive_.load()) {}

FiniteLattice& FiniteLattice::operator=(FiniteLattice&& other) noexcept {
  size_ = other.size_;
  words_ = other.words_;
  up_ = std::move(other.up_);
  join_ = std::move(other.join_);
  meet_ = std::move(other.meet_);
  rank_ = std::move(other.rank_);
  labels_ = std::move(other.labels_);
  bottom_ = other.bottom_;
  top_ = other.top_;
  distributive_.store(other.distributive_.load());
  return *this;
}

FiniteLattice FiniteLattice::FromLeq(
    std::size_t n, std::span<const std::pair<Element, Element>> leq_pairs,
    std::vector<std::string> labels) {
  CheckSize(n);
  std::size_t words = (n + 63) / 64;
  std::vector<std::uint64_t> up(n * words, 0);
  for (const auto& [a, b] : leq_pairs) {
    if (a >= n || b >= n) {
      throw Error(ErrorCode::kInvalidArgument,
                  "order pair (" + std::to_string(a) + "," + std::to_string(b) +
                      ") out of range for " + std::to_string(n) + " elements");
    }
    SetBit(up, words, a, b);
  }
  return Build(n, std::move(up), std::move(labels));
}

FiniteLattice FiniteLattice::FromOrder(
    std::size_t n, const std::function<bool(Element, Element)>& leq,
    std::vector<std::string> labels) {
  CheckSize(n);
  std::size_t words = (n + 63) / 64;
  std::vector<std::uint64_t> up(n * words, 0);
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      if (leq(a, b)) SetBit(up, words, a, b);
    }
  }
  return Build(n, std::move(up), std::move(labels));
}

FiniteLattice FiniteLattice::Build(std::size_t n, std::vector<std::uint64_t> up,
                                   std::vector<std::string> labels) {
  labels = DefaultLabels(n, std::move(labels));
  const std::size_t words = (n + 63) / 64;
  for (Element a = 0; a < n; ++a) SetBit(up, words, a, a);

  // Warshall on bitset rows.
  for (Element k = 0; k < n; ++k) {
    for (Element i = 0; i < n; ++i) {
      if (i != k && TestBit(up, words, i, k)) {
        for (std::size_t w = 0; w < words; ++w) {
          up[i * words + w] |= up[k * words + w];
        }
      }
    }
  }
  for (Element a = 0; a < n; ++a) {
    for (Element b = a + 1; b < n; ++b) {
      if (TestBit(up, words, a, b) && TestBit(up, words, b, a)) {
        throw Error(ErrorCode::kNotAPoset,
                    "antisymmetry violated: " + labels[a] + " <= " + labels[b] +
                        " and " + labels[b] + " <= " + labels[a]);
      }
    }
  }

  // A linear extension: sorting by the size of the principal down-set.
  std::vector<std::size_t> below(n, 0);
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      if (TestBit(up, words, a, b)) ++below[b];
    }
  }
  std::vector<Element> ext(n);
  std::iota(ext.begin(), ext.end(), Element{0});
  std::stable_sort(ext.begin(), ext.end(), [&](Element x, Element y) {
    return below[x] < below[y];
  });
  std::vector<std::size_t> pos(n);
  for (std::size_t i = 0; i < n; ++i) pos[ext[i]] = i;

  // Up- and down-sets in extension coordinates: the least upper bound is the
  // lowest set bit of the common up-set, provided it dominates that set.
  std::vector<std::uint64_t> pup(n * words, 0), pdown(n * words, 0);
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      if (TestBit(up, words, a, b)) {
        SetBit(pup, words, a, pos[b]);
        SetBit(pdown, words, b, pos[a]);
      }
    }
  }

  FiniteLattice lattice;
  lattice.size_ = n;
  lattice.words_ = words;
  lattice.join_.assign(n * n, 0);
  lattice.meet_.assign(n * n, 0);
  std::vector<std::uint64_t> common(words);
  for (Element a = 0; a < n; ++a) {
    for (Element b = a; b < n; ++b) {
      // join
      std::size_t first = n;
      for (std::size_t w = 0; w < words; ++w) {
        common[w] = pup[a * words + w] & pup[b * words + w];
        if (first == n && common[w] != 0) {
          first = w * 64 + std::countr_zero(common[w]);
        }
      }
      if (first == n) {
        throw Error(ErrorCode::kNotALattice, "no upper bound for " + labels[a] +
                                                 " and " + labels[b]);
      }
      Element j = ext[first];
      for (std::size_t w = 0; w < words; ++w) {
        if (common[w] & ~pup[j * words + w]) {
          throw Error(ErrorCode::kNotALattice,
                      "no least upper bound for " + labels[a] + " and " +
                          labels[b]);
        }
      }
      // meet
      std::size_t last = n;
      for (std::size_t w = words; w-- > 0;) {
        common[w] = pdown[a * words + w] & pdown[b * words + w];
        if (last == n && common[w] != 0) {
          last = w * 64 + 63 - std::countl_zero(common[w]);
        }
      }
      if (last == n) {
        throw Error(ErrorCode::kNotALattice, "no lower bound for " + labels[a] +
                                                 " and " + labels[b]);
      }
      Element m = ext[last];
      for (std::size_t w = 0; w < words; ++w) {
        if (common[w] & ~pdown[m * words + w]) {
          throw Error(ErrorCode::kNotALattice,
                      "no greatest lower bound for " + labels[a] + " and " +
                          labels[b]);
        }
      }
      lattice.join_[a * n + b] = lattice.join_[b * n + a] =
          static_cast<std::uint16_t>(j);
      lattice.meet_[a * n + b] = lattice.meet_[b * n + a] =
          static_cast<std::uint16_t>(m);
    }
  }

  Element bottom = 0, top = 0;
  for (Element a = 1; a < n; ++a) {
    bottom = lattice.meet_[bottom * n + a];
    top = lattice.join_[top * n + a];
  }

  std::vector<std::size_t> rank(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    Element b = ext[i];
    for (std::size_t k = 0; k < i; ++k) {
      Element a = ext[k];
      if (TestBit(up, words, a, b)) rank[b] = std::max(rank[b], rank[a] + 1);
    }
  }

  lattice.up_ = std::move(up);
  lattice.rank_ = std::move(rank);
  lattice.labels_ = std::move(labels);
  lattice.bottom_ = bottom;
  lattice.top_ = top;
  return lattice;
}

std::optional<Element> FiniteLattice::Find(std::string_view label) const {
  for (Element e = 0; e < size_; ++e) {
    if (labels_[e] == label) return e;
  }
  return std::nullopt;
}

bool FiniteLattice::IsDistributive() const {
  int cached = distributive_.load(std::memory_order_relaxed);
  if (cached >= 0) return cached == 1;
  bool result = true;
  for (Element f = 0; f < size_ && result; ++f) {
    for (Element g = 0; g < size_ && result; ++g) {
      for (Element h = g + 1; h < size_; ++h) {
        if (Meet(f, Join(g, h)) != Join(Meet(f, g), Meet(f, h))) {
          result = false;
          break;
        }
      }
    }
  }
  distributive_.store(result ? 1 : 0, std::memory_order_relaxed);
  return result;
}

bool FiniteLattice::IsModular() const {
  for (Element f = 0; f < size_; ++f) {
    for (Element g = 0; g < size_; ++g) {
      for (Element h = 0; h < size_; ++h) {
        if (Join(f, Meet(g, Join(f, h))) != Meet(Join(f, g), Join(f, h))) {
          return false;
        }
      }
    }
  }
  return true;
}

std::vector<Element> FiniteLattice::DownSet(Element p) const {
  std::vector<Element> result;
  for (Element f = 0; f < size_; ++f) {
    if (Less(f, p)) result.push_back(f);
  }
  return result;
}

bool FiniteLattice::IsChain(std::span<const Element> elements) const {
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (std::size_t j = i + 1; j < elements.size(); ++j) {
      if (!Comparable(elements[i], elements[j])) return false;
    }
  }
  return true;
}

std::vector<Element> FiniteLattice::JoinIrreducibles() const {
  std::vector<bool> reducible(size_, false);
  for (Element f = 0; f < size_; ++f) {
    for (Element g = f + 1; g < size_; ++g) {
      Element j = Join(f, g);
      if (j != f && j != g) reducible[j] = true;
    }
  }
  std::vector<Element> result;
  for (Element p = 0; p < size_; ++p) {
    if (!reducible[p]) result.push_back(p);
  }
  return result;
}

std::vector<Element> FiniteLattice::JoinIrreduciblesExcludingBottom() const {
  std::vector<Element> result = JoinIrreducibles();
  std::erase(result, bottom_);
  return result;
}

std::vector<std::string> FiniteLattice::CheckAxioms() const {
  std::vector<std::string> problems;
  auto note = [&](const std::string& law, Element a, Element b, Element c) {
    problems.push_back(law + " fails at (" + labels_[a] + ", " + labels_[b] +
                       ", " + labels_[c] + ")");
  };
  const std::size_t n = size_;
  bool order_ok = true, bounds_ok = true, algebra_ok = true;
  for (Element a = 0; a < n; ++a) {
    if (!Leq(a, a) && order_ok) {
      note("reflexivity", a, a, a);
      order_ok = false;
    }
    if (!Leq(bottom_, a) || !Leq(a, top_)) {
      if (bounds_ok) note("bounds", bottom_, a, top_);
      bounds_ok = false;
    }
    for (Element b = 0; b < n; ++b) {
      if (a != b && Leq(a, b) && Leq(b, a) && order_ok) {
        note("antisymmetry", a, b, a);
        order_ok = false;
      }
      Element j = Join(a, b), m = Meet(a, b);
      if (algebra_ok &&
          (j != Join(b, a) || m != Meet(b, a) || Join(a, a) != a ||
           Meet(a, a) != a || Join(a, Meet(a, b)) != a ||
           Meet(a, Join(a, b)) != a)) {
        note("commutativity/idempotence/absorption", a, b, a);
        algebra_ok = false;
      }
      if (bounds_ok && (!Leq(a, j) || !Leq(b, j) || !Leq(m, a) || !Leq(m, b))) {
        note("join/meet bound", a, b, a);
        bounds_ok = false;
      }
      for (Element c = 0; c < n; ++c) {
        if (order_ok && Leq(a, b) && Leq(b, c) && !Leq(a, c)) {
          note("transitivity", a, b, c);
          order_ok = false;
        }
        if (bounds_ok && Leq(a, c) && Leq(b, c) && !Leq(j, c)) {
          note("least upper bound", a, b, c);
          bounds_ok = false;
        }
        if (bounds_ok && Leq(c, a) && Leq(c, b) && !Leq(c, m)) {
          note("greatest lower bound", a, b, c);
          bounds_ok = false;
        }
        if (algebra_ok && (Join(Join(a, b), c) != Join(a, Join(b, c)) ||
                           Meet(Meet(a, b), c) != Meet(a, Meet(b, c)))) {
          note("associativity", a, b, c);
          algebra_ok = false;
        }
      }
    }
  }
  return problems;
}

std::vector<Element> FiniteLattice::CanonicalOrder() const {
  std::vector<Element> order(size_);
  std::iota(order.begin(), order.end(), Element{0});
  std::sort(order.begin(), order.end(), [&](Element a, Element b) {
    if (rank_[a] != rank_[b]) return rank_[a] < rank_[b];
    return labels_[a] < labels_[b];
  });
  return order;
}

bool operator==(const FiniteLattice& a, const FiniteLattice& b) {
  if (a.size_ != b.size_) return false;
  auto oa = a.CanonicalOrder();
  auto ob = b.CanonicalOrder();
  for (std::size_t i = 0; i < oa.size(); ++i) {
    if (a.labels_[oa[i]] != b.labels_[ob[i]]) return false;
  }
  for (std::size_t i = 0; i < oa.size(); ++i) {
    for (std::size_t j = 0; j < oa.size(); ++j) {
      if (a.Leq(oa[i], oa[j]) != b.Leq(ob[i], ob[j])) return false;
    }
  }
  return true;
}

}  // namespace metriclat
