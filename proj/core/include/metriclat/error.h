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

#ifndef METRICLAT_ERROR_H_
#define METRICLAT_ERROR_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace metriclat {

enum class ErrorCode {
  kInvalidArgument,
  kParse,
  kNotAPoset,
  kNotALattice,
  kTooLarge,
  kNotClosed,
  kClosureTooLarge,
  kNotModular,
  kNotIsotone,
  kNoBottom,
  kCutLawViolated,
  kUltraAxiomViolated,
  kReconstructionMismatch,
  kIntervaluationAxiomViolated,
  kUnsupportedArithmetic,
  kGridMismatch,
  kNoBasepoint,
  kMetricNotCertified,
  kHypothesisUnmet,
  kMismatch,
};

const char* ErrorCodeName(ErrorCode code);

// All library failures are reported through this type; `code()` carries the
// named failure, `what()` a human-readable message with witnesses.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// Sublattice construction failure with the offending pair.
class NotClosedError : public Error {
 public:
  NotClosedError(std::size_t a, std::size_t b, bool is_join, std::size_t result,
                 const std::string& message)
      : Error(ErrorCode::kNotClosed, message),
        a_(a), b_(b), is_join_(is_join), result_(result) {}

  std::size_t a() const { return a_; }
  std::size_t b() const { return b_; }
  bool is_join() const { return is_join_; }
  // Index (in the parent lattice) of the join/meet that fell outside.
  std::size_t result() const { return result_; }

 private:
  std::size_t a_, b_;
  bool is_join_;
  std::size_t result_;
};

}  // namespace metriclat

#endif  // METRICLAT_ERROR_H_
