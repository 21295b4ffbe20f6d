// Copyright 2026 The fluxring Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FLUXRING_ERRORS_H_
#define FLUXRING_ERRORS_H_

#include <stdexcept>
#include <string>

namespace fluxring {

// Bad input: a value violates a type invariant or a precondition.
class ValidationError : public std::invalid_argument {
 public:
  ValidationError(std::string field, const std::string& reason)
      : std::invalid_argument(field + ": " + reason), field_(std::move(field)) {}

  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

// A computation could not be carried out with the given (valid) inputs.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// 8r/a <= e^2: the thin-wire self-inductance formula goes non-positive.
class NonPositiveLog : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

// A harmonic drive reconstructed to a field with a significant imaginary part.
class NonRealField : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

// A level index lies outside the truncated winding basis.
class TruncationExceeded : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class StepSizeUnderflow : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class StepLimitExceeded : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class NotTwoLevel : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

}  // namespace fluxring

#endif  // FLUXRING_ERRORS_H_
