// Copyright 2026 The Immanant Interferometry Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace immanant {

// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Caller-side problems: bad arguments, mismatched sizes, configured caps.
class ValidationError : public Error {
 public:
  using Error::Error;
};

class DimensionError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class SizeLimitError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class ParseError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// Failures that arise while computing on otherwise well-formed input.
class ComputationError : public Error {
 public:
  using Error::Error;
};

// The input state has (numerically) zero norm, so normalized rates are undefined.
class DegenerateStateError : public ComputationError {
 public:
  using ComputationError::ComputationError;
};

class UnitarityError : public ComputationError {
 public:
  UnitarityError(const std::string& what, double deviation)
      : ComputationError(what), deviation_(deviation) {}

  double deviation() const noexcept { return deviation_; }

 private:
  double deviation_;
};

// An internal identity failed (e.g. a rate came out clearly negative).
class ConsistencyError : public ComputationError {
 public:
  using ComputationError::ComputationError;
};

// Delay vector does not produce integer overlap exponents.
class UnsupportedSchemeError : public ComputationError {
 public:
  using ComputationError::ComputationError;
};

class DependentBasisError : public ComputationError {
 public:
  using ComputationError::ComputationError;
};

class BasisSpanError : public ComputationError {
 public:
  BasisSpanError(const std::string& what, double residual)
      : ComputationError(what), residual_(residual) {}

  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

}  // namespace immanant
