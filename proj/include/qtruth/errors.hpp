// Copyright 2026 The qtruth Authors
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

namespace qtruth {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// A state vector or weight distribution that is not normalized.
class NormalizationError : public Error {
  public:
    using Error::Error;
};

class UnitarityError : public Error {
  public:
    using Error::Error;
};

/// Operands whose dimensions do not agree.
class DimensionError : public Error {
  public:
    using Error::Error;
};

/// An operator that was required to be a projector (truth operator) is not.
class ProjectorError : public Error {
  public:
    using Error::Error;
};

class HermiticityError : public Error {
  public:
    using Error::Error;
};

/// A projector family that was required to be mutually orthogonal is not.
class OrthogonalityError : public Error {
  public:
    using Error::Error;
};

/// A computed truth value fell outside [0, 1] or acquired an imaginary
/// part beyond tolerance.
class NumericalIntegrityError : public Error {
  public:
    using Error::Error;
};

/// Argument outside its documented domain (angles, indices, sizes).
class RangeError : public Error {
  public:
    using Error::Error;
};

class UnsupportedError : public Error {
  public:
    using Error::Error;
};

/// A leaf family handed to the tautology checker does not commute.
class NonCommutingError : public Error {
  public:
    using Error::Error;
};

} // namespace qtruth
