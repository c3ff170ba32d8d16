// Copyright 2026 The Bargmann Authors
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

#ifndef BARGMANN_ERROR_H
#define BARGMANN_ERROR_H

#include <stdexcept>
#include <string>

namespace bargmann {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Operands have incompatible dimensions.
class ShapeError : public Error {
   public:
    using Error::Error;
};

/// An argument is outside the domain of the operation (empty input, bad label, unknown name).
class ArgumentError : public Error {
   public:
    using Error::Error;
};

/// A matrix failed state validation (Hermiticity, positivity, or trace).
class ValidationError : public Error {
   public:
    using Error::Error;
};

class HermiticityError : public ValidationError {
   public:
    HermiticityError(const std::string &what, double max_deviation)
        : ValidationError(what), max_deviation(max_deviation) {
    }
    double max_deviation;
};

class PositivityError : public ValidationError {
   public:
    PositivityError(const std::string &what, double eigenvalue) : ValidationError(what), eigenvalue(eigenvalue) {
    }
    double eigenvalue;
};

class TraceError : public ValidationError {
   public:
    using ValidationError::ValidationError;
};

/// Numerical failure: non-convergence, or results contradicting a proven identity.
class NumericError : public Error {
   public:
    using Error::Error;
};

/// An operation's documented precondition does not hold for the given input.
class PreconditionError : public Error {
   public:
    using Error::Error;
};

/// Malformed external input (JSON documents, word text).
class ParseError : public Error {
   public:
    using Error::Error;
};

}  // namespace bargmann

#endif
