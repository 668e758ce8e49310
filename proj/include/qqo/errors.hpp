// Copyright 2026 The qqo Authors
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

namespace qqo {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// A matrix handed to a hermitian routine failed the symmetry check.
class NonHermitianInput : public Error {
   public:
    using Error::Error;
};

/// A vector that must be real carries nonzero imaginary parts.
class NonRealInput : public Error {
   public:
    using Error::Error;
};

/// A parameter or state lies outside the domain where an operation is defined.
class DomainError : public Error {
   public:
    using Error::Error;
};

/// Malformed external input (tensor files, CLI values).
class InputError : public Error {
   public:
    using Error::Error;
};

}  // namespace qqo
