// Copyright 2026 The chimera-dyn Authors
//
//    Licensed under the Apache License, Version 2.0 (the "License");
//    you may not use this file except in compliance with the License.
//    You may obtain a copy of the License at
//
//        http://www.apache.org/licenses/LICENSE-2.0
//
//    Unless required by applicable law or agreed to in writing, software
//    distributed under the License is distributed on an "AS IS" BASIS,
//    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//    See the License for the specific language governing permissions and
//    limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace chimera_dyn {

// Base for every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad input data: malformed files, unknown nodes or edges, violated
// preconditions on user-supplied values.
class InputError : public Error {
 public:
  using Error::Error;
};

// A computation could not produce a meaningful result (eigensolver did not
// converge, zero variance, no peak in the window, ...).
class NumericalError : public Error {
 public:
  using Error::Error;
};

}  // namespace chimera_dyn
