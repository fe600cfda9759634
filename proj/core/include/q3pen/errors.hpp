// Copyright 2026 The q3pen Authors
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

namespace q3pen {

/// Invalid input to an operation (bad index, malformed scenario, ...).
class ArgumentError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// Operation not permitted in the object's current lifecycle phase.
class StateError : public std::logic_error {
   public:
    using std::logic_error::logic_error;
};

/// A requested simulation exceeds the configured qubit capacity.
class ResourceError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// An operator could not be assembled from the supplied parts.
class ConstructionError : public std::logic_error {
   public:
    using std::logic_error::logic_error;
};

}  // namespace q3pen
