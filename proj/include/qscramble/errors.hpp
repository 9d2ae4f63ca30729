// Copyright 2026 The qscramble Authors
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

#ifndef QSCRAMBLE_ERRORS_HPP
#define QSCRAMBLE_ERRORS_HPP

#include <stdexcept>

namespace qscramble {

struct InvalidSizeError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct InvalidEventError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct InvalidRegionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct SizeLimitError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct UndefinedQualityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace qscramble

#endif  // QSCRAMBLE_ERRORS_HPP
