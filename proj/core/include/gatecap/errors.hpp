// Copyright 2026 The gatecap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GATECAP_ERRORS_HPP
#define GATECAP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gatecap {

// Invalid user input is reported with std::invalid_argument.
// InternalError marks a violated internal invariant (a bug, not bad input);
// the CLI maps it to exit code 2.
class InternalError : public std::logic_error {
  public:
    explicit InternalError(const std::string &what) : std::logic_error(what) {}
};

}  // namespace gatecap

#endif
