// Copyright 2026 The noonecp Authors
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

#ifndef NOONECP_ERRORS_HPP
#define NOONECP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace noonecp {

/// Invalid register construction (duplicate labels, empty register).
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A mode label is unknown to a register, or two registers disagree.
class RegisterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A numeric parameter lies outside its admissible range.
class ParameterError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An operation's precondition on its input state does not hold.
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace noonecp

#endif  // NOONECP_ERRORS_HPP
