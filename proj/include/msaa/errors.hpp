// Copyright 2026 The msaa Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace msaa {

// Malformed input text (DIMACS CNF or lin2 format).
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// An exhaustive search (or expansion) was asked to exceed its size budget.
struct BudgetError : std::runtime_error {
  explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

// Generator parameters violate a feasibility requirement; the message names
// the violated inequality.
struct InfeasibleError : std::invalid_argument {
  explicit InfeasibleError(const std::string& what)
      : std::invalid_argument(what) {}
};

}  // namespace msaa
