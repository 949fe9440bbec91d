/*
 * Copyright (C) 2026 The cavint Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 *
*/

#ifndef CAVINT__ERRORS_HPP
#define CAVINT__ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cavint {

/// Invalid configuration or input value. Carries the offending field name.
class ValidationError : public std::invalid_argument
{
public:
  ValidationError(std::string field, const std::string& what)
  : std::invalid_argument(field + ": " + what),
    _field(std::move(field))
  {
    // Do nothing
  }

  const std::string& field() const { return _field; }

private:
  std::string _field;
};

/// Raised by the trajectory solvers for degenerate or unsupported problems.
class PlanningError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

} // namespace cavint

#endif // CAVINT__ERRORS_HPP
