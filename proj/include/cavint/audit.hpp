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

#ifndef CAVINT__AUDIT_HPP
#define CAVINT__AUDIT_HPP

#include <cavint/geometry.hpp>

#include <span>
#include <string_view>
#include <vector>

namespace cavint {

struct StateSample;

struct AuditTolerances
{
  double gap = 1e-3;   ///< metres
  double time = 1e-6;  ///< seconds
};

enum class FindingKind
{
  RearEndGap,        ///< same-lane gap below delta inside the CZ
  LateralOverlap,    ///< crossing paths occupied at the same time
  ExitSpacing,       ///< same exit lane reached too soon after the leader
  ExitOrder,         ///< MZ exit earlier than the previous queue member
  UnreachableEntry   ///< MZ entry earlier than full acceleration allows
};

std::string_view to_string(FindingKind kind);

struct Finding
{
  FindingKind kind;
  int id;         ///< follower or offending vehicle
  int other;      ///< leader or conflicting vehicle, 0 if none
  double time;
  double value;
  double limit;
};

struct SafetyReport
{
  std::vector<Finding> findings;
  bool clean() const { return findings.empty(); }
};

/// Re-verifies safety from a sampled state table. Only the rows and the
/// geometry are used: zone transitions, entry state and exit speed are read
/// back from the table.
SafetyReport audit_samples(
  std::span<const StateSample> samples,
  const IntersectionGeometry& geometry,
  const AuditTolerances& tolerances = {});

} // namespace cavint

#endif // CAVINT__AUDIT_HPP
