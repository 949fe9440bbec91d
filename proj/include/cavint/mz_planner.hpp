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

#ifndef CAVINT__MZ_PLANNER_HPP
#define CAVINT__MZ_PLANNER_HPP

#include <cavint/errors.hpp>

#include <array>
#include <optional>
#include <string_view>

namespace cavint {

/// Boundary data of the merging-zone problem. Positions are arc length
/// measured from the CZ entry, so p_start is the CZ length.
struct MzBoundary
{
  double tm = 0.0;
  double tf = 0.0;
  double vm = 0.0;
  double vf = 0.0;
  double p_start = 0.0;
  double p_end = 0.0;
  double u_start = 0.0;
  double u_end = 0.0;

  double duration() const { return tf - tm; }
};

enum class MzObjective
{
  FuelOnly,   ///< w = 1: minimize 1/2 int u^2, position/speed boundary only
  JerkOnly,   ///< w = 0: minimize 1/2 int J^2
  Weighted    ///< 0 < w < 1: minimize 1/2 int (w q1 u^2 + (1 - w) q2 J^2)
};

std::string_view to_string(MzObjective objective);
std::optional<MzObjective> parse_objective(std::string_view text);

struct WeightedParameters
{
  double w = 0.5;
  double q1 = 1.0;
  double q2 = 1.0;
};

/// Coefficients in the textbook closed-form layout, in the shifted time
/// tau = t - tm.
///
/// FuelOnly:  u = a tau + b; v and p add integration constants c, d.
/// JerkOnly:  u = a tau^3/6 + b tau^2/2 + c tau + d; v adds e, p adds f.
/// Weighted:  u = (a tau + b)/(w q1) + e A1^2 exp(A1 tau) + f A2^2 exp(A2 tau)
///            v = (a tau^2/2 + b tau + c + a (1-w) q2/(w q1))/(w q1)
///                + e A1 exp(A1 tau) + f A2 exp(A2 tau)
///            p = (a tau^3/6 + b tau^2/2 + c tau + a (1-w) q2/(w q1) tau + d)/(w q1)
///                + e exp(A1 tau) + f exp(A2 tau),   A2 = -A1.
struct MzCoefficients
{
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double d = 0.0;
  double e = 0.0;
  double f = 0.0;
  double rate_a1 = 0.0;
  double rate_a2 = 0.0;
};

struct MzCosts;

/// Closed-form merging-zone trajectory.
///
/// Internally the position is held as p(tau) = P3(tau) + g1 phi1(tau) +
/// g2 phi2(tau) for the weighted variant (P3 a cubic), or as a plain
/// polynomial otherwise. For small A1 * duration phi1, phi2 are the even and
/// odd remainders of cosh and sinh beyond their cubic Taylor part, scaled to
/// tau^4/24 and tau^5/120; otherwise they are exp(-A1 tau) and
/// exp(A1 (tau - duration)). Both stay well conditioned at their extremes.
class MzTrajectory
{
public:
  MzObjective objective() const { return _objective; }
  std::optional<WeightedParameters> weights() const { return _weights; }

  double tm() const { return _tm; }
  double tf() const { return _tm + _duration; }
  double duration() const { return _duration; }

  double position(double t) const;
  double speed(double t) const;
  double control(double t) const;
  double jerk(double t) const;

  /// r-th time derivative of position, r in [0, 4].
  double derivative(double t, int r) const;

  const MzCoefficients& coefficients() const { return _coefficients; }

  /// Condition number of the boundary system.
  double condition() const { return _condition; }

  /// Whether the weighted variant uses the series basis.
  bool series_basis() const { return _series; }

private:
  friend MzTrajectory solve_mz_fuel(const MzBoundary&);
  friend MzTrajectory solve_mz_jerk(const MzBoundary&);
  friend MzTrajectory solve_mz_weighted(
    const MzBoundary&, const WeightedParameters&, double);
  friend MzCosts mz_costs(const MzTrajectory&, double, double);

  double mode(int which, double tau, int r) const;
  double evaluate(double tau, int r) const;

  MzObjective _objective = MzObjective::JerkOnly;
  std::optional<WeightedParameters> _weights;
  double _tm = 0.0;
  double _duration = 0.0;

  std::array<double, 6> _poly{};  ///< monomial coefficients of p(tau)
  double _rate = 0.0;
  bool _series = false;
  double _g1 = 0.0;
  double _g2 = 0.0;

  MzCoefficients _coefficients;
  double _condition = 1.0;
};

/// Minimum-jerk motion: quintic position matching p, v, u at both ends.
MzTrajectory solve_mz_jerk(const MzBoundary& boundary);

/// Fuel-optimal motion: cubic position matching p, v at both ends. The
/// acceleration boundary values are not imposed.
MzTrajectory solve_mz_fuel(const MzBoundary& boundary);

inline constexpr double default_exponent_cap = 700.0;

/// Convex combination of fuel and jerk. Requires 0 < w < 1 and q1, q2 > 0;
/// throws PlanningError otherwise, or when A1 * duration exceeds the cap.
MzTrajectory solve_mz_weighted(
  const MzBoundary& boundary,
  const WeightedParameters& params,
  double exponent_cap = default_exponent_cap);

/// Dispatches on the objective. The weighted parameters are only read for
/// MzObjective::Weighted.
MzTrajectory solve_mz(
  const MzBoundary& boundary,
  MzObjective objective,
  const WeightedParameters& params = {},
  double exponent_cap = default_exponent_cap);

//==============================================================================
struct MzCosts
{
  double fuel = 0.0;        ///< 1/2 int u^2
  double discomfort = 0.0;  ///< 1/2 int J^2
  double weighted = 0.0;    ///< w q1 fuel + (1 - w) q2 discomfort
};

/// Weighted combination of the two cost terms.
double combine_costs(double fuel, double discomfort, double w, double q1, double q2);

/// Costs of a trajectory. The weighted entry uses the trajectory's own w
/// (1 for FuelOnly, 0 for JerkOnly). Polynomial variants are integrated
/// exactly by Gauss-Legendre quadrature; the weighted variant by adaptive
/// Gauss-Kronrod quadrature.
MzCosts mz_costs(const MzTrajectory& trajectory, double q1, double q2);

} // namespace cavint

#endif // CAVINT__MZ_PLANNER_HPP
