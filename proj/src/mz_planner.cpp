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

#include <cavint/mz_planner.hpp>
#include <cavint/detail/boundary_solve.hpp>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <string>
#include <vector>

namespace cavint {

namespace {

// Above this value of A1 * duration the exponential basis is used.
constexpr double series_threshold = 2.0;

void require_window(const MzBoundary& b)
{
  if (!(b.duration() > 0.0))
    throw PlanningError("merging-zone window is empty: tf must exceed tm");
}

// Rows p, v, u at tau = 0 and tau = duration, in that order.
Eigen::VectorXd six_rhs(const MzBoundary& b)
{
  Eigen::VectorXd rhs(6);
  rhs << b.p_start, b.vm, b.u_start, b.p_end, b.vf, b.u_end;
  return rhs;
}

} // anonymous namespace

//==============================================================================
std::string_view to_string(MzObjective objective)
{
  switch (objective)
  {
    case MzObjective::FuelOnly: return "fuel";
    case MzObjective::JerkOnly: return "jerk";
    case MzObjective::Weighted: return "weighted";
  }
  return "?";
}

//==============================================================================
std::optional<MzObjective> parse_objective(std::string_view text)
{
  if (text == "fuel") return MzObjective::FuelOnly;
  if (text == "jerk") return MzObjective::JerkOnly;
  if (text == "weighted") return MzObjective::Weighted;
  return std::nullopt;
}

//==============================================================================
double MzTrajectory::mode(int which, double tau, int r) const
{
  const double A = _rate;
  if (!_series)
  {
    if (which == 1)
      return std::pow(-A, r) * std::exp(-A * tau);
    return std::pow(A, r) * std::exp(A * (tau - _duration));
  }

  // sum_{k >= 2} A^(2k-4) tau^(n_k - r) / (n_k - r)!, n_k = 2k (+1 if odd).
  int m = (which == 1 ? 4 : 5) - r;
  double term = 1.0;
  for (int i = 2; i <= m; ++i)
    term /= static_cast<double>(i);
  term *= std::pow(tau, m);

  double sum = term;
  const double x2 = A * A * tau * tau;
  for (int k = 0; k < 60; ++k)
  {
    term *= x2 / static_cast<double>((m + 1) * (m + 2));
    m += 2;
    sum += term;
    if (std::abs(term) <= 1e-18 * std::abs(sum))
      break;
  }
  return sum;
}

//==============================================================================
double MzTrajectory::derivative(double t, int r) const
{
  return evaluate(t - _tm, r);
}

//==============================================================================
double MzTrajectory::evaluate(double tau, int r) const
{
  double value = 0.0;
  for (int k = 5; k >= 0; --k)
  {
    if (_poly[static_cast<std::size_t>(k)] != 0.0)
    {
      value += _poly[static_cast<std::size_t>(k)]
        * detail::monomial_derivative(k, r, tau);
    }
  }

  if (_objective == MzObjective::Weighted)
    value += _g1 * mode(1, tau, r) + _g2 * mode(2, tau, r);

  return value;
}

double MzTrajectory::position(double t) const { return derivative(t, 0); }
double MzTrajectory::speed(double t) const { return derivative(t, 1); }
double MzTrajectory::control(double t) const { return derivative(t, 2); }
double MzTrajectory::jerk(double t) const { return derivative(t, 3); }

//==============================================================================
MzTrajectory solve_mz_jerk(const MzBoundary& b)
{
  require_window(b);
  const double T = b.duration();

  Eigen::MatrixXd A(6, 6);
  for (int r = 0; r < 3; ++r)
  {
    for (int k = 0; k < 6; ++k)
    {
      A(r, k) = detail::monomial_derivative(k, r, 0.0);
      A(3 + r, k) = detail::monomial_derivative(k, r, T);
    }
  }

  const auto sol = detail::solve_boundary_system(A, six_rhs(b));

  MzTrajectory out;
  out._objective = MzObjective::JerkOnly;
  out._tm = b.tm;
  out._duration = T;
  for (int k = 0; k < 6; ++k)
    out._poly[static_cast<std::size_t>(k)] = sol.x(k);
  out._condition = sol.condition;

  auto& c = out._coefficients;
  c.a = 120.0 * sol.x(5);
  c.b = 24.0 * sol.x(4);
  c.c = 6.0 * sol.x(3);
  c.d = 2.0 * sol.x(2);
  c.e = sol.x(1);
  c.f = sol.x(0);
  return out;
}

//==============================================================================
MzTrajectory solve_mz_fuel(const MzBoundary& b)
{
  require_window(b);
  const double T = b.duration();

  Eigen::MatrixXd A(4, 4);
  for (int r = 0; r < 2; ++r)
  {
    for (int k = 0; k < 4; ++k)
    {
      A(r, k) = detail::monomial_derivative(k, r, 0.0);
      A(2 + r, k) = detail::monomial_derivative(k, r, T);
    }
  }
  Eigen::VectorXd rhs(4);
  rhs << b.p_start, b.vm, b.p_end, b.vf;

  const auto sol = detail::solve_boundary_system(A, rhs);

  MzTrajectory out;
  out._objective = MzObjective::FuelOnly;
  out._tm = b.tm;
  out._duration = T;
  for (int k = 0; k < 4; ++k)
    out._poly[static_cast<std::size_t>(k)] = sol.x(k);
  out._condition = sol.condition;

  auto& c = out._coefficients;
  c.a = 6.0 * sol.x(3);
  c.b = 2.0 * sol.x(2);
  c.c = sol.x(1);
  c.d = sol.x(0);
  return out;
}

//==============================================================================
MzTrajectory solve_mz_weighted(
  const MzBoundary& b,
  const WeightedParameters& params,
  double exponent_cap)
{
  const double w = params.w;
  if (!(w > 0.0 && w < 1.0))
  {
    throw PlanningError(
      "weight w = " + std::to_string(w) + " is outside (0, 1); the weighted "
      "closed form only holds for w != 0 and w != 1, use the jerk-only (w = 0) "
      "or fuel-only (w = 1) solver instead");
  }
  if (!(params.q1 > 0.0) || !(params.q2 > 0.0))
    throw PlanningError("normalization factors q1 and q2 must be positive");
  require_window(b);

  const double T = b.duration();
  const double alpha = w * params.q1;
  const double beta = (1.0 - w) * params.q2;
  const double rate = std::sqrt(alpha / beta);

  if (rate * T > exponent_cap)
  {
    throw PlanningError(
      "exponent A1 * duration = " + std::to_string(rate * T)
      + " exceeds the configured cap " + std::to_string(exponent_cap));
  }

  MzTrajectory out;
  out._objective = MzObjective::Weighted;
  out._weights = params;
  out._tm = b.tm;
  out._duration = T;
  out._rate = rate;
  out._series = rate * T <= series_threshold;

  Eigen::MatrixXd A(6, 6);
  for (int r = 0; r < 3; ++r)
  {
    for (int k = 0; k < 4; ++k)
    {
      A(r, k) = detail::monomial_derivative(k, r, 0.0);
      A(3 + r, k) = detail::monomial_derivative(k, r, T);
    }
    A(r, 4) = out.mode(1, 0.0, r);
    A(r, 5) = out.mode(2, 0.0, r);
    A(3 + r, 4) = out.mode(1, T, r);
    A(3 + r, 5) = out.mode(2, T, r);
  }

  const auto sol = detail::solve_boundary_system(A, six_rhs(b));
  for (int k = 0; k < 4; ++k)
    out._poly[static_cast<std::size_t>(k)] = sol.x(k);
  out._g1 = sol.x(4);
  out._g2 = sol.x(5);
  out._condition = sol.condition;

  // Textbook amplitudes e (growing mode) and f (decaying mode), and the cubic
  // left over once both modes are written as pure exponentials.
  std::array<double, 4> cubic{sol.x(0), sol.x(1), sol.x(2), sol.x(3)};
  auto& c = out._coefficients;
  c.rate_a1 = rate;
  c.rate_a2 = -rate;
  if (out._series)
  {
    const double A2 = rate * rate;
    const double A4 = A2 * A2;
    const double A5 = A4 * rate;
    c.e = out._g1 / (2.0 * A4) + out._g2 / (2.0 * A5);
    c.f = out._g1 / (2.0 * A4) - out._g2 / (2.0 * A5);
    cubic[0] -= out._g1 / A4;
    cubic[1] -= out._g2 / A4;
    cubic[2] -= out._g1 / (2.0 * A2);
    cubic[3] -= out._g2 / (6.0 * A2);
  }
  else
  {
    c.e = out._g2 * std::exp(-rate * T);
    c.f = out._g1;
  }

  c.a = 6.0 * alpha * cubic[3];
  c.b = 2.0 * alpha * cubic[2];
  c.c = alpha * cubic[1] - c.a * beta / alpha;
  c.d = alpha * cubic[0];
  return out;
}

//==============================================================================
MzTrajectory solve_mz(
  const MzBoundary& boundary,
  MzObjective objective,
  const WeightedParameters& params,
  double exponent_cap)
{
  switch (objective)
  {
    case MzObjective::FuelOnly: return solve_mz_fuel(boundary);
    case MzObjective::JerkOnly: return solve_mz_jerk(boundary);
    case MzObjective::Weighted:
      return solve_mz_weighted(boundary, params, exponent_cap);
  }
  throw PlanningError("unknown merging-zone objective");
}

//==============================================================================
double combine_costs(double fuel, double discomfort, double w, double q1, double q2)
{
  return w * q1 * fuel + (1.0 - w) * q2 * discomfort;
}

//==============================================================================
MzCosts mz_costs(const MzTrajectory& tr, double q1, double q2)
{
  const double T = tr.duration();
  const auto u2 = [&tr](double tau) { const double u = tr.evaluate(tau, 2); return u * u; };
  const auto j2 = [&tr](double tau) { const double j = tr.evaluate(tau, 3); return j * j; };

  MzCosts out;
  if (tr.objective() == MzObjective::Weighted)
  {
    // Boundary layers of width ~1/A at both ends; integrate them separately.
    std::vector<double> cuts{0.0};
    const double layer = 20.0 / tr._rate;
    if (!tr._series && 2.0 * layer < T)
    {
      cuts.push_back(layer);
      cuts.push_back(T - layer);
    }
    cuts.push_back(T);

    using boost::math::quadrature::gauss_kronrod;
    constexpr unsigned max_depth = 12;
    constexpr double tol = 1e-12;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
    {
      out.fuel += 0.5 * gauss_kronrod<double, 31>::integrate(u2, cuts[i], cuts[i + 1], max_depth, tol);
      out.discomfort += 0.5 * gauss_kronrod<double, 31>::integrate(j2, cuts[i], cuts[i + 1], max_depth, tol);
    }
  }
  else
  {
    // u^2 is at most degree 6 and J^2 degree 4: 10 nodes are exact.
    using boost::math::quadrature::gauss;
    out.fuel = 0.5 * gauss<double, 10>::integrate(u2, 0.0, T);
    out.discomfort = 0.5 * gauss<double, 10>::integrate(j2, 0.0, T);
  }

  double w = 0.0;
  if (tr.objective() == MzObjective::FuelOnly)
    w = 1.0;
  else if (const auto p = tr.weights())
    w = p->w;

  out.weighted = combine_costs(out.fuel, out.discomfort, w, q1, q2);
  return out;
}

} // namespace cavint
