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

#include <cavint/detail/boundary_solve.hpp>
#include <cavint/errors.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace cavint {
namespace detail {

//==============================================================================
LinearSolution solve_boundary_system(
  const Eigen::MatrixXd& A,
  const Eigen::VectorXd& b)
{
  if (A.rows() != A.cols() || A.rows() != b.size())
    throw PlanningError("boundary system must be square");

  if (!A.allFinite() || !b.allFinite())
    throw PlanningError("boundary system contains non-finite entries");

  const Eigen::JacobiSVD<Eigen::MatrixXd> raw_svd(A);
  const auto& raw_sigma = raw_svd.singularValues();
  const double condition = raw_sigma(raw_sigma.size() - 1) > 0.0
    ? raw_sigma(0) / raw_sigma(raw_sigma.size() - 1)
    : std::numeric_limits<double>::infinity();

  // Equilibrate columns then rows; the powers of tau span many decades.
  Eigen::VectorXd col_scale = A.cwiseAbs().colwise().maxCoeff().transpose();
  for (Eigen::Index j = 0; j < col_scale.size(); ++j)
  {
    if (col_scale(j) == 0.0)
      throw PlanningError("boundary system has an empty column");
    col_scale(j) = 1.0 / col_scale(j);
  }
  Eigen::MatrixXd scaled = A * col_scale.asDiagonal();

  Eigen::VectorXd row_scale = scaled.cwiseAbs().rowwise().maxCoeff();
  for (Eigen::Index i = 0; i < row_scale.size(); ++i)
  {
    if (row_scale(i) == 0.0)
      throw PlanningError("boundary system has an empty row");
    row_scale(i) = 1.0 / row_scale(i);
  }
  scaled = row_scale.asDiagonal() * scaled;

  const Eigen::FullPivLU<Eigen::MatrixXd> lu(scaled);
  if (lu.rcond() < 1e-14)
    throw PlanningError("boundary system is singular");

  Eigen::VectorXd y = lu.solve(row_scale.asDiagonal() * b);

  // One step of iterative refinement on the scaled system.
  const Eigen::VectorXd r = row_scale.asDiagonal() * b - scaled * y;
  y += lu.solve(r);

  return LinearSolution{col_scale.asDiagonal() * y, condition};
}

//==============================================================================
double monomial_derivative(int k, int r, double tau)
{
  if (r > k)
    return 0.0;
  double coeff = 1.0;
  for (int i = 0; i < r; ++i)
    coeff *= static_cast<double>(k - i);
  return coeff * std::pow(tau, k - r);
}

namespace {

double horner(const std::array<double, 4>& c, double x)
{
  return ((c[3] * x + c[2]) * x + c[1]) * x + c[0];
}

double polish(const std::array<double, 4>& c, double x)
{
  for (int i = 0; i < 3; ++i)
  {
    const double f = horner(c, x);
    const double df = (3.0 * c[3] * x + 2.0 * c[2]) * x + c[1];
    if (df == 0.0)
      break;
    const double next = x - f / df;
    if (!std::isfinite(next))
      break;
    if (std::abs(horner(c, next)) >= std::abs(f))
      break;
    x = next;
  }
  return x;
}

} // anonymous namespace

//==============================================================================
std::vector<double> cubic_real_roots(const std::array<double, 4>& c)
{
  std::vector<double> roots;
  const double scale = std::max(
    {std::abs(c[0]), std::abs(c[1]), std::abs(c[2]), std::abs(c[3])});
  if (scale == 0.0)
    return roots;

  const double eps = 1e-14 * scale;
  if (std::abs(c[3]) <= eps)
  {
    if (std::abs(c[2]) <= eps)
    {
      if (std::abs(c[1]) > eps)
        roots.push_back(-c[0] / c[1]);
      return roots;
    }

    const double disc = c[1] * c[1] - 4.0 * c[2] * c[0];
    if (disc < 0.0)
      return roots;
    // Numerically stable quadratic formula.
    const double q = -0.5 * (c[1] + std::copysign(std::sqrt(disc), c[1]));
    if (q != 0.0)
    {
      roots.push_back(q / c[2]);
      roots.push_back(c[0] / q);
    }
    else
    {
      roots.push_back(0.0);
    }
    std::sort(roots.begin(), roots.end());
    return roots;
  }

  // Depressed cubic t^3 + p t + q with x = t - a/3.
  const double a = c[2] / c[3];
  const double b = c[1] / c[3];
  const double d = c[0] / c[3];
  const double p = b - a * a / 3.0;
  const double q = 2.0 * a * a * a / 27.0 - a * b / 3.0 + d;
  const double shift = -a / 3.0;
  const double disc = q * q / 4.0 + p * p * p / 27.0;

  if (disc > 0.0)
  {
    const double s = std::sqrt(disc);
    roots.push_back(std::cbrt(-q / 2.0 + s) + std::cbrt(-q / 2.0 - s) + shift);
  }
  else if (p == 0.0)
  {
    roots.push_back(shift);
  }
  else
  {
    // Three real roots (possibly repeated): trigonometric form.
    const double m = 2.0 * std::sqrt(-p / 3.0);
    const double arg = std::clamp(3.0 * q / (p * m), -1.0, 1.0);
    const double theta = std::acos(arg) / 3.0;
    for (int k = 0; k < 3; ++k)
      roots.push_back(m * std::cos(theta - 2.0 * std::numbers::pi * k / 3.0) + shift);
  }

  for (double& r : roots)
    r = polish(c, r);
  std::sort(roots.begin(), roots.end());
  return roots;
}

} // namespace detail
} // namespace cavint
