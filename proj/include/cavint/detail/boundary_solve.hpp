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

#ifndef CAVINT__DETAIL__BOUNDARY_SOLVE_HPP
#define CAVINT__DETAIL__BOUNDARY_SOLVE_HPP

#include <Eigen/Dense>

#include <array>
#include <vector>

namespace cavint {
namespace detail {

struct LinearSolution
{
  Eigen::VectorXd x;

  /// 2-norm condition number of the system as given (before equilibration).
  double condition;
};

/// Solves a small square system after row/column equilibration. Throws
/// PlanningError when the system is numerically singular.
LinearSolution solve_boundary_system(
  const Eigen::MatrixXd& A,
  const Eigen::VectorXd& b);

/// Value of the r-th derivative of tau^k.
double monomial_derivative(int k, int r, double tau);

/// Real roots of c0 + c1 x + c2 x^2 + c3 x^3, ascending. Lower-degree
/// polynomials are handled when leading coefficients vanish.
std::vector<double> cubic_real_roots(const std::array<double, 4>& c);

} // namespace detail
} // namespace cavint

#endif // CAVINT__DETAIL__BOUNDARY_SOLVE_HPP
