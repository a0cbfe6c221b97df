#pragma once

#include <Eigen/Dense>
#include <functional>

#include "ferls/errors.hpp"

namespace ferls {

// Dense dynamic-size kernels. Everything in this library is desk-scale
// (k <= 8 bases, state dims <= 6), so plain double matrices are the right
// tool; stability is governed by the ridge term callers pass explicitly.
using Mat = Eigen::MatrixXd;
using Vec = Eigen::VectorXd;

using VectorField = std::function<Vec(const Vec&)>;

bool all_finite(const Mat& m);
bool all_finite(const Vec& v);

/// Solve A X = B for symmetric positive-definite A via Cholesky.
/// Throws NotPositiveDefinite if a pivot is <= 0 (caller must regularize),
/// ShapeMismatch on inconsistent dimensions or asymmetric input.
Mat solve_spd(const Mat& a, const Mat& b);
Vec solve_spd(const Mat& a, const Vec& b);

/// One classical 4th-order Runge-Kutta step of x' = field(x).
/// Throws NonFiniteState if the result has NaN/Inf entries.
Vec rk4_step(const VectorField& field, const Vec& x, double dt);

/// One explicit Euler step x + dt * field(x).
Vec euler_step(const VectorField& field, const Vec& x, double dt);

}  // namespace ferls
