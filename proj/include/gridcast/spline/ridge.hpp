#pragma once

#include <Eigen/Dense>

#include "gridcast/spline/bspline.hpp"

namespace gridcast::spline {

/// Spline with ridge-fitted coefficients. Prediction is
/// intercept + sum_k coefficients[k] * B_k(x).
struct SplineModel {
    SplineBasis basis;
    Eigen::VectorXd coefficients;
    double ridge = 0.0;
    double intercept = 0.0;
};

/// Minimizes ||y - B beta||^2 + ridge * ||D2 beta||^2 where D2 takes second
/// differences of the coefficient vector (discretized curvature control).
/// Throws std::invalid_argument when the system is singular at ridge = 0.
SplineModel fit_spline_ridge(const Eigen::VectorXd& x, const Eigen::VectorXd& y,
                             const SplineBasis& basis, double ridge);

double predict_spline(const SplineModel& model, double x);
Eigen::VectorXd predict_spline(const SplineModel& model, const Eigen::VectorXd& x);

/// Second-difference penalty matrix ((m-2) x m) for an m-dim basis.
Eigen::MatrixXd second_difference_matrix(int m);

}  // namespace gridcast::spline
