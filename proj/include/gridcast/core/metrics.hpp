#pragma once

#include <Eigen/Dense>

namespace gridcast::core {

/// National MAPE in percent: residuals are summed across regions per
/// timestep before normalizing by the national load.
double national_mape(const Eigen::MatrixXd& y, const Eigen::MatrixXd& yhat);

/// National RMSE in MW: per-timestep residuals are summed across regions
/// before squaring. It is a national-sum metric, not a per-region one.
double national_rmse(const Eigen::MatrixXd& y, const Eigen::MatrixXd& yhat);

/// Per-region RMSE diagnostic (length n vector).
Eigen::VectorXd regional_rmse(const Eigen::MatrixXd& y, const Eigen::MatrixXd& yhat);

/// Great-circle distance in km (haversine, Earth radius 6371.0 km).
/// Coordinates in degrees.
double haversine_km(double lat_a, double lon_a, double lat_b, double lon_b);

}  // namespace gridcast::core
