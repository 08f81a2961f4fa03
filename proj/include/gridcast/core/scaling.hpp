#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "gridcast/core/panel.hpp"

namespace gridcast::core {

/// Per-channel, per-region min-max statistics fitted on a stated index range.
/// The load matrix takes part under the reserved channel name "Load".
struct ScalingSpec {
    std::vector<std::string> channels;  // d+1 names, last is "Load"
    Eigen::MatrixXd mins;               // (d+1) x n
    Eigen::MatrixXd maxs;               // (d+1) x n
    int fit_begin = 0;                  // fitted index range [fit_begin, fit_end)
    int fit_end = 0;
};

/// Fits min/max per (channel, region) on timesteps [fit_begin, fit_end).
/// Throws std::invalid_argument on an empty range.
ScalingSpec fit_minmax(const RegionalPanel& panel, int fit_begin, int fit_end);

/// Maps every channel and the load to [0,1] on the fitted range. A degenerate
/// channel (max == min) maps to constant 0. Values outside the fitted min/max
/// scale affinely and may leave [0,1].
RegionalPanel apply_minmax(const RegionalPanel& panel, const ScalingSpec& spec);

RegionalPanel invert_minmax(const RegionalPanel& scaled, const ScalingSpec& spec);

/// Scaling of a bare load matrix (n x T) with the spec's "Load" row.
Eigen::MatrixXd scale_loads(const Eigen::MatrixXd& loads, const ScalingSpec& spec);
Eigen::MatrixXd unscale_loads(const Eigen::MatrixXd& scaled, const ScalingSpec& spec);

}  // namespace gridcast::core
