#pragma once

#include <Eigen/Dense>
#include <vector>

namespace gridcast::graphs {

/// Classic O(len_a * len_b) dynamic-time-warping distance with squared local
/// cost and full (unwindowed) monotone alignment. Throws on empty input.
double dtw_exact(const Eigen::VectorXd& a, const Eigen::VectorXd& b);

/// FastDTW approximation: recursive halving, projected-path refinement with
/// the given radius. Never below dtw_exact; equal to it when the radius
/// reaches the series length (the base case takes over, size 2*radius + 2).
double fastdtw(const Eigen::VectorXd& a, const Eigen::VectorXd& b, int radius);

/// Pairwise fastdtw distances between the rows of `signals`.
Eigen::MatrixXd dtw_distance_matrix(const Eigen::MatrixXd& signals, int radius);

}  // namespace gridcast::graphs
