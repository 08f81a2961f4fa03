#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "gridcast/graphs/weighted_graph.hpp"

namespace gridcast::graphs {

/// Bandwidth and threshold chosen by the kernel constructors.
struct KernelDiagnostics {
    double sigma = 0.0;
    double lambda = 0.0;
};

/// Gaussian kernel over pairwise haversine distances. The bandwidth is the
/// median of all pairwise distances; entries below lambda are zeroed. When
/// lambda is unset it is chosen as the largest threshold keeping the graph
/// connected (the bottleneck weight of a maximum spanning tree).
WeightedGraph geo_kernel_graph(const std::vector<std::pair<double, double>>& coords,
                               std::optional<double> lambda = std::nullopt,
                               KernelDiagnostics* diag = nullptr);

/// Same kernel + minimal-connectivity recipe applied to an arbitrary
/// symmetric distance matrix with zero diagonal.
WeightedGraph distances_to_graph(const Eigen::MatrixXd& D,
                                 std::optional<double> lambda = std::nullopt,
                                 KernelDiagnostics* diag = nullptr);

/// Entrywise convex combination; self_loops is the OR of the inputs.
WeightedGraph fuse_graphs(const std::vector<WeightedGraph>& graphs,
                          const std::vector<double>& weights);

WeightedGraph identity_graph(int n);

/// Largest threshold keeping edges >= lambda connected (max spanning tree
/// bottleneck weight over the off-diagonal entries of W).
double minimal_connectivity_threshold(const Eigen::MatrixXd& W);

}  // namespace gridcast::graphs
