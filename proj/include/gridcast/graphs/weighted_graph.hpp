#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

namespace gridcast::graphs {

/// Symmetric non-negative weight matrix over n regions. Kernel-built graphs
/// carry W_ii = 1 (zero self-distance); learned Laplacian graphs carry a zero
/// diagonal. The `self_loops` flag records which convention applies.
struct WeightedGraph {
    int n = 0;
    Eigen::MatrixXd W;
    bool self_loops = false;

    /// Throws std::invalid_argument unless W is symmetric, non-negative,
    /// finite and n x n.
    void validate() const;

    /// Connectivity over edges with weight > 0 (union-find).
    bool connected() const;
};

WeightedGraph make_graph(Eigen::MatrixXd W, bool self_loops);

/// Dense CSV with region-id header; round-trips at 17 significant digits.
void save_graph_csv(const WeightedGraph& g, const std::vector<std::string>& region_ids,
                    const std::string& path);
WeightedGraph load_graph_csv(const std::string& path,
                             std::vector<std::string>* region_ids = nullptr);

/// Edge list `src,dst,weight` (upper triangle incl. diagonal, nonzero only).
void save_graph_edges(const WeightedGraph& g, const std::vector<std::string>& region_ids,
                      const std::string& path);

}  // namespace gridcast::graphs
