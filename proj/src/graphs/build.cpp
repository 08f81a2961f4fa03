#include "gridcast/graphs/build.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "gridcast/core/metrics.hpp"

namespace gridcast::graphs {

namespace {

double median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const size_t m = v.size();
    if (m == 0) throw std::invalid_argument("median of empty set");
    return m % 2 == 1 ? v[m / 2] : 0.5 * (v[m / 2 - 1] + v[m / 2]);
}

// Kernel + threshold recipe shared by the geodesic and signal-distance graphs.
WeightedGraph kernel_threshold_graph(const Eigen::MatrixXd& D,
                                     std::optional<double> lambda,
                                     KernelDiagnostics* diag) {
    const int n = static_cast<int>(D.rows());
    std::vector<double> dists;
    dists.reserve(static_cast<size_t>(n) * (static_cast<size_t>(n) - 1) / 2);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) dists.push_back(D(i, j));
    }
    const double sigma = median(dists);
    if (sigma <= 0.0) {
        throw std::invalid_argument("kernel graph: zero bandwidth (coincident points)");
    }

    Eigen::MatrixXd W(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            W(i, j) = std::exp(-D(i, j) * D(i, j) / (sigma * sigma));
        }
    }

    const double lam = lambda ? *lambda : minimal_connectivity_threshold(W);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i != j && W(i, j) < lam) W(i, j) = 0.0;
        }
    }
    if (diag) {
        diag->sigma = sigma;
        diag->lambda = lam;
    }
    return make_graph(std::move(W), /*self_loops=*/true);
}

}  // namespace

double minimal_connectivity_threshold(const Eigen::MatrixXd& W) {
    // Prim's maximum spanning tree; the bottleneck (smallest tree edge) is the
    // largest lambda at which thresholding keeps the graph connected.
    const int n = static_cast<int>(W.rows());
    if (n < 2) return 0.0;
    std::vector<bool> in_tree(static_cast<size_t>(n), false);
    std::vector<double> best(static_cast<size_t>(n), -1.0);
    in_tree[0] = true;
    for (int j = 1; j < n; ++j) best[static_cast<size_t>(j)] = W(0, j);
    double bottleneck = std::numeric_limits<double>::infinity();
    for (int step = 1; step < n; ++step) {
        int pick = -1;
        for (int j = 0; j < n; ++j) {
            if (!in_tree[static_cast<size_t>(j)] &&
                (pick < 0 || best[static_cast<size_t>(j)] > best[static_cast<size_t>(pick)])) {
                pick = j;
            }
        }
        bottleneck = std::min(bottleneck, best[static_cast<size_t>(pick)]);
        in_tree[static_cast<size_t>(pick)] = true;
        for (int j = 0; j < n; ++j) {
            if (!in_tree[static_cast<size_t>(j)]) {
                best[static_cast<size_t>(j)] =
                    std::max(best[static_cast<size_t>(j)], W(pick, j));
            }
        }
    }
    return bottleneck;
}

WeightedGraph geo_kernel_graph(const std::vector<std::pair<double, double>>& coords,
                               std::optional<double> lambda, KernelDiagnostics* diag) {
    const int n = static_cast<int>(coords.size());
    if (n < 2) throw std::invalid_argument("geo_kernel_graph: need n >= 2");
    Eigen::MatrixXd D = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const double d =
                core::haversine_km(coords[static_cast<size_t>(i)].first,
                                   coords[static_cast<size_t>(i)].second,
                                   coords[static_cast<size_t>(j)].first,
                                   coords[static_cast<size_t>(j)].second);
            D(i, j) = D(j, i) = d;
        }
    }
    return kernel_threshold_graph(D, lambda, diag);
}

WeightedGraph distances_to_graph(const Eigen::MatrixXd& D, std::optional<double> lambda,
                                 KernelDiagnostics* diag) {
    const int n = static_cast<int>(D.rows());
    if (n < 2 || D.cols() != n) throw std::invalid_argument("distances_to_graph: bad shape");
    if (!D.isApprox(D.transpose(), 1e-12)) {
        throw std::invalid_argument("distances_to_graph: D must be symmetric");
    }
    if (D.diagonal().cwiseAbs().maxCoeff() > 0.0) {
        throw std::invalid_argument("distances_to_graph: D must have zero diagonal");
    }
    if ((D.array() < 0.0).any()) {
        throw std::invalid_argument("distances_to_graph: negative distance");
    }
    if (D.maxCoeff() <= 0.0) {
        throw std::invalid_argument("distances_to_graph: all-zero distance matrix");
    }
    return kernel_threshold_graph(D, lambda, diag);
}

WeightedGraph fuse_graphs(const std::vector<WeightedGraph>& graphs,
                          const std::vector<double>& weights) {
    if (graphs.empty() || graphs.size() != weights.size()) {
        throw std::invalid_argument("fuse_graphs: need matching graphs and weights");
    }
    double sum = 0.0;
    for (double w : weights) {
        if (w < 0.0) throw std::invalid_argument("fuse_graphs: negative weight");
        sum += w;
    }
    if (std::abs(sum - 1.0) > 1e-9) {
        throw std::invalid_argument("fuse_graphs: weights must sum to 1");
    }
    const int n = graphs[0].n;
    Eigen::MatrixXd W = Eigen::MatrixXd::Zero(n, n);
    bool self_loops = false;
    for (size_t k = 0; k < graphs.size(); ++k) {
        if (graphs[k].n != n) throw std::invalid_argument("fuse_graphs: node count mismatch");
        W += weights[k] * graphs[k].W;
        self_loops = self_loops || graphs[k].self_loops;
    }
    return make_graph(std::move(W), self_loops);
}

WeightedGraph identity_graph(int n) {
    if (n < 1) throw std::invalid_argument("identity_graph: need n >= 1");
    return make_graph(Eigen::MatrixXd::Identity(n, n), /*self_loops=*/true);
}

}  // namespace gridcast::graphs
