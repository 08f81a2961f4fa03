#include "gridcast/graphs/weighted_graph.hpp"

#include <fstream>
#include <numeric>
#include <stdexcept>

#include "gridcast/core/csv.hpp"

namespace gridcast::graphs {

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(static_cast<size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] =
                parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            x = parent[static_cast<size_t>(x)];
        }
        return x;
    }
    void unite(int a, int b) { parent[static_cast<size_t>(find(a))] = find(b); }
};

}  // namespace

void WeightedGraph::validate() const {
    if (n < 1 || W.rows() != n || W.cols() != n) {
        throw std::invalid_argument("graph: W must be n x n with n >= 1");
    }
    if (!W.allFinite()) throw std::invalid_argument("graph: non-finite weight");
    if ((W.array() < 0.0).any()) throw std::invalid_argument("graph: negative weight");
    if (!W.isApprox(W.transpose(), 1e-12)) {
        throw std::invalid_argument("graph: W must be symmetric");
    }
}

bool WeightedGraph::connected() const {
    UnionFind uf(n);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (W(i, j) > 0.0) uf.unite(i, j);
        }
    }
    const int root = uf.find(0);
    for (int i = 1; i < n; ++i) {
        if (uf.find(i) != root) return false;
    }
    return true;
}

WeightedGraph make_graph(Eigen::MatrixXd W, bool self_loops) {
    WeightedGraph g;
    g.n = static_cast<int>(W.rows());
    g.W = std::move(W);
    g.self_loops = self_loops;
    g.validate();
    return g;
}

void save_graph_csv(const WeightedGraph& g, const std::vector<std::string>& region_ids,
                    const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << "self_loops," << (g.self_loops ? 1 : 0) << "\n";
    out << "Region";
    for (const auto& id : region_ids) out << "," << id;
    out << "\n";
    for (int i = 0; i < g.n; ++i) {
        out << region_ids[static_cast<size_t>(i)];
        for (int j = 0; j < g.n; ++j) out << "," << core::format_double(g.W(i, j));
        out << "\n";
    }
}

WeightedGraph load_graph_csv(const std::string& path, std::vector<std::string>* region_ids) {
    const auto rows = core::read_csv(path);
    if (rows.size() < 3) throw std::runtime_error("malformed graph CSV: " + path);
    if (rows[0].size() < 2 || rows[0][0] != "self_loops") {
        throw std::runtime_error("graph CSV missing self_loops header: " + path);
    }
    const bool self_loops = rows[0][1] == "1";
    const int n = static_cast<int>(rows[1].size()) - 1;
    if (region_ids) {
        region_ids->assign(rows[1].begin() + 1, rows[1].end());
    }
    Eigen::MatrixXd W(n, n);
    for (int i = 0; i < n; ++i) {
        const auto& row = rows[static_cast<size_t>(i) + 2];
        if (static_cast<int>(row.size()) != n + 1) {
            throw std::runtime_error("graph CSV row width mismatch: " + path);
        }
        for (int j = 0; j < n; ++j) {
            double v;
            if (!core::try_parse_double(row[static_cast<size_t>(j) + 1], v)) {
                throw std::runtime_error("graph CSV non-numeric entry: " + path);
            }
            W(i, j) = v;
        }
    }
    return make_graph(std::move(W), self_loops);
}

void save_graph_edges(const WeightedGraph& g, const std::vector<std::string>& region_ids,
                      const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << "src,dst,weight\n";
    for (int i = 0; i < g.n; ++i) {
        for (int j = i; j < g.n; ++j) {
            if (g.W(i, j) > 0.0) {
                out << region_ids[static_cast<size_t>(i)] << ","
                    << region_ids[static_cast<size_t>(j)] << ","
                    << core::format_double(g.W(i, j)) << "\n";
            }
        }
    }
}

}  // namespace gridcast::graphs
