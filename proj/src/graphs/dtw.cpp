#include "gridcast/graphs/dtw.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <stdexcept>

namespace gridcast::graphs {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Window {
    // Inclusive column range per row; rows outside have empty ranges.
    std::vector<int> lo, hi;
};

Window full_window(int rows, int cols) {
    Window w;
    w.lo.assign(static_cast<size_t>(rows), 0);
    w.hi.assign(static_cast<size_t>(rows), cols - 1);
    return w;
}

// Windowed DP. Returns the alignment cost and, if `path` is non-null, the
// optimal monotone path as (row, col) pairs from (0,0) to (rows-1, cols-1).
double dtw_window(const Eigen::VectorXd& a, const Eigen::VectorXd& b, const Window& win,
                  std::vector<std::pair<int, int>>* path) {
    const int rows = static_cast<int>(a.size());
    const int cols = static_cast<int>(b.size());
    std::vector<std::vector<double>> cost(static_cast<size_t>(rows));
    std::vector<std::vector<int8_t>> move(static_cast<size_t>(rows));
    for (int i = 0; i < rows; ++i) {
        const int width = win.hi[static_cast<size_t>(i)] - win.lo[static_cast<size_t>(i)] + 1;
        cost[static_cast<size_t>(i)].assign(static_cast<size_t>(std::max(width, 0)), kInf);
        move[static_cast<size_t>(i)].assign(static_cast<size_t>(std::max(width, 0)), -1);
    }
    auto at = [&](int i, int j) -> double {
        if (i < 0 || j < 0) return kInf;
        if (j < win.lo[static_cast<size_t>(i)] || j > win.hi[static_cast<size_t>(i)]) {
            return kInf;
        }
        return cost[static_cast<size_t>(i)][static_cast<size_t>(j - win.lo[static_cast<size_t>(i)])];
    };
    for (int i = 0; i < rows; ++i) {
        for (int j = win.lo[static_cast<size_t>(i)]; j <= win.hi[static_cast<size_t>(i)]; ++j) {
            const double d = a(i) - b(j);
            const double local = d * d;
            if (i == 0 && j == 0) {
                cost[0][static_cast<size_t>(j - win.lo[0])] = local;
                move[0][static_cast<size_t>(j - win.lo[0])] = 0;
                continue;
            }
            const double diag = at(i - 1, j - 1);
            const double up = at(i - 1, j);
            const double left = at(i, j - 1);
            double best = diag;
            int8_t m = 1;
            if (up < best) {
                best = up;
                m = 2;
            }
            if (left < best) {
                best = left;
                m = 3;
            }
            if (best == kInf) continue;  // unreachable window cell
            cost[static_cast<size_t>(i)][static_cast<size_t>(j - win.lo[static_cast<size_t>(i)])] =
                best + local;
            move[static_cast<size_t>(i)][static_cast<size_t>(j - win.lo[static_cast<size_t>(i)])] = m;
        }
    }
    const double total = at(rows - 1, cols - 1);
    if (total == kInf) throw std::logic_error("dtw: window disconnected endpoints");
    if (path) {
        path->clear();
        int i = rows - 1, j = cols - 1;
        while (true) {
            path->push_back({i, j});
            const int8_t m =
                move[static_cast<size_t>(i)][static_cast<size_t>(j - win.lo[static_cast<size_t>(i)])];
            if (m == 0) break;
            if (m == 1) {
                --i;
                --j;
            } else if (m == 2) {
                --i;
            } else {
                --j;
            }
        }
        std::reverse(path->begin(), path->end());
    }
    return total;
}

Eigen::VectorXd reduce_by_half(const Eigen::VectorXd& x) {
    const int n = static_cast<int>(x.size());
    const int half = (n + 1) / 2;
    Eigen::VectorXd out(half);
    for (int i = 0; i < n / 2; ++i) out(i) = 0.5 * (x(2 * i) + x(2 * i + 1));
    if (n % 2 == 1) out(half - 1) = x(n - 1);
    return out;
}

// Projects a coarse path to fine resolution and expands it by `radius`.
Window expand_window(const std::vector<std::pair<int, int>>& coarse_path, int rows,
                     int cols, int radius) {
    Window win;
    win.lo.assign(static_cast<size_t>(rows), cols);
    win.hi.assign(static_cast<size_t>(rows), -1);
    auto mark = [&](int i, int j) {
        if (i < 0 || i >= rows) return;
        const int jc = std::clamp(j, 0, cols - 1);
        win.lo[static_cast<size_t>(i)] = std::min(win.lo[static_cast<size_t>(i)], jc);
        win.hi[static_cast<size_t>(i)] = std::max(win.hi[static_cast<size_t>(i)], jc);
    };
    for (const auto& [ci, cj] : coarse_path) {
        for (int di = 0; di <= 1; ++di) {
            for (int dj = 0; dj <= 1; ++dj) {
                const int i = 2 * ci + di;
                const int j = 2 * cj + dj;
                mark(i - radius, j - radius);
                mark(i - radius, j + radius);
                mark(i + radius, j - radius);
                mark(i + radius, j + radius);
            }
        }
    }
    // Rows swept by the radius expansion inherit the union of the column
    // ranges of the marking corners; fill any row the corners skipped.
    for (int i = 1; i < rows; ++i) {
        if (win.hi[static_cast<size_t>(i)] < 0) {
            win.lo[static_cast<size_t>(i)] = win.lo[static_cast<size_t>(i - 1)];
            win.hi[static_cast<size_t>(i)] = win.hi[static_cast<size_t>(i - 1)];
        }
    }
    for (int i = rows - 2; i >= 0; --i) {
        if (win.hi[static_cast<size_t>(i)] < 0) {
            win.lo[static_cast<size_t>(i)] = win.lo[static_cast<size_t>(i + 1)];
            win.hi[static_cast<size_t>(i)] = win.hi[static_cast<size_t>(i + 1)];
        }
    }
    // Monotone envelopes keep every projected cell reachable from (0,0).
    for (int i = 1; i < rows; ++i) {
        win.lo[static_cast<size_t>(i)] =
            std::max(win.lo[static_cast<size_t>(i)], win.lo[static_cast<size_t>(i - 1)]);
        win.hi[static_cast<size_t>(i)] =
            std::max(win.hi[static_cast<size_t>(i)], win.hi[static_cast<size_t>(i - 1)]);
    }
    win.lo[0] = 0;
    win.hi[static_cast<size_t>(rows - 1)] = cols - 1;
    for (int i = 0; i < rows; ++i) {
        win.lo[static_cast<size_t>(i)] = std::clamp(win.lo[static_cast<size_t>(i)], 0, cols - 1);
        win.hi[static_cast<size_t>(i)] =
            std::clamp(win.hi[static_cast<size_t>(i)], win.lo[static_cast<size_t>(i)], cols - 1);
    }
    return win;
}

double fastdtw_impl(const Eigen::VectorXd& a, const Eigen::VectorXd& b, int radius,
                    std::vector<std::pair<int, int>>* path) {
    const int min_size = 2 * radius + 2;
    if (a.size() <= min_size || b.size() <= min_size) {
        return dtw_window(a, b, full_window(static_cast<int>(a.size()),
                                            static_cast<int>(b.size())),
                          path);
    }
    const Eigen::VectorXd a2 = reduce_by_half(a);
    const Eigen::VectorXd b2 = reduce_by_half(b);
    std::vector<std::pair<int, int>> coarse;
    fastdtw_impl(a2, b2, radius, &coarse);
    const Window win = expand_window(coarse, static_cast<int>(a.size()),
                                     static_cast<int>(b.size()), radius);
    return dtw_window(a, b, win, path);
}

}  // namespace

double dtw_exact(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
    if (a.size() == 0 || b.size() == 0) throw std::invalid_argument("dtw: empty series");
    return dtw_window(a, b, full_window(static_cast<int>(a.size()), static_cast<int>(b.size())),
                      nullptr);
}

double fastdtw(const Eigen::VectorXd& a, const Eigen::VectorXd& b, int radius) {
    if (a.size() == 0 || b.size() == 0) throw std::invalid_argument("fastdtw: empty series");
    if (radius < 0) throw std::invalid_argument("fastdtw: radius must be >= 0");
    return fastdtw_impl(a, b, radius, nullptr);
}

Eigen::MatrixXd dtw_distance_matrix(const Eigen::MatrixXd& signals, int radius) {
    const int n = static_cast<int>(signals.rows());
    Eigen::MatrixXd D = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const double d =
                fastdtw(signals.row(i).transpose(), signals.row(j).transpose(), radius);
            D(i, j) = D(j, i) = d;
        }
    }
    return D;
}

}  // namespace gridcast::graphs
