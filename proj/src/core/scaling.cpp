#include "gridcast/core/scaling.hpp"

#include <stdexcept>

namespace gridcast::core {

namespace {

void scale_matrix(Eigen::MatrixXd& m, const Eigen::VectorXd& mins,
                  const Eigen::VectorXd& maxs) {
    for (int i = 0; i < m.rows(); ++i) {
        const double lo = mins(i), hi = maxs(i);
        if (hi > lo) {
            m.row(i) = (m.row(i).array() - lo) / (hi - lo);
        } else {
            m.row(i).setZero();
        }
    }
}

void unscale_matrix(Eigen::MatrixXd& m, const Eigen::VectorXd& mins,
                    const Eigen::VectorXd& maxs) {
    for (int i = 0; i < m.rows(); ++i) {
        const double lo = mins(i), hi = maxs(i);
        if (hi > lo) {
            m.row(i) = m.row(i).array() * (hi - lo) + lo;
        } else {
            m.row(i).setConstant(lo);
        }
    }
}

}  // namespace

ScalingSpec fit_minmax(const RegionalPanel& panel, int fit_begin, int fit_end) {
    if (fit_end <= fit_begin || fit_begin < 0 || fit_end > panel.T()) {
        throw std::invalid_argument("fit_minmax: empty or invalid fit range");
    }
    const int n = panel.n();
    const int d = panel.d();
    ScalingSpec spec;
    spec.channels = panel.channels;
    spec.channels.push_back("Load");
    spec.mins.resize(d + 1, n);
    spec.maxs.resize(d + 1, n);
    spec.fit_begin = fit_begin;
    spec.fit_end = fit_end;
    const int w = fit_end - fit_begin;
    for (int c = 0; c < d; ++c) {
        spec.mins.row(c) =
            panel.features[static_cast<size_t>(c)].middleCols(fit_begin, w).rowwise().minCoeff().transpose();
        spec.maxs.row(c) =
            panel.features[static_cast<size_t>(c)].middleCols(fit_begin, w).rowwise().maxCoeff().transpose();
    }
    spec.mins.row(d) = panel.loads.middleCols(fit_begin, w).rowwise().minCoeff().transpose();
    spec.maxs.row(d) = panel.loads.middleCols(fit_begin, w).rowwise().maxCoeff().transpose();
    return spec;
}

RegionalPanel apply_minmax(const RegionalPanel& panel, const ScalingSpec& spec) {
    if (static_cast<int>(spec.channels.size()) != panel.d() + 1) {
        throw std::invalid_argument("apply_minmax: spec/panel channel mismatch");
    }
    RegionalPanel out = panel;
    for (int c = 0; c < panel.d(); ++c) {
        scale_matrix(out.features[static_cast<size_t>(c)], spec.mins.row(c).transpose(),
                     spec.maxs.row(c).transpose());
    }
    out.loads = scale_loads(panel.loads, spec);
    return out;
}

RegionalPanel invert_minmax(const RegionalPanel& scaled, const ScalingSpec& spec) {
    if (static_cast<int>(spec.channels.size()) != scaled.d() + 1) {
        throw std::invalid_argument("invert_minmax: spec/panel channel mismatch");
    }
    RegionalPanel out = scaled;
    for (int c = 0; c < scaled.d(); ++c) {
        unscale_matrix(out.features[static_cast<size_t>(c)], spec.mins.row(c).transpose(),
                       spec.maxs.row(c).transpose());
    }
    out.loads = unscale_loads(scaled.loads, spec);
    return out;
}

Eigen::MatrixXd scale_loads(const Eigen::MatrixXd& loads, const ScalingSpec& spec) {
    const int d = static_cast<int>(spec.channels.size()) - 1;
    Eigen::MatrixXd out = loads;
    scale_matrix(out, spec.mins.row(d).transpose(), spec.maxs.row(d).transpose());
    return out;
}

Eigen::MatrixXd unscale_loads(const Eigen::MatrixXd& scaled, const ScalingSpec& spec) {
    const int d = static_cast<int>(spec.channels.size()) - 1;
    Eigen::MatrixXd out = scaled;
    unscale_matrix(out, spec.mins.row(d).transpose(), spec.maxs.row(d).transpose());
    return out;
}

}  // namespace gridcast::core
