#include "gridcast/spline/gam.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "gridcast/core/csv.hpp"

namespace gridcast::spline {

namespace {

const std::vector<std::string> kSmoothChannels = {"Temperature", "Instant", "Posan"};
const std::vector<std::string> kOffsetChannels = {
    "DayType0", "DayType1", "DayType2", "DayType3",  "DayType4",    "DayType5",
    "DayType6", "Weekend",  "Summer",   "Christmas", "Holiday_zone"};

int count_distinct(const Eigen::VectorXd& v) {
    std::set<double> s(v.data(), v.data() + v.size());
    return static_cast<int>(s.size());
}

}  // namespace

AdditiveModel fit_gam_baseline(const core::RegionalPanel& panel, int region,
                               const core::SplitSpec& split, const GamOptions& opts) {
    const int t0 = split.train_begin;
    const int len = split.train_size();
    if (len <= 0) throw std::invalid_argument("fit_gam_baseline: empty training range");

    const Eigen::VectorXd y = panel.loads.row(region).segment(t0, len).transpose();

    AdditiveModel model;

    // Collect design blocks: column 0 is the intercept.
    std::vector<Eigen::MatrixXd> blocks;
    blocks.push_back(Eigen::MatrixXd::Ones(len, 1));

    struct SmoothSlot {
        std::string channel;
        SplineBasis basis;
        int col = 0;
    };
    std::vector<SmoothSlot> smooth_slots;
    for (const auto& name : kSmoothChannels) {
        const int ci = panel.channel_index(name);
        if (ci < 0) continue;
        const Eigen::VectorXd x =
            panel.features[static_cast<size_t>(ci)].row(region).segment(t0, len).transpose();
        if (count_distinct(x) < opts.knots) continue;
        SmoothSlot slot;
        slot.channel = name;
        slot.basis = make_basis(x, opts.knots);
        blocks.push_back(slot.basis.design(x));
        smooth_slots.push_back(std::move(slot));
    }

    const int trend_ci = panel.channel_index("Trend");
    Eigen::VectorXd trend_z;
    if (trend_ci >= 0) {
        const Eigen::VectorXd tr = panel.features[static_cast<size_t>(trend_ci)]
                                       .row(region)
                                       .segment(t0, len)
                                       .transpose();
        model.has_trend = true;
        model.trend_center = tr.mean();
        model.trend_scale = std::max(1.0, tr.maxCoeff() - tr.minCoeff());
        trend_z = (tr.array() - model.trend_center) / model.trend_scale;
        blocks.push_back(trend_z);
    }

    std::vector<std::string> offset_channels;
    for (const auto& name : kOffsetChannels) {
        const int ci = panel.channel_index(name);
        if (ci < 0) continue;
        offset_channels.push_back(name);
        blocks.push_back(panel.features[static_cast<size_t>(ci)]
                             .row(region)
                             .segment(t0, len)
                             .transpose());
    }

    int total_cols = 0;
    for (const auto& b : blocks) total_cols += static_cast<int>(b.cols());
    Eigen::MatrixXd X(len, total_cols);
    int col = 0;
    for (const auto& b : blocks) {
        X.middleCols(col, static_cast<int>(b.cols())) = b;
        col += static_cast<int>(b.cols());
    }

    // Penalty: curvature on each smooth block, identifiability ridge on every
    // non-intercept column (the blocks are collinear by construction).
    Eigen::MatrixXd P = Eigen::MatrixXd::Zero(total_cols, total_cols);
    const double eps = opts.ident_ridge * len;
    for (int c = 1; c < total_cols; ++c) P(c, c) = eps;
    col = 1;
    for (auto& slot : smooth_slots) {
        const int m = slot.basis.dim();
        const Eigen::MatrixXd D = second_difference_matrix(m);
        P.block(col, col, m, m) += opts.smooth_ridge * (D.transpose() * D);
        slot.col = col;
        col += m;
    }

    Eigen::LDLT<Eigen::MatrixXd> ldlt(X.transpose() * X + P);
    Eigen::VectorXd beta = ldlt.solve(X.transpose() * y);
    if (ldlt.info() != Eigen::Success || !beta.allFinite()) {
        throw std::runtime_error("fit_gam_baseline: normal equations failed");
    }

    model.intercept = beta(0);
    for (const auto& slot : smooth_slots) {
        SplineModel sm;
        sm.basis = slot.basis;
        sm.coefficients = beta.segment(slot.col, slot.basis.dim());
        sm.ridge = opts.smooth_ridge;
        model.smooths.push_back({slot.channel, std::move(sm)});
    }
    col = 1;
    for (const auto& slot : smooth_slots) col += slot.basis.dim();
    if (model.has_trend) {
        model.trend_coef = beta(col);
        ++col;
    }
    for (const auto& name : offset_channels) {
        AdditiveModel::Offset off;
        off.channel = name;
        off.value = beta(col);
        const int ci = panel.channel_index(name);
        off.seen_in_fit = (panel.features[static_cast<size_t>(ci)]
                               .row(region)
                               .segment(t0, len)
                               .cwiseAbs()
                               .maxCoeff() > 0.0);
        if (!off.seen_in_fit) off.value = 0.0;
        model.offsets.push_back(off);
        ++col;
    }
    return model;
}

std::vector<std::pair<std::string, double>> gam_terms(const AdditiveModel& model,
                                                      const core::RegionalPanel& panel,
                                                      int region, int t) {
    std::vector<std::pair<std::string, double>> terms;
    terms.emplace_back("intercept", model.intercept);
    for (const auto& s : model.smooths) {
        const double x = panel.channel(s.channel)(region, t);
        terms.emplace_back(s.channel, predict_spline(s.spline, x));
    }
    if (model.has_trend) {
        const double tr = panel.channel("Trend")(region, t);
        terms.emplace_back("Trend",
                           model.trend_coef * (tr - model.trend_center) / model.trend_scale);
    }
    for (const auto& off : model.offsets) {
        const double v = panel.channel(off.channel)(region, t);
        if (v != 0.0 && !off.seen_in_fit) {
            static bool warned = false;
            if (!warned) {
                std::cerr << "warning: categorical level '" << off.channel
                          << "' unseen in training; using zero offset\n";
                warned = true;
            }
        }
        terms.emplace_back(off.channel, off.seen_in_fit ? off.value * v : 0.0);
    }
    return terms;
}

Eigen::VectorXd gam_predict(const AdditiveModel& model, const core::RegionalPanel& panel,
                            int region, int t_begin, int t_end) {
    Eigen::VectorXd out(t_end - t_begin);
    for (int t = t_begin; t < t_end; ++t) {
        double acc = 0.0;
        for (const auto& [name, value] : gam_terms(model, panel, region, t)) acc += value;
        out(t - t_begin) = acc;
    }
    return out;
}

std::vector<AdditiveModel> fit_gam_all_regions(const core::RegionalPanel& panel,
                                               const core::SplitSpec& split,
                                               const GamOptions& opts) {
    std::vector<AdditiveModel> models;
    models.reserve(static_cast<size_t>(panel.n()));
    for (int i = 0; i < panel.n(); ++i) {
        models.push_back(fit_gam_baseline(panel, i, split, opts));
    }
    return models;
}

Eigen::MatrixXd gam_predict_panel(const std::vector<AdditiveModel>& models,
                                  const core::RegionalPanel& panel, int t_begin,
                                  int t_end) {
    Eigen::MatrixXd out(panel.n(), t_end - t_begin);
    for (int i = 0; i < panel.n(); ++i) {
        out.row(i) =
            gam_predict(models[static_cast<size_t>(i)], panel, i, t_begin, t_end).transpose();
    }
    return out;
}

void save_additive_model(const AdditiveModel& model, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    using core::format_double;
    out << "gridcast-gam v1\n";
    out << "intercept " << format_double(model.intercept) << "\n";
    out << "trend " << (model.has_trend ? 1 : 0) << " " << format_double(model.trend_coef)
        << " " << format_double(model.trend_center) << " "
        << format_double(model.trend_scale) << "\n";
    out << "smooths " << model.smooths.size() << "\n";
    for (const auto& s : model.smooths) {
        out << "smooth " << s.channel << " " << s.spline.basis.knots().size() << " "
            << format_double(s.spline.ridge) << "\n";
        out << "knots";
        for (double v : s.spline.basis.knots()) out << " " << format_double(v);
        out << "\ncoefficients";
        for (int i = 0; i < s.spline.coefficients.size(); ++i) {
            out << " " << format_double(s.spline.coefficients(i));
        }
        out << "\n";
    }
    out << "offsets " << model.offsets.size() << "\n";
    for (const auto& off : model.offsets) {
        out << "offset " << off.channel << " " << format_double(off.value) << " "
            << (off.seen_in_fit ? 1 : 0) << "\n";
    }
}

AdditiveModel load_additive_model(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::string line;
    std::getline(in, line);
    if (line != "gridcast-gam v1") {
        throw std::runtime_error("unrecognized model format: " + line);
    }
    AdditiveModel model;
    std::string tag;
    in >> tag >> model.intercept;
    int has_trend;
    in >> tag >> has_trend >> model.trend_coef >> model.trend_center >> model.trend_scale;
    model.has_trend = has_trend != 0;
    size_t n_smooths;
    in >> tag >> n_smooths;
    for (size_t s = 0; s < n_smooths; ++s) {
        std::string channel;
        size_t n_knots;
        double ridge;
        in >> tag >> channel >> n_knots >> ridge;
        in >> tag;  // "knots"
        std::vector<double> knots(n_knots);
        for (auto& v : knots) in >> v;
        in >> tag;  // "coefficients"
        SplineModel sm;
        sm.basis = SplineBasis(knots);
        sm.ridge = ridge;
        sm.coefficients.resize(sm.basis.dim());
        for (int i = 0; i < sm.coefficients.size(); ++i) in >> sm.coefficients(i);
        model.smooths.push_back({channel, std::move(sm)});
    }
    size_t n_offsets;
    in >> tag >> n_offsets;
    for (size_t o = 0; o < n_offsets; ++o) {
        AdditiveModel::Offset off;
        int seen;
        in >> tag >> off.channel >> off.value >> seen;
        off.seen_in_fit = seen != 0;
        model.offsets.push_back(off);
    }
    if (!in) throw std::runtime_error("truncated model file: " + path);
    return model;
}

}  // namespace gridcast::spline
