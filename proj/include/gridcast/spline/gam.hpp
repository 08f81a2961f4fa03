#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "gridcast/core/panel.hpp"
#include "gridcast/core/split.hpp"
#include "gridcast/spline/ridge.hpp"

namespace gridcast::spline {

struct GamOptions {
    int knots = 10;             // per smooth effect
    double smooth_ridge = 1e-3; // second-difference penalty weight
    double ident_ridge = 1e-8;  // per-sample identifiability ridge on non-intercept terms
};

/// Additive per-region model: intercept + spline effects on the continuous
/// channels + linear trend + constant offsets on the categorical channels.
/// Exactly additive; each term's contribution is exposed separately.
struct AdditiveModel {
    double intercept = 0.0;

    struct Smooth {
        std::string channel;
        SplineModel spline;  // intercept 0; effect value = predict_spline
    };
    std::vector<Smooth> smooths;

    bool has_trend = false;
    double trend_coef = 0.0;
    double trend_center = 0.0;
    double trend_scale = 1.0;

    struct Offset {
        std::string channel;
        double value = 0.0;
        bool seen_in_fit = false;
    };
    std::vector<Offset> offsets;
};

/// Fits the additive model for one region on the train range of `split`.
/// Smooth effects: Temperature, Instant, Posan (those present with enough
/// distinct values); trend on the Trend channel; offsets on DayType0..6,
/// Weekend, Summer, Christmas and Holiday_zone.
AdditiveModel fit_gam_baseline(const core::RegionalPanel& panel, int region,
                               const core::SplitSpec& split,
                               const GamOptions& opts = {});

/// Predictions for timesteps [t_begin, t_end).
Eigen::VectorXd gam_predict(const AdditiveModel& model, const core::RegionalPanel& panel,
                            int region, int t_begin, int t_end);

/// Decomposed prediction at one timestep: pairs (term name, contribution).
/// The intercept appears under the name "intercept".
std::vector<std::pair<std::string, double>> gam_terms(const AdditiveModel& model,
                                                      const core::RegionalPanel& panel,
                                                      int region, int t);

/// One model per region; national forecast is the regional sum.
std::vector<AdditiveModel> fit_gam_all_regions(const core::RegionalPanel& panel,
                                               const core::SplitSpec& split,
                                               const GamOptions& opts = {});
Eigen::MatrixXd gam_predict_panel(const std::vector<AdditiveModel>& models,
                                  const core::RegionalPanel& panel, int t_begin,
                                  int t_end);

void save_additive_model(const AdditiveModel& model, const std::string& path);
AdditiveModel load_additive_model(const std::string& path);

}  // namespace gridcast::spline
