#include "gridcast/core/metrics.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace gridcast::core {

namespace {
constexpr double kEarthRadiusKm = 6371.0;

void check_shapes(const Eigen::MatrixXd& y, const Eigen::MatrixXd& yhat) {
    if (y.rows() != yhat.rows() || y.cols() != yhat.cols()) {
        throw std::invalid_argument("metric shape mismatch");
    }
    if (y.size() == 0) throw std::invalid_argument("empty metric input");
}
}  // namespace

double national_mape(const Eigen::MatrixXd& y, const Eigen::MatrixXd& yhat) {
    check_shapes(y, yhat);
    const int T = static_cast<int>(y.cols());
    double acc = 0.0;
    for (int t = 0; t < T; ++t) {
        const double national = y.col(t).sum();
        if (national == 0.0) {
            throw std::invalid_argument("zero national load at t=" + std::to_string(t));
        }
        acc += std::abs((y.col(t).sum() - yhat.col(t).sum()) / national);
    }
    return acc / T * 100.0;
}

double national_rmse(const Eigen::MatrixXd& y, const Eigen::MatrixXd& yhat) {
    check_shapes(y, yhat);
    const int T = static_cast<int>(y.cols());
    double acc = 0.0;
    for (int t = 0; t < T; ++t) {
        const double r = y.col(t).sum() - yhat.col(t).sum();
        acc += r * r;
    }
    return std::sqrt(acc / T);
}

Eigen::VectorXd regional_rmse(const Eigen::MatrixXd& y, const Eigen::MatrixXd& yhat) {
    check_shapes(y, yhat);
    return ((y - yhat).array().square().rowwise().mean()).sqrt().matrix();
}

double haversine_km(double lat_a, double lon_a, double lat_b, double lon_b) {
    const double deg = std::numbers::pi / 180.0;
    const double phi1 = lat_a * deg, phi2 = lat_b * deg;
    const double dphi = (lat_b - lat_a) * deg;
    const double dlam = (lon_b - lon_a) * deg;
    const double s1 = std::sin(dphi / 2.0), s2 = std::sin(dlam / 2.0);
    const double h = s1 * s1 + std::cos(phi1) * std::cos(phi2) * s2 * s2;
    return 2.0 * kEarthRadiusKm * std::asin(std::min(1.0, std::sqrt(h)));
}

}  // namespace gridcast::core
