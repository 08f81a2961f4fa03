#include "gridcast/spline/ridge.hpp"

#include <stdexcept>

namespace gridcast::spline {

Eigen::MatrixXd second_difference_matrix(int m) {
    Eigen::MatrixXd D = Eigen::MatrixXd::Zero(std::max(0, m - 2), m);
    for (int i = 0; i + 2 < m; ++i) {
        D(i, i) = 1.0;
        D(i, i + 1) = -2.0;
        D(i, i + 2) = 1.0;
    }
    return D;
}

SplineModel fit_spline_ridge(const Eigen::VectorXd& x, const Eigen::VectorXd& y,
                             const SplineBasis& basis, double ridge) {
    if (x.size() != y.size()) throw std::invalid_argument("fit_spline_ridge: x/y size");
    if (x.size() < basis.dim()) {
        throw std::invalid_argument("fit_spline_ridge: need at least dim(basis) samples");
    }
    if (ridge < 0.0) throw std::invalid_argument("fit_spline_ridge: ridge must be >= 0");

    const Eigen::MatrixXd B = basis.design(x);
    const int m = basis.dim();

    if (ridge == 0.0) {
        Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(B);
        if (qr.rank() < m) {
            throw std::invalid_argument(
                "fit_spline_ridge: singular system at ridge = 0 (collinear basis "
                "columns); use ridge > 0");
        }
        SplineModel model{basis, qr.solve(y), 0.0, 0.0};
        return model;
    }

    const Eigen::MatrixXd D = second_difference_matrix(m);
    const Eigen::MatrixXd A = B.transpose() * B + ridge * (D.transpose() * D);
    Eigen::LDLT<Eigen::MatrixXd> ldlt(A);
    Eigen::VectorXd beta = ldlt.solve(B.transpose() * y);
    if (ldlt.info() != Eigen::Success || !beta.allFinite()) {
        throw std::invalid_argument("fit_spline_ridge: normal equations failed");
    }
    return SplineModel{basis, std::move(beta), ridge, 0.0};
}

double predict_spline(const SplineModel& model, double x) {
    return model.intercept + model.basis.evaluate(x).dot(model.coefficients);
}

Eigen::VectorXd predict_spline(const SplineModel& model, const Eigen::VectorXd& x) {
    Eigen::VectorXd out(x.size());
    for (int i = 0; i < x.size(); ++i) out(i) = predict_spline(model, x(i));
    return out;
}

}  // namespace gridcast::spline
