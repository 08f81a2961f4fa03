#include "gridcast/spline/bspline.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gridcast::spline {

namespace {

// Interpolated empirical quantile (linear between order statistics).
double quantile(const std::vector<double>& sorted, double p) {
    const double idx = p * (static_cast<double>(sorted.size()) - 1.0);
    const size_t lo = static_cast<size_t>(std::floor(idx));
    const size_t hi = std::min(lo + 1, sorted.size() - 1);
    const double w = idx - static_cast<double>(lo);
    return (1.0 - w) * sorted[lo] + w * sorted[hi];
}

}  // namespace

SplineBasis::SplineBasis(std::vector<double> knots) : knots_(std::move(knots)) {
    if (knots_.size() < 2) throw std::invalid_argument("basis needs >= 2 knots");
    for (size_t i = 1; i < knots_.size(); ++i) {
        if (knots_[i] <= knots_[i - 1]) {
            throw std::invalid_argument("knots must be strictly increasing");
        }
    }
    // Clamped knot vector: boundary knots with multiplicity 4.
    extended_.clear();
    extended_.reserve(knots_.size() + 6);
    for (int i = 0; i < 3; ++i) extended_.push_back(knots_.front());
    extended_.insert(extended_.end(), knots_.begin(), knots_.end());
    for (int i = 0; i < 3; ++i) extended_.push_back(knots_.back());
}

void SplineBasis::basis_and_derivative(double x, Eigen::VectorXd& value,
                                       Eigen::VectorXd& deriv) const {
    const int p = 3;
    const int m = dim();
    value = Eigen::VectorXd::Zero(m);
    deriv = Eigen::VectorXd::Zero(m);

    // Span index: extended_[span] <= x < extended_[span+1], clamped so the
    // right boundary lands in the last non-empty span.
    int span = static_cast<int>(std::upper_bound(extended_.begin(), extended_.end(), x) -
                                extended_.begin()) -
               1;
    span = std::clamp(span, p, m - 1);

    // Basis functions and first derivatives at x (The NURBS Book, A2.3).
    double ndu[4][4];
    double left[4], right[4];
    ndu[0][0] = 1.0;
    for (int j = 1; j <= p; ++j) {
        left[j] = x - extended_[static_cast<size_t>(span + 1 - j)];
        right[j] = extended_[static_cast<size_t>(span + j)] - x;
        double saved = 0.0;
        for (int r = 0; r < j; ++r) {
            ndu[j][r] = right[r + 1] + left[j - r];
            const double temp = ndu[r][j - 1] / ndu[j][r];
            ndu[r][j] = saved + right[r + 1] * temp;
            saved = left[j - r] * temp;
        }
        ndu[j][j] = saved;
    }
    for (int j = 0; j <= p; ++j) {
        value(span - p + j) = ndu[j][p];
    }
    // First derivative from degree-2 functions.
    for (int j = 0; j <= p; ++j) {
        const int i = span - p + j;
        double der = 0.0;
        if (j > 0) {
            der += ndu[j - 1][p - 1] / ndu[p][j - 1];
        }
        if (j < p) {
            der -= ndu[j][p - 1] / ndu[p][j];
        }
        deriv(i) = p * der;
    }
}

Eigen::VectorXd SplineBasis::evaluate(double x) const {
    Eigen::VectorXd value, deriv;
    if (x < lo()) {
        basis_and_derivative(lo(), value, deriv);
        return value + (x - lo()) * deriv;
    }
    if (x > hi()) {
        basis_and_derivative(hi(), value, deriv);
        return value + (x - hi()) * deriv;
    }
    basis_and_derivative(x, value, deriv);
    return value;
}

Eigen::VectorXd SplineBasis::evaluate_derivative(double x) const {
    Eigen::VectorXd value, deriv;
    basis_and_derivative(std::clamp(x, lo(), hi()), value, deriv);
    return deriv;
}

Eigen::MatrixXd SplineBasis::design(const Eigen::VectorXd& x) const {
    Eigen::MatrixXd B(x.size(), dim());
    for (int i = 0; i < x.size(); ++i) {
        B.row(i) = evaluate(x(i)).transpose();
    }
    return B;
}

SplineBasis make_basis(const std::vector<double>& values, int k) {
    if (k < 4) throw std::invalid_argument("make_basis: need k >= 4 knots");
    std::vector<double> sorted = values;
    std::sort(sorted.begin(), sorted.end());
    std::vector<double> distinct = sorted;
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    if (static_cast<int>(distinct.size()) < k) {
        throw std::invalid_argument("make_basis: fewer than k distinct sample values");
    }
    std::vector<double> knots(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) {
        knots[static_cast<size_t>(i)] = quantile(sorted, static_cast<double>(i) / (k - 1));
    }
    // Heavily tied samples can collide quantile sites; fall back to the same
    // quantile grid over the distinct values, which is strictly increasing.
    bool strict = true;
    for (int i = 1; i < k; ++i) {
        if (knots[static_cast<size_t>(i)] <= knots[static_cast<size_t>(i - 1)]) strict = false;
    }
    if (!strict) {
        for (int i = 0; i < k; ++i) {
            knots[static_cast<size_t>(i)] =
                quantile(distinct, static_cast<double>(i) / (k - 1));
        }
    }
    return SplineBasis(knots);
}

SplineBasis make_basis(const Eigen::VectorXd& values, int k) {
    return make_basis(std::vector<double>(values.data(), values.data() + values.size()), k);
}

}  // namespace gridcast::spline
