#pragma once

#include <Eigen/Dense>
#include <vector>

namespace gridcast::spline {

/// Cubic B-spline basis on a clamped knot vector. The `knots` are the k
/// distinct placement sites (empirical quantiles); the basis dimension is
/// k + 2. Outside [knots.front(), knots.back()] every basis function is
/// continued linearly, so spline evaluations extrapolate linearly.
class SplineBasis {
  public:
    SplineBasis() = default;
    explicit SplineBasis(std::vector<double> knots);

    int dim() const { return static_cast<int>(knots_.size()) + 2; }
    const std::vector<double>& knots() const { return knots_; }
    double lo() const { return knots_.front(); }
    double hi() const { return knots_.back(); }

    /// All basis function values at x (length dim, at most 4 nonzero inside
    /// the knot range).
    Eigen::VectorXd evaluate(double x) const;
    Eigen::VectorXd evaluate_derivative(double x) const;

    /// N x dim design matrix.
    Eigen::MatrixXd design(const Eigen::VectorXd& x) const;

  private:
    void basis_and_derivative(double x, Eigen::VectorXd& value,
                              Eigen::VectorXd& deriv) const;

    std::vector<double> knots_;     // k sites, strictly increasing
    std::vector<double> extended_;  // clamped knot vector, k + 6 entries
};

/// Knots at k equally spaced empirical quantiles of `values`.
/// Requires k >= 4 and at least k distinct values.
SplineBasis make_basis(const std::vector<double>& values, int k);
SplineBasis make_basis(const Eigen::VectorXd& values, int k);

}  // namespace gridcast::spline
