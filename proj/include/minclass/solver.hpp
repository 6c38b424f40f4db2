#pragma once

#include <cstdint>
#include <vector>

#include "minclass/types.hpp"

namespace minclass {

/// Penalty of the objective
///
///     (1/n)||y - X b||^2 + lambda1 * sum_j w_j |b_j| + lambda2 * ||b||^2.
///
/// weights is empty for all-ones. The (lambda, alpha) parameterization maps
/// to lambda1 = lambda*alpha, lambda2 = lambda*(1-alpha).
struct PenaltySpec {
    double lambda1 = 0.0;
    double lambda2 = 0.0;
    Eigen::VectorXd weights;

    static PenaltySpec lasso(double lambda);
    static PenaltySpec weighted_lasso(double lambda, Eigen::VectorXd weights);
    static PenaltySpec elastic_net(double lambda, double alpha);

    void validate(Eigen::Index p) const;
    double weight(Eigen::Index j) const {
        return weights.size() == 0 ? 1.0 : weights[j];
    }
};

struct SolveOptions {
    double tol = 1e-7;       // max per-sweep coefficient change
    int max_iter = 10000;    // sweep budget
    double kkt_tol = 1e-6;   // stationarity residual accepted at convergence
    bool active_set = true;  // sweep nonzeros between verification passes
    bool track_objective = false;
};

struct SparseFit {
    Eigen::VectorXd coefficients;
    Model support;  // indices of exactly nonzero coefficients
    double objective = 0.0;
    int iterations = 0;  // coordinate sweeps performed
    bool converged = false;
    std::vector<double> objective_trace;  // filled when track_objective
};

/// Cyclic coordinate descent with closed-form soft-threshold updates. The
/// update for coordinate j with partial residual r is
///
///     b_j <- soft(x_j.r / n + (||x_j||^2/n) b_j, lambda1*w_j/2)
///            / (||x_j||^2/n + lambda2).
///
/// Sweeps run until the largest coefficient change in a full pass is below
/// tol and the KKT residual is below kkt_tol; a fit that exhausts max_iter
/// is returned with converged=false rather than thrown.
SparseFit solve_penalized(const Eigen::MatrixXd& x, const Eigen::VectorXd& y,
                          const PenaltySpec& penalty,
                          const Eigen::VectorXd* init = nullptr,
                          const SolveOptions& opts = {});
SparseFit solve_penalized(const Dataset& data, const PenaltySpec& penalty,
                          const Eigen::VectorXd* init = nullptr,
                          const SolveOptions& opts = {});

/// Weighted Lasso giving discount delta to the penalty of every predictor
/// in s_plus: w_j = delta for j in s_plus, 1 elsewhere. delta = 0 leaves
/// those predictors unpenalized; delta = 1 is the plain Lasso.
SparseFit reduced_penalty_lasso(const Dataset& data, double lambda,
                                const Model& s_plus, double delta,
                                const Eigen::VectorXd* init = nullptr,
                                const SolveOptions& opts = {});

/// Largest stationarity violation of `beta` for the given penalty. Zero (up
/// to tolerance) certifies optimality.
double kkt_violation(const Eigen::MatrixXd& x, const Eigen::VectorXd& y,
                     const PenaltySpec& penalty, const Eigen::VectorXd& beta);

/// Smallest lambda with an all-zero solution: max_j (2/n)|x_j.y| / alpha.
double lambda_max(const Eigen::MatrixXd& x, const Eigen::VectorXd& y,
                  double alpha = 1.0);

/// size log-spaced values from lambda_top down to lambda_top * min_ratio.
std::vector<double> make_lambda_grid(double lambda_top, int size = 100,
                                     double min_ratio = 1e-3);

struct CvPoint {
    double lambda = 0.0;
    double mean_mse = 0.0;
    double se = 0.0;
};

struct CvResult {
    double lambda = 0.0;
    std::vector<CvPoint> curve;
};

/// K-fold cross-validation over a decreasing lambda grid at fixed alpha.
/// Folds are a seeded permutation dealt round-robin; ties on the mean
/// out-of-fold MSE resolve to the larger lambda.
CvResult cv_select_lambda(const Dataset& data, double alpha, int folds,
                          const std::vector<double>& lambda_grid,
                          std::uint64_t seed, const SolveOptions& opts = {});

}  // namespace minclass
