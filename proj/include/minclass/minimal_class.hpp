#pragma once

#include <utility>
#include <vector>

#include "minclass/search.hpp"
#include "minclass/types.hpp"

namespace minclass {

/// All size-kappa models whose MSE is within eta of the best size-kappa
/// model found. The minimum is relative to the pool the class was assembled
/// from, since the global minimum is unknowable at scale.
struct MinimalClass {
    int kappa = 0;
    double eta = 0.0;
    double best_mse = 0.0;
    std::vector<std::pair<Model, double>> models;  // mse-sorted, lex tie-break
};

/// Throws ConfigError when the pool holds no model of the requested size.
MinimalClass assemble_minimal_class(const ModelPool& pool, int kappa, double eta);

/// The m smallest-MSE models of the given size (fewer if the pool is
/// smaller), with the same deterministic ordering.
std::vector<std::pair<Model, double>> top_m(const ModelPool& pool, int kappa, int m);

/// Exact oracle: fits every size-kappa subset. Throws ConfigError when
/// C(p, kappa) exceeds the fit budget. Singular subsets are skipped.
MinimalClass brute_force_minimal_class(const Dataset& data, int kappa, double eta,
                                       long budget = 2000000);

/// Number of size-kappa subsets of p items, saturating at LONG_MAX.
long choose(int p, int kappa);

/// Joint membership counts for predictors that appear in at least
/// threshold * |models| of the given models. Diagonal holds marginal counts.
struct FrequencyMatrix {
    std::vector<int> predictors;
    Eigen::MatrixXi counts;
    int total_models = 0;
    double threshold = 0.0;
};

FrequencyMatrix frequency_matrix(const std::vector<Model>& models, double threshold);

/// sigma^2 estimate n/(n - kappa*) * best pool MSE, where kappa* is the size
/// of the pool's best model. Throws ConfigError when the pool is empty or
/// n <= kappa*.
double estimate_noise_variance(const Dataset& data, const ModelPool& pool);

}  // namespace minclass
