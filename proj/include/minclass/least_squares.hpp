#pragma once

#include "minclass/types.hpp"

namespace minclass {

/// Condition-number cap on the Gram matrix of a model before it is declared
/// singular. Estimated from the diagonal of a column-pivoted QR of X_S
/// (cond(X)^2 approximates cond(X^T X)).
inline constexpr double kDefaultConditionLimit = 1e12;

/// Ordinary least squares on the columns selected by `model`. The empty
/// model is allowed and fits the zero function, so mse = ||y||^2 / n.
/// Throws SingularGramError when kappa > n-1 or the condition estimate
/// exceeds the limit.
LeastSquaresFit fit_least_squares(const Dataset& data, const Model& model,
                                  double condition_limit = kDefaultConditionLimit);

/// (1/n) * ||y - X_S b||^2 for arbitrary coefficients b.
double model_mse(const Dataset& data, const Model& model,
                 const Eigen::VectorXd& coefficients);

}  // namespace minclass
