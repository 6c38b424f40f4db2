#pragma once

#include <string>
#include <vector>

#include "minclass/types.hpp"

namespace minclass {

enum class VarianceDivisor {
    kNMinusOne,  // sample variance, the default
    kN,
};

/// Centers each predictor column and the response, and scales every column
/// to unit variance. Throws InputError for non-finite entries or a
/// zero-variance column (the message names the column).
Dataset standardize(const RawTable& raw,
                    VarianceDivisor divisor = VarianceDivisor::kNMinusOne);

struct ExpansionOptions {
    bool log_transform = false;
    bool sqrt_transform = false;
    bool square_transform = false;
    bool interactions = false;

    static ExpansionOptions all();
};

struct ExpansionResult {
    RawTable table;
    std::vector<std::string> skipped;  // one note per inapplicable transform
};

/// Appends requested column transforms and all pairwise products of the
/// original columns. log/sqrt are skipped (and recorded) for columns that
/// are not strictly positive.
ExpansionResult expand_features(const RawTable& raw, const ExpansionOptions& opts);

struct RawScaleCoefficients {
    double intercept = 0.0;
    Eigen::VectorXd coefficients;  // aligned with model indices
};

/// Maps coefficients estimated on the standardized scale back to the scale
/// of the raw inputs.
RawScaleCoefficients to_raw_scale(const Dataset& data, const Model& model,
                                  const Eigen::VectorXd& coefficients);

}  // namespace minclass
