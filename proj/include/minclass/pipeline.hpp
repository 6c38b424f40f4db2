#pragma once

#include <cstdint>

#include "minclass/scoring.hpp"
#include "minclass/solver.hpp"
#include "minclass/types.hpp"

namespace minclass {

/// Options for the score-construction stage: CV-tuned Lasso, Elastic Net at
/// fixed alpha, then the reduced-penalty path on the Lasso lambda.
struct GammaPipelineOptions {
    double enet_alpha = 0.4;
    int cv_folds = 10;
    int lambda_grid_size = 100;
    double lambda_min_ratio = 1e-3;
    double delta_step = 0.02;
    SolveOptions solve;
};

struct GammaPipelineResult {
    double lambda_lasso = 0.0;
    double lambda_enet = 0.0;
    CvResult lasso_cv;
    CvResult enet_cv;
    SparseFit lasso_fit;
    SparseFit enet_fit;
    SupportPartition partition;
    std::vector<PathPoint> path;
    GammaScores gamma;
};

GammaPipelineResult gamma_pipeline(const Dataset& data,
                                   const GammaPipelineOptions& opts,
                                   std::uint64_t seed);

}  // namespace minclass
