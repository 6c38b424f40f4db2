#pragma once

#include <string>
#include <vector>

#include "minclass/solver.hpp"
#include "minclass/types.hpp"

namespace minclass {

/// Disjoint split of {0..p-1}: predictors picked by the Lasso, predictors
/// picked only by the Elastic Net, and the rest.
struct SupportPartition {
    Model s_l;
    Model s_plus;
    Model s_out;
    int p = 0;
};

SupportPartition partition_supports(const SparseFit& lasso, const SparseFit& enet, int p);

/// Grid (0, step, 2*step, ..., 1); 1/step must be integral.
std::vector<double> make_delta_grid(double step);

struct PathPoint {
    double delta = 0.0;
    Model support;
};

/// Support of the reduced-penalty Lasso at every grid point, solved at the
/// fixed lambda of the Lasso stage. The delta=1 endpoint is the plain Lasso;
/// delta=0 leaves s_plus unpenalized. Points are solved from delta=1
/// downward with warm starts and returned in increasing-delta order.
std::vector<PathPoint> reduced_penalty_path(const Dataset& data, double lambda,
                                            const SupportPartition& part,
                                            const std::vector<double>& delta_grid,
                                            const SolveOptions& opts = {});

enum class PredictorSet { kLasso, kPlus, kOut };

/// Per-predictor scores in [0,1] steering the model search.
struct GammaScores {
    Eigen::VectorXd gamma;
    Model support;                  // positive entries
    double gamma_min = 0.0;         // smallest positive entry, 0 if none
    std::vector<double> delta_grid;
    std::vector<PredictorSet> sets;
    std::vector<int> i_star;
    std::vector<double> delta_star;

    int p() const { return static_cast<int>(gamma.size()); }

    /// Wraps an externally supplied score vector (entries must lie in [0,1]).
    static GammaScores from_values(Eigen::VectorXd gamma);
};

/// Turns the path into scores. For j in s_plus, i* is the last grid index
/// whose support contains j (0 if none) and gamma_j = delta_{i*}/2; for j in
/// s_l, i* is the last grid index whose support excludes j (0 if none) and
/// gamma_j = 1 - delta_{i*}/2; s_out scores 0. Throws EmptySupportsError
/// when both s_l and s_plus are empty.
GammaScores compute_gamma(const std::vector<PathPoint>& path,
                          const SupportPartition& part,
                          const std::vector<double>& delta_grid);

void write_gamma_csv(const std::string& path, const GammaScores& gamma,
                     const std::vector<std::string>& names = {});
GammaScores read_gamma_csv(const std::string& path);

}  // namespace minclass
