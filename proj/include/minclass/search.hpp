#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "minclass/least_squares.hpp"
#include "minclass/rng.hpp"
#include "minclass/scoring.hpp"
#include "minclass/types.hpp"

namespace minclass {

struct AnnealingSchedule {
    std::vector<double> temperatures;  // strictly decreasing, positive
    int iters_per_temp = 100;

    void validate() const;
};

/// t0 * (ratio^1, ..., ratio^length).
AnnealingSchedule geometric_schedule(double t0 = 10.0, double ratio = 0.7,
                                     int length = 20, int iters = 100);

struct SwapProposal {
    int removed = -1;
    int added = -1;
    double forward_prob = 0.0;   // p_out(removed) * p_in(added)
    double backward_prob = 0.0;  // same product evaluated from the new state
};

struct ModelPoolEntry {
    double mse = 0.0;
    long times_seen = 0;
    long first_seen = 0;
};

/// Deduplicated collection of every model evaluated by the search.
class ModelPool {
public:
    void record(const Model& model, double mse, long step);
    void merge(const ModelPool& other);

    std::size_t size() const { return entries_.size(); }
    bool contains(const Model& model) const { return entries_.count(model) > 0; }
    const ModelPoolEntry* find(const Model& model) const;

    std::vector<int> sizes() const;
    std::size_t count_of_size(int kappa) const;
    /// Entries of one size sorted by (mse, lexicographic indices).
    std::vector<std::pair<Model, ModelPoolEntry>> entries_of_size(int kappa) const;
    /// All entries in deterministic (lexicographic) order.
    std::vector<std::pair<Model, ModelPoolEntry>> entries() const;

private:
    std::map<Model, ModelPoolEntry> entries_;
};

/// Probability of removing each member of the state, proportional to
/// 1/gamma. Throws ConfigError if a state index has gamma = 0.
Eigen::VectorXd removal_probs(const Model& state, const GammaScores& gamma);

struct AdditionCandidates {
    std::vector<int> candidates;  // support of gamma minus the state
    Eigen::VectorXd probs;        // proportional to gamma
};

/// Probability of adding each positive-score predictor outside the state.
/// Throws ConfigError when no candidate remains.
AdditionCandidates addition_probs(const Model& state, const GammaScores& gamma);

/// Metropolis-Hastings ratio
///     q = exp((mse_current - mse_candidate)/t) * backward/forward,
/// with mse = RSS/n so the exponent matches (RSS_cur - RSS_cand)/(n t).
/// The exponent is clamped to +-700; a non-finite candidate MSE yields 0.
double acceptance_ratio(double current_mse, double candidate_mse,
                        double temperature, const SwapProposal& proposal);

/// Accept with probability min(1, q); draws no random number when q >= 1.
bool accept_move(double q, Rng& rng);

struct Transition {
    Model from;
    Model to;
    SwapProposal proposal;
    double candidate_mse = 0.0;
    double q = 0.0;
    bool accepted = false;
};

struct AnnealingConfig {
    int kappa = 0;
    AnnealingSchedule schedule;
    Model start;
    std::uint64_t seed = 0;
    bool record_transitions = false;
    double condition_limit = kDefaultConditionLimit;
};

struct AnnealingResult {
    ModelPool pool;
    std::vector<Transition> transitions;  // only when record_transitions
    long iterations = 0;
};

/// One annealing chain: swap proposals weighted by gamma, MH acceptance,
/// temperatures traversed in order with the final state of each level
/// starting the next. Every proposed model is recorded with its MSE;
/// candidates with a singular Gram matrix get infinite MSE and are never
/// accepted.
AnnealingResult run_annealing(const Dataset& data, const GammaScores& gamma,
                              const AnnealingConfig& config);

/// kappa distinct indices sampled from the gamma support with probability
/// proportional to gamma, without replacement.
Model sample_start(const GammaScores& gamma, int kappa, Rng& rng);

struct MultiStartConfig {
    std::vector<int> kappas;
    int starts_per_kappa = 3;
    AnnealingSchedule schedule;
    std::uint64_t seed = 0;
    int threads = 1;
    double condition_limit = kDefaultConditionLimit;
};

struct ChainRun {
    int kappa = 0;
    int start_index = 0;
    Model start;
    ModelPool pool;
};

/// Independent chains for every (kappa, start) pair; RNG streams derive from
/// (seed, kappa, start index) so results do not depend on thread timing.
std::vector<ChainRun> run_chains(const Dataset& data, const GammaScores& gamma,
                                 const MultiStartConfig& config);

/// Union of the chain pools, deduplicated.
ModelPool multi_start_search(const Dataset& data, const GammaScores& gamma,
                             const MultiStartConfig& config);

void write_pool_csv(const std::string& path, const ModelPool& pool);
ModelPool read_pool_csv(const std::string& path);

}  // namespace minclass
