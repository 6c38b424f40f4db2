#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "minclass/pipeline.hpp"
#include "minclass/rng.hpp"
#include "minclass/search.hpp"
#include "minclass/types.hpp"

namespace minclass {

/// One simulated dataset: p iid standard-normal predictors except columns 7
/// and 8 (1-based), which are 2/3*(x1+x2) and 2/3*(x3+x4) plus N(0, 1/3)
/// noise; the first six coefficients equal C(snr) and the rest are zero.
struct ScenarioConfig {
    int n = 100;
    int p = 200;
    double snr = 2.0;

    void validate() const;
};

struct ScenarioTruth {
    Eigen::VectorXd beta;
    double coefficient = 0.0;
};

RawTable generate_scenario(const ScenarioConfig& cfg, Rng& rng,
                           ScenarioTruth* truth = nullptr);

/// C with signal variance 6*C^2 against unit noise variance.
double snr_to_coefficient(double snr);

/// The four planted targets, 0-based:
/// (I) {0..5}, (II) {4,5,6,7}, (III) {2..6}, (IV) {0,1,4,5,7}.
std::array<Model, 4> target_models();
extern const std::array<const char*, 4> kTargetLabels;

struct RecoveryOutcome {
    std::array<bool, 4> is_best{};
    std::array<bool, 4> in_top5{};
};

/// Checks each target against the pool models of its own size. Throws
/// ConfigError when the pool lacks a target's size.
RecoveryOutcome evaluate_recovery(const ModelPool& pool,
                                  const std::array<Model, 4>& targets);

struct StudyConfig {
    std::vector<int> p_values{200};
    std::vector<double> snr_values{2.0};
    int n = 100;
    int replicates = 200;
    std::uint64_t seed = 1;
    int threads = 0;  // 0 = hardware concurrency
    GammaPipelineOptions gamma;
    AnnealingSchedule schedule = geometric_schedule();
    std::vector<int> kappas{4, 5, 6};
    int starts_per_kappa = 3;

    void validate() const;
};

struct RecoveryCell {
    int p = 0;
    double snr = 0.0;
    int replicates = 0;
    int failures = 0;  // replicates whose pipeline raised (counted as misses)
    std::array<double, 4> prop_best{};
    std::array<double, 4> prop_top5{};
    std::array<double, 4> se_best{};
    std::array<double, 4> se_top5{};
};

struct RecoveryTable {
    std::vector<RecoveryCell> cells;
};

/// Full protocol per replicate: generate, standardize, score, multi-start
/// search over the kappa list, then record whether each target is the best
/// model of its size and whether it is in the top five. Replicates run in
/// parallel with per-replicate seeds, so results do not depend on timing.
RecoveryTable run_study(const StudyConfig& cfg);

void write_recovery_csv(const std::string& path, const RecoveryTable& table);
std::string format_recovery_table(const RecoveryTable& table);

}  // namespace minclass
