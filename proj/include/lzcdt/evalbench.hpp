#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "lzcdt/causal_tree.hpp"
#include "lzcdt/dataset.hpp"

namespace lzcdt {

struct MetricsReport {
    double accuracy = 0.0;
    double macro_f1 = 0.0;
    double macro_precision = 0.0;
    double macro_recall = 0.0;
    /// confusion[t][p] counts rows with true class t predicted as p.
    std::vector<std::vector<long>> confusion;
};

/// Accuracy plus macro precision/recall/F1 over the classes present in
/// y_true. Undefined (zero-denominator) precision or recall scores 0.
MetricsReport compute_metrics(const std::vector<int>& y_true, const std::vector<int>& y_pred);

/// ordered = true takes the first ratio fraction as train (temporal
/// data); ordered = false shuffles row indices with the seed first.
std::pair<LabeledDataset, LabeledDataset> split_train_test(const LabeledDataset& data,
                                                           double ratio, bool ordered,
                                                           std::uint64_t seed);

/// Majority-class count over minority-class count.
double imbalance_ratio(const std::vector<int>& train_targets);

enum class CVKind { StratifiedKFold, TimeSeriesSplit };

struct CVScheme {
    CVKind kind = CVKind::StratifiedKFold;
    int k = 5;
    std::uint64_t seed = 0;
};

struct CVFold {
    std::vector<std::size_t> train;
    std::vector<std::size_t> valid;
};

/// Fold index sets. TimeSeriesSplit uses k expanding windows over k+1
/// contiguous blocks, so no fold trains on future rows.
std::vector<CVFold> make_cv_folds(const CVScheme& scheme, const std::vector<int>& targets);

struct GridCell {
    int min_samples = 1;
    int max_depth = 1;
    double mean_f1 = 0.0;
    double var_f1 = 0.0;
};

struct GridSearchResult {
    int best_min_samples = 1;
    int best_max_depth = 1;
    double best_mean_f1 = 0.0;
    std::vector<GridCell> cells;
};

/// Full sweep of min_samples 1..10 x max_depth 1..20; scores each cell
/// by mean fold macro-F1. Ties prefer the smaller (max_depth,
/// min_samples) pair.
GridSearchResult grid_search(const LabeledDataset& data, SplitCriterion criterion,
                             const CVScheme& scheme);

/// One row of a penalty sweep: mean/std of both directional penalties
/// at one parameter value.
struct SweepRow {
    double param = 0.0;
    double mean_x_to_y = 0.0;
    double std_x_to_y = 0.0;
    double mean_y_to_x = 0.0;
    double std_y_to_x = 0.0;
};

struct SweepTable {
    std::string param_name;
    std::vector<SweepRow> rows;
};

/// Coupled AR(p) direction-recovery sweep over coupling coefficients.
/// Per trial: simulate, symbolize with n_bins equi-width bins, compute
/// both penalties. Trials use seed + trial-derived streams and may run
/// on `jobs` workers; output is identical for any worker count.
SweepTable run_ar_direction_experiment(int p, const std::vector<double>& eta_grid,
                                       int n_trials, int length, int n_bins,
                                       std::uint64_t seed, int jobs = 1);

SweepTable run_logistic_experiment(const std::vector<double>& eta_grid, int n_trials,
                                   int length, int n_bins, std::uint64_t seed, int jobs = 1);

/// Spurious-causality probe: eta = 0, b fixed, sweep the AR
/// self-coefficient a, 2 bins.
SweepTable run_sensitivity_experiment(const std::vector<double>& a_grid, double b_fixed,
                                      int n_trials, std::uint64_t seed, int jobs = 1);

struct DecisionRatePoint {
    int k_percent = 0;
    double accuracy = 0.0;
};

struct TuebingenResult {
    double accuracy = 0.0;
    double macro_f1 = 0.0;
    std::size_t n_pairs = 0;
    /// Accuracy over the top k% of pairs by causation strength,
    /// k = 1..100 step 1.
    std::vector<DecisionRatePoint> decision_rate_curve;
};

TuebingenResult run_tuebingen(const std::vector<TuebingenPair>& pairs, int n_bins,
                              std::uint64_t seed);

}  // namespace lzcdt
