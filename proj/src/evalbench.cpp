#include "lzcdt/evalbench.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>
#include <thread>

#include "lzcdt/lz_core.hpp"
#include "lzcdt/symbolize.hpp"
#include "lzcdt/synthgen.hpp"

namespace lzcdt {

MetricsReport compute_metrics(const std::vector<int>& y_true, const std::vector<int>& y_pred) {
    if (y_true.size() != y_pred.size())
        throw std::invalid_argument("compute_metrics: length mismatch");
    if (y_true.empty()) throw std::invalid_argument("compute_metrics: empty input");

    int max_class = 0;
    for (int c : y_true) max_class = std::max(max_class, c);
    for (int c : y_pred) max_class = std::max(max_class, c);

    MetricsReport report;
    report.confusion.assign(max_class + 1, std::vector<long>(max_class + 1, 0));
    long correct = 0;
    for (std::size_t i = 0; i < y_true.size(); ++i) {
        ++report.confusion[y_true[i]][y_pred[i]];
        if (y_true[i] == y_pred[i]) ++correct;
    }
    report.accuracy = static_cast<double>(correct) / y_true.size();

    // macro averages run over classes present in the ground truth
    const std::set<int> truth_classes(y_true.begin(), y_true.end());
    double sum_p = 0.0, sum_r = 0.0, sum_f = 0.0;
    for (int c : truth_classes) {
        long tp = report.confusion[c][c];
        long pred_c = 0, true_c = 0;
        for (int other = 0; other <= max_class; ++other) {
            pred_c += report.confusion[other][c];
            true_c += report.confusion[c][other];
        }
        const double precision = pred_c > 0 ? static_cast<double>(tp) / pred_c : 0.0;
        const double recall = true_c > 0 ? static_cast<double>(tp) / true_c : 0.0;
        const double f1 =
            (precision + recall) > 0.0 ? 2.0 * precision * recall / (precision + recall) : 0.0;
        sum_p += precision;
        sum_r += recall;
        sum_f += f1;
    }
    const double n_classes = static_cast<double>(truth_classes.size());
    report.macro_precision = sum_p / n_classes;
    report.macro_recall = sum_r / n_classes;
    report.macro_f1 = sum_f / n_classes;
    return report;
}

std::pair<LabeledDataset, LabeledDataset> split_train_test(const LabeledDataset& data,
                                                           double ratio, bool ordered,
                                                           std::uint64_t seed) {
    if (ratio <= 0.0 || ratio >= 1.0)
        throw std::invalid_argument("split_train_test: ratio must be in (0, 1)");
    std::vector<std::size_t> indices(data.n_rows());
    std::iota(indices.begin(), indices.end(), 0);
    if (!ordered) {
        std::mt19937_64 rng(seed);
        std::shuffle(indices.begin(), indices.end(), rng);
    }
    const std::size_t n_train =
        static_cast<std::size_t>(std::llround(ratio * static_cast<double>(data.n_rows())));
    if (n_train == 0 || n_train == data.n_rows())
        throw std::invalid_argument("split_train_test: degenerate empty side");

    std::vector<std::size_t> train_idx(indices.begin(), indices.begin() + n_train);
    std::vector<std::size_t> test_idx(indices.begin() + n_train, indices.end());
    return {data.subset(train_idx), data.subset(test_idx)};
}

double imbalance_ratio(const std::vector<int>& train_targets) {
    if (train_targets.empty()) throw std::invalid_argument("imbalance_ratio: empty targets");
    std::vector<long> counts;
    for (int c : train_targets) {
        if (c >= static_cast<int>(counts.size())) counts.resize(c + 1, 0);
        ++counts[c];
    }
    long mx = 0, mn = std::numeric_limits<long>::max();
    for (long c : counts) {
        if (c == 0) continue;  // class id absent from this split
        mx = std::max(mx, c);
        mn = std::min(mn, c);
    }
    return static_cast<double>(mx) / static_cast<double>(mn);
}

std::vector<CVFold> make_cv_folds(const CVScheme& scheme, const std::vector<int>& targets) {
    if (scheme.k < 2) throw std::invalid_argument("make_cv_folds: k must be >= 2");
    const std::size_t n = targets.size();
    std::vector<CVFold> folds(scheme.k);

    if (scheme.kind == CVKind::StratifiedKFold) {
        std::vector<std::size_t> order(n);
        std::iota(order.begin(), order.end(), 0);
        std::mt19937_64 rng(scheme.seed);
        std::shuffle(order.begin(), order.end(), rng);

        // round-robin per class keeps fold proportions within one sample
        std::vector<int> class_counter;
        std::vector<int> fold_of(n);
        for (std::size_t i : order) {
            const int c = targets[i];
            if (c >= static_cast<int>(class_counter.size())) class_counter.resize(c + 1, 0);
            fold_of[i] = class_counter[c]++ % scheme.k;
        }
        for (std::size_t i = 0; i < n; ++i) {
            for (int f = 0; f < scheme.k; ++f)
                (f == fold_of[i] ? folds[f].valid : folds[f].train).push_back(i);
        }
    } else {
        // k expanding windows over k+1 contiguous blocks
        const std::size_t n_blocks = static_cast<std::size_t>(scheme.k) + 1;
        std::vector<std::size_t> block_start(n_blocks + 1);
        for (std::size_t b = 0; b <= n_blocks; ++b) block_start[b] = b * n / n_blocks;
        for (int f = 0; f < scheme.k; ++f) {
            for (std::size_t i = block_start[0]; i < block_start[f + 1]; ++i)
                folds[f].train.push_back(i);
            for (std::size_t i = block_start[f + 1]; i < block_start[f + 2]; ++i)
                folds[f].valid.push_back(i);
        }
    }
    for (const CVFold& fold : folds)
        if (fold.train.empty() || fold.valid.empty())
            throw std::invalid_argument("make_cv_folds: too few rows for fold count");
    return folds;
}

GridSearchResult grid_search(const LabeledDataset& data, SplitCriterion criterion,
                             const CVScheme& scheme) {
    const std::vector<CVFold> folds = make_cv_folds(scheme, data.targets);

    GridSearchResult result;
    double best_mean = -1.0;
    for (int min_samples = 1; min_samples <= 10; ++min_samples) {
        for (int max_depth = 1; max_depth <= 20; ++max_depth) {
            std::vector<double> fold_f1;
            fold_f1.reserve(folds.size());
            for (const CVFold& fold : folds) {
                const LabeledDataset train = data.subset(fold.train);
                const LabeledDataset valid = data.subset(fold.valid);
                const DecisionTree tree =
                    fit(train, criterion, TreeHyperparams{max_depth, min_samples}, scheme.seed);
                fold_f1.push_back(
                    compute_metrics(valid.targets, predict(tree, valid.features)).macro_f1);
            }
            const double mean =
                std::accumulate(fold_f1.begin(), fold_f1.end(), 0.0) / fold_f1.size();
            double var = 0.0;
            for (double f : fold_f1) var += (f - mean) * (f - mean);
            var /= fold_f1.size();

            result.cells.push_back({min_samples, max_depth, mean, var});
            const bool better =
                mean > best_mean ||
                (mean == best_mean && std::make_pair(max_depth, min_samples) <
                                          std::make_pair(result.best_max_depth,
                                                         result.best_min_samples));
            if (better) {
                best_mean = mean;
                result.best_mean_f1 = mean;
                result.best_min_samples = min_samples;
                result.best_max_depth = max_depth;
            }
        }
    }
    return result;
}

namespace {

struct TrialPenalties {
    double x_to_y = 0.0;
    double y_to_x = 0.0;
};

/// Runs fn(trial) for trial = 0..n_trials-1 on `jobs` workers. Results
/// land in a trial-indexed vector, so aggregation does not depend on
/// the worker count.
std::vector<TrialPenalties> run_trials(int n_trials, int jobs,
                                       const std::function<TrialPenalties(int)>& fn) {
    std::vector<TrialPenalties> results(n_trials);
    jobs = std::max(1, jobs);
    if (jobs == 1) {
        for (int t = 0; t < n_trials; ++t) results[t] = fn(t);
        return results;
    }
    std::vector<std::thread> workers;
    workers.reserve(jobs);
    for (int w = 0; w < jobs; ++w) {
        workers.emplace_back([&, w] {
            for (int t = w; t < n_trials; t += jobs) results[t] = fn(t);
        });
    }
    for (auto& worker : workers) worker.join();
    return results;
}

SweepRow aggregate(double param, const std::vector<TrialPenalties>& trials) {
    SweepRow row;
    row.param = param;
    const double n = static_cast<double>(trials.size());
    for (const TrialPenalties& t : trials) {
        row.mean_x_to_y += t.x_to_y;
        row.mean_y_to_x += t.y_to_x;
    }
    row.mean_x_to_y /= n;
    row.mean_y_to_x /= n;
    for (const TrialPenalties& t : trials) {
        row.std_x_to_y += (t.x_to_y - row.mean_x_to_y) * (t.x_to_y - row.mean_x_to_y);
        row.std_y_to_x += (t.y_to_x - row.mean_y_to_x) * (t.y_to_x - row.mean_y_to_x);
    }
    row.std_x_to_y = std::sqrt(row.std_x_to_y / n);
    row.std_y_to_x = std::sqrt(row.std_y_to_x / n);
    return row;
}

TrialPenalties penalties_of_pair(const SeriesPair& pair, int n_bins) {
    const BinningSpec spec{n_bins, {}, {}};
    const SymbolSequence sx = equiwidth_bin(pair.x, spec);
    const SymbolSequence sy = equiwidth_bin(pair.y, spec);
    return {static_cast<double>(lz_penalty(sx, sy)), static_cast<double>(lz_penalty(sy, sx))};
}

}  // namespace

SweepTable run_ar_direction_experiment(int p, const std::vector<double>& eta_grid,
                                       int n_trials, int length, int n_bins,
                                       std::uint64_t seed, int jobs) {
    if (n_trials < 1) throw std::invalid_argument("n_trials must be >= 1");
    SweepTable table;
    table.param_name = "eta";
    for (std::size_t e = 0; e < eta_grid.size(); ++e) {
        auto trial_fn = [&, e](int trial) {
            ARConfig cfg;
            cfg.p = p;
            cfg.eta = eta_grid[e];
            cfg.total_steps = length + 500;
            cfg.transient_steps = 500;
            cfg.seed = derive_seed(seed, e * 1000003ULL + trial);
            return penalties_of_pair(gen_coupled_ar(cfg), n_bins);
        };
        table.rows.push_back(aggregate(eta_grid[e], run_trials(n_trials, jobs, trial_fn)));
    }
    return table;
}

SweepTable run_logistic_experiment(const std::vector<double>& eta_grid, int n_trials,
                                   int length, int n_bins, std::uint64_t seed, int jobs) {
    if (n_trials < 1) throw std::invalid_argument("n_trials must be >= 1");
    SweepTable table;
    table.param_name = "eta";
    for (std::size_t e = 0; e < eta_grid.size(); ++e) {
        auto trial_fn = [&, e](int trial) {
            LogisticConfig cfg;
            cfg.eta = eta_grid[e];
            cfg.total_steps = length + 500;
            cfg.transient_steps = 500;
            cfg.seed = derive_seed(seed, e * 1000003ULL + trial);
            return penalties_of_pair(gen_coupled_logistic(cfg), n_bins);
        };
        table.rows.push_back(aggregate(eta_grid[e], run_trials(n_trials, jobs, trial_fn)));
    }
    return table;
}

SweepTable run_sensitivity_experiment(const std::vector<double>& a_grid, double b_fixed,
                                      int n_trials, std::uint64_t seed, int jobs) {
    if (n_trials < 1) throw std::invalid_argument("n_trials must be >= 1");
    SweepTable table;
    table.param_name = "a";
    for (std::size_t ai = 0; ai < a_grid.size(); ++ai) {
        auto trial_fn = [&, ai](int trial) {
            ARConfig cfg;
            cfg.p = 1;
            cfg.a = a_grid[ai];
            cfg.b = b_fixed;
            cfg.eta = 0.0;
            cfg.total_steps = 2500;
            cfg.transient_steps = 500;
            cfg.seed = derive_seed(seed, ai * 1000003ULL + trial);
            return penalties_of_pair(gen_coupled_ar(cfg), 2);
        };
        table.rows.push_back(aggregate(a_grid[ai], run_trials(n_trials, jobs, trial_fn)));
    }
    return table;
}

TuebingenResult run_tuebingen(const std::vector<TuebingenPair>& pairs, int n_bins,
                              std::uint64_t seed) {
    if (pairs.empty()) throw std::invalid_argument("run_tuebingen: no pairs");

    struct PairOutcome {
        int strength = 0;
        bool correct = false;
        int truth = 0;     // 0 = XtoY, 1 = YtoX
        int inferred = 0;
    };
    std::vector<PairOutcome> outcomes;
    outcomes.reserve(pairs.size());
    const BinningSpec spec{n_bins, {}, {}};
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        const SymbolSequence sx = equiwidth_bin(pairs[i].x, spec);
        const SymbolSequence sy = equiwidth_bin(pairs[i].y, spec);
        const PenaltyReport report = causality_report(sx, sy, derive_seed(seed, i));
        PairOutcome out;
        out.strength = report.strength;
        out.truth = pairs[i].x_causes_y ? 0 : 1;
        out.inferred = report.direction == Direction::XtoY ? 0 : 1;
        out.correct = out.truth == out.inferred;
        outcomes.push_back(out);
    }

    TuebingenResult result;
    result.n_pairs = pairs.size();
    std::vector<int> y_true, y_pred;
    for (const PairOutcome& o : outcomes) {
        y_true.push_back(o.truth);
        y_pred.push_back(o.inferred);
    }
    const MetricsReport metrics = compute_metrics(y_true, y_pred);
    result.accuracy = metrics.accuracy;
    result.macro_f1 = metrics.macro_f1;

    // rank by descending strength; ties keep pair order (stable)
    std::vector<std::size_t> order(outcomes.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return outcomes[a].strength > outcomes[b].strength;
    });
    for (int k = 1; k <= 100; ++k) {
        const std::size_t take =
            std::max<std::size_t>(1, outcomes.size() * static_cast<std::size_t>(k) / 100);
        long correct = 0;
        for (std::size_t i = 0; i < take; ++i)
            if (outcomes[order[i]].correct) ++correct;
        result.decision_rate_curve.push_back({k, static_cast<double>(correct) / take});
    }
    return result;
}

}  // namespace lzcdt
