#include "lzcdt/evalbench.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "lzcdt/synthgen.hpp"

using namespace lzcdt;

namespace {

// Separable with class 1 at a single value, so the threshold learned
// on any training fold (the smallest class-1 value) transfers exactly
// to the held-out fold.
LabeledDataset separable_dataset(int n) {
    LabeledDataset data;
    data.feature_names = {"f0"};
    data.class_labels = {"a", "b"};
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> value(0.0, 0.4);
    for (int i = 0; i < n; ++i) {
        const int cls = static_cast<int>(rng() & 1);
        data.features.push_back({cls == 0 ? value(rng) : 0.8});
        data.targets.push_back(cls);
    }
    return data;
}

}  // namespace

TEST_CASE("metrics on exact and degenerate predictions") {
    const MetricsReport perfect = compute_metrics({0, 1, 2}, {0, 1, 2});
    CHECK(perfect.accuracy == doctest::Approx(1.0));
    CHECK(perfect.macro_f1 == doctest::Approx(1.0));

    const MetricsReport half = compute_metrics({0, 0, 1, 1}, {0, 1, 0, 1});
    CHECK(half.accuracy == doctest::Approx(0.5));
    CHECK(half.macro_f1 == doctest::Approx(0.5));
    CHECK(half.macro_precision == doctest::Approx(0.5));
    CHECK(half.macro_recall == doctest::Approx(0.5));

    const MetricsReport wrong = compute_metrics({0, 0, 0}, {1, 1, 1});
    CHECK(wrong.accuracy == doctest::Approx(0.0));
    CHECK(wrong.macro_f1 == doctest::Approx(0.0));

    CHECK_THROWS_AS(compute_metrics({0}, {0, 1}), std::invalid_argument);
}

TEST_CASE("macro metrics are invariant under class relabeling") {
    std::mt19937_64 rng(12);
    std::uniform_int_distribution<int> cls(0, 2);
    std::vector<int> y_true(60), y_pred(60);
    for (int i = 0; i < 60; ++i) {
        y_true[i] = cls(rng);
        y_pred[i] = cls(rng);
    }
    const MetricsReport base = compute_metrics(y_true, y_pred);
    const int perm[3] = {2, 0, 1};
    std::vector<int> t2(60), p2(60);
    for (int i = 0; i < 60; ++i) {
        t2[i] = perm[y_true[i]];
        p2[i] = perm[y_pred[i]];
    }
    const MetricsReport relabeled = compute_metrics(t2, p2);
    CHECK(relabeled.macro_f1 == doctest::Approx(base.macro_f1).epsilon(1e-12));
    CHECK(relabeled.macro_precision == doctest::Approx(base.macro_precision).epsilon(1e-12));
    CHECK(relabeled.macro_recall == doctest::Approx(base.macro_recall).epsilon(1e-12));
    CHECK(relabeled.accuracy == doctest::Approx(base.accuracy).epsilon(1e-12));
}

TEST_CASE("ordered split takes a temporal prefix") {
    LabeledDataset data = separable_dataset(10);
    auto [train, test] = split_train_test(data, 0.8, true, 0);
    CHECK(train.n_rows() == 8);
    CHECK(test.n_rows() == 2);
    for (int i = 0; i < 8; ++i) CHECK(train.features[i][0] == data.features[i][0]);
    CHECK(test.features[1][0] == data.features[9][0]);
}

TEST_CASE("AR dataset splits 240/60") {
    const LabeledDataset data = gen_ar_classification(3);
    auto [train, test] = split_train_test(data, 0.8, true, 0);
    CHECK(train.n_rows() == 240);
    CHECK(test.n_rows() == 60);
}

TEST_CASE("shuffled split is seed-deterministic") {
    const LabeledDataset data = separable_dataset(50);
    auto [tr1, te1] = split_train_test(data, 0.8, false, 17);
    auto [tr2, te2] = split_train_test(data, 0.8, false, 17);
    CHECK(tr1.features == tr2.features);
    CHECK(te1.targets == te2.targets);
    auto [tr3, te3] = split_train_test(data, 0.8, false, 18);
    CHECK(tr1.features != tr3.features);
}

TEST_CASE("degenerate splits are rejected") {
    const LabeledDataset data = separable_dataset(3);
    CHECK_THROWS_AS(split_train_test(data, 0.01, true, 0), std::invalid_argument);
    CHECK_THROWS_AS(split_train_test(data, 1.5, true, 0), std::invalid_argument);
}

TEST_CASE("imbalance ratio") {
    std::vector<int> iris_like;
    iris_like.insert(iris_like.end(), 39, 0);
    iris_like.insert(iris_like.end(), 37, 1);
    iris_like.insert(iris_like.end(), 44, 2);
    CHECK(imbalance_ratio(iris_like) == doctest::Approx(44.0 / 37.0).epsilon(1e-9));

    std::vector<int> thyroid_like;
    thyroid_like.insert(thyroid_like.end(), 93, 0);
    thyroid_like.insert(thyroid_like.end(), 191, 1);
    thyroid_like.insert(thyroid_like.end(), 3488, 2);
    CHECK(imbalance_ratio(thyroid_like) == doctest::Approx(3488.0 / 93.0).epsilon(1e-9));

    CHECK(imbalance_ratio({1, 1, 1}) == doctest::Approx(1.0));
}

TEST_CASE("time-series folds never train on the future") {
    std::vector<int> targets(53, 0);
    const auto folds = make_cv_folds({CVKind::TimeSeriesSplit, 5, 0}, targets);
    REQUIRE(folds.size() == 5);
    for (const CVFold& fold : folds) {
        const std::size_t max_train = *std::max_element(fold.train.begin(), fold.train.end());
        const std::size_t min_valid = *std::min_element(fold.valid.begin(), fold.valid.end());
        CHECK(max_train < min_valid);
    }
    // expanding window: later folds contain earlier training sets
    for (int f = 1; f < 5; ++f)
        CHECK(folds[f].train.size() > folds[f - 1].train.size());
}

TEST_CASE("stratified folds keep class proportions within one sample") {
    std::mt19937_64 rng(2);
    std::vector<int> targets(100);
    for (int i = 0; i < 100; ++i) targets[i] = i < 60 ? 0 : (i < 90 ? 1 : 2);
    std::shuffle(targets.begin(), targets.end(), rng);

    const auto folds = make_cv_folds({CVKind::StratifiedKFold, 5, 4}, targets);
    for (const CVFold& fold : folds) {
        int counts[3] = {0, 0, 0};
        for (std::size_t i : fold.valid) ++counts[targets[i]];
        CHECK(std::abs(counts[0] - 12) <= 1);
        CHECK(std::abs(counts[1] - 6) <= 1);
        CHECK(std::abs(counts[2] - 2) <= 1);
        CHECK(fold.train.size() + fold.valid.size() == 100);
    }
}

TEST_CASE("every row validates exactly once across folds") {
    std::vector<int> targets(40);
    for (int i = 0; i < 40; ++i) targets[i] = i % 2;
    for (CVKind kind : {CVKind::StratifiedKFold, CVKind::TimeSeriesSplit}) {
        const auto folds = make_cv_folds({kind, 5, 1}, targets);
        std::vector<int> seen(40, 0);
        for (const CVFold& fold : folds)
            for (std::size_t i : fold.valid) ++seen[i];
        if (kind == CVKind::StratifiedKFold)
            for (int s : seen) CHECK(s == 1);
        else
            // the first block is never validated in an expanding window
            CHECK(std::count(seen.begin(), seen.end(), 1) >= 33);
    }
}

TEST_CASE("grid search finds a perfect cell on separable data") {
    const LabeledDataset data = separable_dataset(60);
    const GridSearchResult a = grid_search(data, SplitCriterion::Gini,
                                           {CVKind::StratifiedKFold, 5, 3});
    CHECK(a.best_mean_f1 == doctest::Approx(1.0));
    CHECK(a.cells.size() == 200);
    const GridSearchResult b = grid_search(data, SplitCriterion::Gini,
                                           {CVKind::StratifiedKFold, 5, 3});
    CHECK(a.best_min_samples == b.best_min_samples);
    CHECK(a.best_max_depth == b.best_max_depth);
}

TEST_CASE("AR direction runner is reproducible and jobs-invariant") {
    const std::vector<double> etas = {0.0, 0.5};
    const SweepTable a = run_ar_direction_experiment(1, etas, 8, 300, 2, 5, 1);
    const SweepTable b = run_ar_direction_experiment(1, etas, 8, 300, 2, 5, 4);
    REQUIRE(a.rows.size() == 2);
    for (std::size_t i = 0; i < a.rows.size(); ++i) {
        CHECK(a.rows[i].mean_x_to_y == b.rows[i].mean_x_to_y);
        CHECK(a.rows[i].std_y_to_x == b.rows[i].std_y_to_x);
    }
    CHECK(a.rows[0].param == 0.0);
}

TEST_CASE("logistic runner emits one row per eta") {
    const SweepTable table = run_logistic_experiment({0.1, 0.2, 0.3}, 4, 300, 2, 7, 2);
    CHECK(table.rows.size() == 3);
    CHECK(table.param_name == "eta");
    for (const SweepRow& row : table.rows) {
        CHECK(row.mean_x_to_y > 0.0);
        CHECK(row.std_x_to_y >= 0.0);
    }
}

TEST_CASE("sensitivity runner shape and determinism") {
    const std::vector<double> a_grid = {0.1, 0.5, 0.9};
    const SweepTable t1 = run_sensitivity_experiment(a_grid, 0.6, 5, 2, 1);
    const SweepTable t2 = run_sensitivity_experiment(a_grid, 0.6, 5, 2, 3);
    REQUIRE(t1.rows.size() == 3);
    CHECK(t1.param_name == "a");
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(t1.rows[i].param == a_grid[i]);
        CHECK(t1.rows[i].mean_y_to_x == t2.rows[i].mean_y_to_x);
    }
}

TEST_CASE("tuebingen runner on synthetic pairs") {
    std::vector<TuebingenPair> pairs;
    std::mt19937_64 rng(33);
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (int i = 0; i < 12; ++i) {
        TuebingenPair pair;
        pair.id = "pair" + std::to_string(i);
        pair.x_causes_y = true;
        double x = 0.0, y = 0.0;
        for (int t = 0; t < 200; ++t) {
            x = 0.9 * x + 0.05 * gauss(rng);
            y = 0.5 * y + 0.8 * x + 0.05 * gauss(rng);
            pair.x.push_back(x);
            pair.y.push_back(y);
        }
        pairs.push_back(std::move(pair));
    }
    const TuebingenResult result = run_tuebingen(pairs, 2, 1);
    CHECK(result.n_pairs == 12);
    REQUIRE(result.decision_rate_curve.size() == 100);
    CHECK(result.decision_rate_curve.front().k_percent == 1);
    CHECK(result.decision_rate_curve.back().k_percent == 100);
    CHECK(result.decision_rate_curve.back().accuracy == doctest::Approx(result.accuracy));

    // the prefix size grows monotonically with k
    std::size_t previous = 0;
    for (const DecisionRatePoint& point : result.decision_rate_curve) {
        const std::size_t take = std::max<std::size_t>(1, 12 * point.k_percent / 100);
        CHECK(take >= previous);
        previous = take;
    }

    const TuebingenResult again = run_tuebingen(pairs, 2, 1);
    CHECK(again.accuracy == result.accuracy);
    CHECK(again.macro_f1 == result.macro_f1);
}
