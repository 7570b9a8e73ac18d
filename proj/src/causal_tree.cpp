#include "lzcdt/causal_tree.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "lzcdt/lz_core.hpp"
#include "lzcdt/symbolize.hpp"

namespace lzcdt {

std::string to_string(SplitCriterion c) {
    switch (c) {
        case SplitCriterion::LZCausal: return "causal";
        case SplitCriterion::LZDistance: return "distance";
        case SplitCriterion::Gini: return "gini";
    }
    return "gini";
}

SplitCriterion criterion_from_string(const std::string& name) {
    if (name == "causal") return SplitCriterion::LZCausal;
    if (name == "distance") return SplitCriterion::LZDistance;
    if (name == "gini") return SplitCriterion::Gini;
    throw std::invalid_argument("unknown split criterion: " + name);
}

int score_split_lz_causal(const std::vector<double>& feature_column, double threshold,
                          const std::vector<int>& targets, int label) {
    if (feature_column.size() != targets.size() || feature_column.empty())
        throw std::invalid_argument("score_split_lz_causal: column/target size mismatch");
    return lz_penalty(binarize_feature(feature_column, threshold),
                      binarize_target(targets, label));
}

int score_split_lz_distance(const std::vector<double>& feature_column, double threshold,
                            const std::vector<int>& targets, int label) {
    if (feature_column.size() != targets.size() || feature_column.empty())
        throw std::invalid_argument("score_split_lz_distance: column/target size mismatch");
    return lz_distance(lz_grammar(binarize_feature(feature_column, threshold)),
                       lz_grammar(binarize_target(targets, label)));
}

namespace {

double gini_impurity(const std::vector<int>& targets, const std::vector<std::size_t>& rows) {
    if (rows.empty()) return 0.0;
    std::vector<int> counts;
    for (std::size_t r : rows) {
        if (targets[r] >= static_cast<int>(counts.size())) counts.resize(targets[r] + 1, 0);
        ++counts[targets[r]];
    }
    double sum_sq = 0.0;
    const double n = static_cast<double>(rows.size());
    for (int c : counts) sum_sq += (c / n) * (c / n);
    return 1.0 - sum_sq;
}

}  // namespace

double score_split_gini(const std::vector<double>& feature_column, double threshold,
                        const std::vector<int>& targets) {
    if (feature_column.size() != targets.size() || feature_column.empty())
        throw std::invalid_argument("score_split_gini: column/target size mismatch");
    std::vector<std::size_t> left, right;
    for (std::size_t i = 0; i < feature_column.size(); ++i)
        (feature_column[i] < threshold ? left : right).push_back(i);
    const double n = static_cast<double>(feature_column.size());
    return (left.size() / n) * gini_impurity(targets, left) +
           (right.size() / n) * gini_impurity(targets, right);
}

namespace {

struct TreeBuilder {
    const LabeledDataset& data;
    SplitCriterion criterion;
    TreeHyperparams hp;
    int n_classes;

    int majority_class(const std::vector<std::size_t>& rows) const {
        std::vector<int> counts(n_classes, 0);
        for (std::size_t r : rows) ++counts[data.targets[r]];
        // ties go to the lowest class id
        return static_cast<int>(
            std::max_element(counts.begin(), counts.end()) - counts.begin());
    }

    bool is_pure(const std::vector<std::size_t>& rows) const {
        for (std::size_t r : rows)
            if (data.targets[r] != data.targets[rows.front()]) return false;
        return true;
    }

    struct BestSplit {
        bool found = false;
        int feature = -1;
        double threshold = 0.0;
        double score = std::numeric_limits<double>::infinity();
    };

    BestSplit find_best_split(const std::vector<std::size_t>& rows) const {
        BestSplit best;
        std::vector<int> node_targets;
        node_targets.reserve(rows.size());
        for (std::size_t r : rows) node_targets.push_back(data.targets[r]);

        for (std::size_t f = 0; f < data.n_features(); ++f) {
            std::vector<double> column;
            column.reserve(rows.size());
            for (std::size_t r : rows) column.push_back(data.features[r][f]);

            std::vector<double> thresholds = column;
            std::sort(thresholds.begin(), thresholds.end());
            thresholds.erase(std::unique(thresholds.begin(), thresholds.end()),
                             thresholds.end());

            for (double t : thresholds) {
                // "< t goes left": the minimum value yields an empty left child
                const bool left_nonempty =
                    std::any_of(column.begin(), column.end(), [t](double v) { return v < t; });
                if (!left_nonempty) continue;

                if (criterion == SplitCriterion::Gini) {
                    const double s = score_split_gini(column, t, node_targets);
                    if (s < best.score) best = {true, static_cast<int>(f), t, s};
                } else {
                    for (int label = 0; label < n_classes; ++label) {
                        const int s =
                            criterion == SplitCriterion::LZCausal
                                ? score_split_lz_causal(column, t, node_targets, label)
                                : score_split_lz_distance(column, t, node_targets, label);
                        if (s < best.score) best = {true, static_cast<int>(f), t, double(s)};
                    }
                }
            }
        }
        return best;
    }

    std::unique_ptr<TreeNode> build(const std::vector<std::size_t>& rows, int depth) const {
        auto node = std::make_unique<TreeNode>();
        node->depth = depth;
        node->sample_count = rows.size();

        const bool can_split = depth < hp.max_depth &&
                               rows.size() >= static_cast<std::size_t>(hp.min_samples) &&
                               !is_pure(rows);
        if (can_split) {
            const BestSplit split = find_best_split(rows);
            if (split.found) {
                std::vector<std::size_t> left_rows, right_rows;
                for (std::size_t r : rows)
                    (data.features[r][split.feature] < split.threshold ? left_rows
                                                                       : right_rows)
                        .push_back(r);
                node->is_leaf = false;
                node->feature_index = split.feature;
                node->threshold = split.threshold;
                node->score = split.score;
                node->left = build(left_rows, depth + 1);
                node->right = build(right_rows, depth + 1);
                return node;
            }
        }
        node->class_id = majority_class(rows);
        return node;
    }
};

}  // namespace

DecisionTree fit(const LabeledDataset& data, SplitCriterion criterion,
                 const TreeHyperparams& hp, std::uint64_t seed,
                 const std::string& dataset_name) {
    if (data.n_rows() == 0) throw std::invalid_argument("fit: empty dataset");
    if (hp.max_depth < 0 || hp.min_samples < 1)
        throw std::invalid_argument("fit: invalid hyperparameters");

    DecisionTree tree;
    tree.criterion = criterion;
    tree.hyperparams = hp;
    tree.seed = seed;
    tree.dataset_name = dataset_name;
    tree.n_features = data.n_features();
    tree.class_labels = data.class_labels;

    TreeBuilder builder{data, criterion, hp,
                        static_cast<int>(data.class_labels.size())};
    std::vector<std::size_t> all_rows(data.n_rows());
    std::iota(all_rows.begin(), all_rows.end(), 0);
    tree.root = builder.build(all_rows, 0);
    return tree;
}

int predict(const DecisionTree& tree, const std::vector<double>& row) {
    if (row.size() != tree.n_features)
        throw std::invalid_argument("predict: row length does not match training features");
    const TreeNode* node = tree.root.get();
    while (!node->is_leaf)
        node = (row[node->feature_index] < node->threshold) ? node->left.get()
                                                            : node->right.get();
    return node->class_id;
}

std::vector<int> predict(const DecisionTree& tree,
                         const std::vector<std::vector<double>>& rows) {
    std::vector<int> out;
    out.reserve(rows.size());
    for (const auto& row : rows) out.push_back(predict(tree, row));
    return out;
}

namespace {

void accumulate_strength(const TreeNode* node, std::vector<double>& raw) {
    if (node == nullptr || node->is_leaf) return;
    raw[node->feature_index] += std::pow(2.0, -node->depth);
    accumulate_strength(node->left.get(), raw);
    accumulate_strength(node->right.get(), raw);
}

}  // namespace

CausalStrengthRanking causal_strength(const DecisionTree& tree) {
    CausalStrengthRanking out;
    out.scores.assign(tree.n_features, 0.0);
    accumulate_strength(tree.root.get(), out.scores);

    const double total = std::accumulate(out.scores.begin(), out.scores.end(), 0.0);
    if (total > 0.0)
        for (double& s : out.scores) s /= total;

    out.ranking.resize(tree.n_features);
    std::iota(out.ranking.begin(), out.ranking.end(), 0);
    std::stable_sort(out.ranking.begin(), out.ranking.end(),
                     [&](std::size_t a, std::size_t b) { return out.scores[a] > out.scores[b]; });
    return out;
}

}  // namespace lzcdt
