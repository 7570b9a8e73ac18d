#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "lzcdt/dataset.hpp"

namespace lzcdt {

enum class SplitCriterion { LZCausal, LZDistance, Gini };

std::string to_string(SplitCriterion c);
SplitCriterion criterion_from_string(const std::string& name);

/// Binary tree node. Split nodes route rows with feature < threshold to
/// the left child and feature >= threshold to the right child.
struct TreeNode {
    bool is_leaf = true;
    int depth = 0;
    std::size_t sample_count = 0;

    // split fields
    int feature_index = -1;
    double threshold = 0.0;
    double score = 0.0;
    std::unique_ptr<TreeNode> left;
    std::unique_ptr<TreeNode> right;

    // leaf field
    int class_id = -1;
};

struct TreeHyperparams {
    int max_depth = 6;
    int min_samples = 2;
};

struct DecisionTree {
    std::unique_ptr<TreeNode> root;
    SplitCriterion criterion = SplitCriterion::Gini;
    TreeHyperparams hyperparams;
    std::uint64_t seed = 0;
    std::string dataset_name;
    std::size_t n_features = 0;
    std::vector<std::string> class_labels;
};

struct CausalStrengthRanking {
    /// Normalized per-feature scores (sum to 1 when any split exists).
    std::vector<double> scores;
    /// Feature indices in descending score order.
    std::vector<std::size_t> ranking;
};

/// Eq.-style criterion scores on a single candidate split. The LZ
/// scores binarize the column at the threshold and the targets
/// one-vs-rest against the label, then compare the symbolic sequences.
int score_split_lz_causal(const std::vector<double>& feature_column, double threshold,
                          const std::vector<int>& targets, int label);
int score_split_lz_distance(const std::vector<double>& feature_column, double threshold,
                            const std::vector<int>& targets, int label);
/// Weighted child Gini impurity of splitting at the threshold.
double score_split_gini(const std::vector<double>& feature_column, double threshold,
                        const std::vector<int>& targets);

/// Grows a tree by greedy argmin over (feature, threshold[, label])
/// candidates. Ties break deterministically: features ascending,
/// thresholds ascending, labels in class order; first minimum wins.
/// Node-local rows keep dataset order, so LZ criteria see the data as
/// ordered symbolic sequences.
DecisionTree fit(const LabeledDataset& data, SplitCriterion criterion,
                 const TreeHyperparams& hp, std::uint64_t seed = 0,
                 const std::string& dataset_name = "");

int predict(const DecisionTree& tree, const std::vector<double>& row);
std::vector<int> predict(const DecisionTree& tree,
                         const std::vector<std::vector<double>>& rows);

/// Per-feature sum of 2^-depth over split nodes, normalized to sum 1.
/// A leaf-only tree returns all zeros.
CausalStrengthRanking causal_strength(const DecisionTree& tree);

}  // namespace lzcdt
