#pragma once

#include <map>
#include <string>
#include <vector>

namespace lzcdt {

/// Row-ordered labeled dataset. Row order is significant: the LZ split
/// criteria read columns as symbolic sequences in dataset order.
struct LabeledDataset {
    std::vector<std::vector<double>> features;  // n_rows x n_features
    std::vector<int> targets;                   // indices into class_labels
    std::vector<std::string> feature_names;
    std::vector<std::string> class_labels;
    /// token -> ordinal code maps for columns that were categorical.
    std::map<std::string, std::map<std::string, int>> categorical_maps;

    std::size_t n_rows() const { return features.size(); }
    std::size_t n_features() const { return features.empty() ? 0 : features.front().size(); }

    std::vector<double> column(std::size_t feature_index) const;

    /// Dataset restricted to the given rows, preserving their order.
    LabeledDataset subset(const std::vector<std::size_t>& row_indices) const;
};

/// One cause-effect benchmark pair with its ground-truth direction
/// (true means X -> Y).
struct TuebingenPair {
    std::string id;
    std::vector<double> x;
    std::vector<double> y;
    bool x_causes_y = true;
};

}  // namespace lzcdt
