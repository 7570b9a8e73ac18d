#include "lzcdt/dataset.hpp"

#include <stdexcept>

namespace lzcdt {

std::vector<double> LabeledDataset::column(std::size_t feature_index) const {
    if (feature_index >= n_features())
        throw std::out_of_range("LabeledDataset::column: feature index out of range");
    std::vector<double> col;
    col.reserve(features.size());
    for (const auto& row : features) col.push_back(row[feature_index]);
    return col;
}

LabeledDataset LabeledDataset::subset(const std::vector<std::size_t>& row_indices) const {
    LabeledDataset out;
    out.feature_names = feature_names;
    out.class_labels = class_labels;
    out.categorical_maps = categorical_maps;
    out.features.reserve(row_indices.size());
    out.targets.reserve(row_indices.size());
    for (std::size_t i : row_indices) {
        if (i >= n_rows()) throw std::out_of_range("LabeledDataset::subset: row out of range");
        out.features.push_back(features[i]);
        out.targets.push_back(targets[i]);
    }
    return out;
}

}  // namespace lzcdt
