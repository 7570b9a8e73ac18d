#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lzcdt/lz_core.hpp"

namespace lzcdt {

/// Equi-width binning spec. lo/hi default to the data min/max.
struct BinningSpec {
    int n_bins = 2;
    std::optional<double> lo;
    std::optional<double> hi;
};

/// Bin a real series into n_bins equi-width symbols. Symbol k covers
/// [lo + k*w, lo + (k+1)*w) with the top edge folded into the last bin.
/// A degenerate series (zero width) maps everything to bin 0.
SymbolSequence equiwidth_bin(const std::vector<double>& series, const BinningSpec& spec);

/// 0 below the threshold, 1 at or above it.
SymbolSequence binarize_feature(const std::vector<double>& column, double threshold);

/// One-vs-rest: 1 where the label matches positive_label, else 0.
SymbolSequence binarize_target(const std::vector<int>& labels, int positive_label);

/// Ordinal codes assigned by first appearance, returned as reals plus
/// the token -> code map for round-tripping.
struct CategoricalEncoding {
    std::vector<double> codes;
    std::map<std::string, int> token_to_code;
};

CategoricalEncoding encode_categorical(const std::vector<std::string>& column);

}  // namespace lzcdt
