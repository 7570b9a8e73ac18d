#include "lzcdt/symbolize.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace lzcdt {

SymbolSequence equiwidth_bin(const std::vector<double>& series, const BinningSpec& spec) {
    if (spec.n_bins < 2) throw std::invalid_argument("equiwidth_bin: n_bins must be >= 2");
    if (series.empty()) throw std::invalid_argument("equiwidth_bin: empty series");

    const auto [mn, mx] = std::minmax_element(series.begin(), series.end());
    const double lo = spec.lo.value_or(*mn);
    const double hi = spec.hi.value_or(*mx);
    const double width = (hi - lo) / spec.n_bins;

    std::vector<int> syms;
    syms.reserve(series.size());
    for (double v : series) {
        int k = 0;
        if (width > 0.0) {
            k = static_cast<int>(std::floor((v - lo) / width));
            k = std::clamp(k, 0, spec.n_bins - 1);
        }
        syms.push_back(k);
    }
    return SymbolSequence(std::move(syms), spec.n_bins);
}

SymbolSequence binarize_feature(const std::vector<double>& column, double threshold) {
    if (column.empty()) throw std::invalid_argument("binarize_feature: empty column");
    std::vector<int> syms;
    syms.reserve(column.size());
    for (double v : column) syms.push_back(v < threshold ? 0 : 1);
    return SymbolSequence(std::move(syms), 2);
}

SymbolSequence binarize_target(const std::vector<int>& labels, int positive_label) {
    if (labels.empty()) throw std::invalid_argument("binarize_target: empty labels");
    std::vector<int> syms;
    syms.reserve(labels.size());
    for (int l : labels) syms.push_back(l == positive_label ? 1 : 0);
    return SymbolSequence(std::move(syms), 2);
}

CategoricalEncoding encode_categorical(const std::vector<std::string>& column) {
    CategoricalEncoding enc;
    enc.codes.reserve(column.size());
    for (const std::string& token : column) {
        auto [it, inserted] =
            enc.token_to_code.emplace(token, static_cast<int>(enc.token_to_code.size()));
        enc.codes.push_back(static_cast<double>(it->second));
    }
    return enc;
}

}  // namespace lzcdt
