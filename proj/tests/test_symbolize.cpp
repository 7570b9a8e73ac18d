#include "lzcdt/symbolize.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "doctest.h"

using namespace lzcdt;

TEST_CASE("equi-width binning") {
    CHECK(equiwidth_bin({0.0, 0.5, 1.0}, {2, 0.0, 1.0}).symbols == std::vector<int>{0, 1, 1});
    CHECK(equiwidth_bin({0.1, 0.9, 0.45, 0.55}, {2, 0.0, 1.0}).symbols ==
          std::vector<int>{0, 1, 0, 1});
    // degenerate all-equal series maps to bin 0
    CHECK(equiwidth_bin({3.0, 3.0, 3.0}, {2, {}, {}}).symbols == std::vector<int>{0, 0, 0});
    CHECK(equiwidth_bin({1.0, 2.0}, {2, {}, {}}).alphabet_size == 2);
    CHECK_THROWS_AS(equiwidth_bin({1.0}, {1, {}, {}}), std::invalid_argument);
    CHECK_THROWS_AS(equiwidth_bin({}, {2, {}, {}}), std::invalid_argument);
}

TEST_CASE("equi-width binning is monotone in the value") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> dist(-5.0, 5.0);
    std::vector<double> series(200);
    for (double& v : series) v = dist(rng);
    const SymbolSequence binned = equiwidth_bin(series, {4, {}, {}});
    for (std::size_t i = 0; i < series.size(); ++i)
        for (std::size_t j = 0; j < series.size(); ++j)
            if (series[i] < series[j]) CHECK(binned.symbols[i] <= binned.symbols[j]);
}

TEST_CASE("feature binarization uses the equality-goes-right rule") {
    CHECK(binarize_feature({1, 2, 3}, 2).symbols == std::vector<int>{0, 1, 1});
    CHECK(binarize_feature({5, 5}, 10).symbols == std::vector<int>{0, 0});
    CHECK(binarize_feature({5, 5}, 0).symbols == std::vector<int>{1, 1});
}

TEST_CASE("feature binarization commutes with permutation") {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    std::vector<double> column(64);
    for (double& v : column) v = dist(rng);
    const std::vector<int> base = binarize_feature(column, 0.25).symbols;

    std::vector<std::size_t> perm(column.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<double> permuted(column.size());
    for (std::size_t i = 0; i < perm.size(); ++i) permuted[i] = column[perm[i]];
    const std::vector<int> result = binarize_feature(permuted, 0.25).symbols;
    for (std::size_t i = 0; i < perm.size(); ++i) CHECK(result[i] == base[perm[i]]);
}

TEST_CASE("target binarization is one-vs-rest") {
    CHECK(binarize_target({0, 1, 0}, 0).symbols == std::vector<int>{1, 0, 1});
    CHECK(binarize_target({0, 0}, 1).symbols == std::vector<int>{0, 0});
    CHECK(binarize_target({0, 1, 2, 1}, 1).symbols == std::vector<int>{0, 1, 0, 1});
}

TEST_CASE("categorical encoding by first appearance") {
    CHECK(encode_categorical({"x", "y", "x"}).codes == std::vector<double>{0, 1, 0});
    CHECK(encode_categorical({"b", "a", "b", "c"}).codes == std::vector<double>{0, 1, 0, 2});
    const CategoricalEncoding empty = encode_categorical({});
    CHECK(empty.codes.empty());
    CHECK(empty.token_to_code.empty());
}

TEST_CASE("categorical encoding round-trips") {
    const std::vector<std::string> tokens = {"red", "green", "red", "blue", "green"};
    const CategoricalEncoding enc = encode_categorical(tokens);
    for (std::size_t i = 0; i < tokens.size(); ++i)
        CHECK(enc.token_to_code.at(tokens[i]) == static_cast<int>(enc.codes[i]));
}
