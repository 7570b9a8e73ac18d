#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "lzcdt/dataset.hpp"

namespace lzcdt {

/// Coupled AR(p): Y(t) = b*Y(t-1) + eps_Y, X(t) = a*X(t-1) + eta*Y(t-p) + eps_X.
struct ARConfig {
    int p = 1;
    double a = 0.9;
    double b = 0.9;
    double eta = 0.5;
    double noise_intensity = 0.03;
    int total_steps = 2500;
    int transient_steps = 500;
    std::uint64_t seed = 0;
    double x0 = 0.0;
    double y0 = 0.0;
};

/// Master-slave logistic maps: Y(t) = A1*Y(t-1)*(1-Y(t-1)),
/// X(t) = (1-eta)*A2*X(t-1)*(1-X(t-1)) + eta*Y(t-1).
struct LogisticConfig {
    double A1 = 4.0;
    double A2 = 3.82;
    double eta = 0.4;
    int total_steps = 2500;
    int transient_steps = 500;
    std::uint64_t seed = 0;
    /// When unset, initial values are drawn uniformly in (0,1),
    /// avoiding the fixed points of each map.
    std::optional<double> x0;
    std::optional<double> y0;
};

struct SeriesPair {
    std::vector<double> x;
    std::vector<double> y;
};

/// Derives a decorrelated sub-seed; used to split one user seed into
/// independent noise streams and per-trial seeds.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

/// Simulates the coupled AR(p) pair and drops the transient prefix.
/// The X and Y noise streams are seeded independently from cfg.seed, so
/// with eta = 0 the X series does not depend on the Y stream.
SeriesPair gen_coupled_ar(const ARConfig& cfg);

/// Same recursion with explicitly chosen noise-stream seeds.
SeriesPair gen_coupled_ar_streams(const ARConfig& cfg, std::uint64_t x_noise_seed,
                                  std::uint64_t y_noise_seed);

SeriesPair gen_coupled_logistic(const LogisticConfig& cfg);

/// The AR(1) classification dataset: 450 steps with a = b = 0.8,
/// eta = 0.7, nu = 0.03, X(0) = Y(0) = 0; first 150 transients dropped.
/// Feature = Y series, target = X series binned into 2 classes.
LabeledDataset gen_ar_classification(std::uint64_t seed);

}  // namespace lzcdt
