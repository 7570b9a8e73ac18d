#include "lzcdt/synthgen.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "lzcdt/symbolize.hpp"

namespace lzcdt {

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
    // splitmix64 finalizer over (seed, stream)
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

namespace {

void validate_steps(int total_steps, int transient_steps) {
    if (total_steps < 1) throw std::invalid_argument("total_steps must be positive");
    if (transient_steps < 0 || transient_steps >= total_steps)
        throw std::invalid_argument("transient_steps must be in [0, total_steps)");
}

std::vector<double> drop_transients(std::vector<double> series, int transient_steps) {
    series.erase(series.begin(), series.begin() + transient_steps);
    return series;
}

}  // namespace

SeriesPair gen_coupled_ar(const ARConfig& cfg) {
    return gen_coupled_ar_streams(cfg, derive_seed(cfg.seed, 0), derive_seed(cfg.seed, 1));
}

SeriesPair gen_coupled_ar_streams(const ARConfig& cfg, std::uint64_t x_noise_seed,
                                  std::uint64_t y_noise_seed) {
    validate_steps(cfg.total_steps, cfg.transient_steps);
    if (cfg.p < 1) throw std::invalid_argument("AR lag p must be positive");
    if (cfg.p >= cfg.total_steps) throw std::invalid_argument("AR lag p must be < total_steps");
    if (cfg.noise_intensity < 0.0) throw std::invalid_argument("noise_intensity must be >= 0");

    std::mt19937_64 rng_x(x_noise_seed), rng_y(y_noise_seed);
    // one distribution per stream: normal_distribution caches a spare
    // variate, so sharing one would couple the streams
    std::normal_distribution<double> gauss_x(0.0, 1.0), gauss_y(0.0, 1.0);

    std::vector<double> x(cfg.total_steps, 0.0), y(cfg.total_steps, 0.0);
    x[0] = cfg.x0;
    y[0] = cfg.y0;
    // pre-lag values Y(t-p) for t <= p are taken as 0
    for (int t = 1; t < cfg.total_steps; ++t) {
        const double y_lag = (t - cfg.p >= 0) ? y[t - cfg.p] : 0.0;
        y[t] = cfg.b * y[t - 1] + cfg.noise_intensity * gauss_y(rng_y);
        x[t] = cfg.a * x[t - 1] + cfg.eta * y_lag + cfg.noise_intensity * gauss_x(rng_x);
    }
    return {drop_transients(std::move(x), cfg.transient_steps),
            drop_transients(std::move(y), cfg.transient_steps)};
}

SeriesPair gen_coupled_logistic(const LogisticConfig& cfg) {
    validate_steps(cfg.total_steps, cfg.transient_steps);
    if (cfg.eta < 0.0 || cfg.eta > 1.0)
        throw std::invalid_argument("logistic coupling eta must be in [0, 1]");
    if (cfg.A1 <= 0.0 || cfg.A1 > 4.0 || cfg.A2 <= 0.0 || cfg.A2 > 4.0)
        throw std::invalid_argument("logistic parameters A1, A2 must be in (0, 4]");

    std::mt19937_64 rng(derive_seed(cfg.seed, 2));
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    auto draw_initial = [&](double map_param) {
        // avoid exact fixed points 0 and 1 - 1/A, which kill the dynamics
        const double fixed = 1.0 - 1.0 / map_param;
        double v;
        do {
            v = unif(rng);
        } while (v <= 0.0 || v >= 1.0 || v == fixed);
        return v;
    };

    const double y0 = cfg.y0 ? *cfg.y0 : draw_initial(cfg.A1);
    const double x0 = cfg.x0 ? *cfg.x0 : draw_initial(cfg.A2);
    if (x0 <= 0.0 || x0 >= 1.0 || y0 <= 0.0 || y0 >= 1.0)
        throw std::invalid_argument("logistic initial values must lie in (0, 1)");

    std::vector<double> x(cfg.total_steps), y(cfg.total_steps);
    x[0] = x0;
    y[0] = y0;
    for (int t = 1; t < cfg.total_steps; ++t) {
        y[t] = cfg.A1 * y[t - 1] * (1.0 - y[t - 1]);
        x[t] = (1.0 - cfg.eta) * cfg.A2 * x[t - 1] * (1.0 - x[t - 1]) + cfg.eta * y[t - 1];
    }
    return {drop_transients(std::move(x), cfg.transient_steps),
            drop_transients(std::move(y), cfg.transient_steps)};
}

LabeledDataset gen_ar_classification(std::uint64_t seed) {
    ARConfig cfg;
    cfg.p = 1;
    cfg.a = 0.8;
    cfg.b = 0.8;
    cfg.eta = 0.7;
    cfg.noise_intensity = 0.03;
    cfg.total_steps = 450;
    cfg.transient_steps = 150;
    cfg.seed = seed;
    SeriesPair pair = gen_coupled_ar(cfg);

    SymbolSequence classes = equiwidth_bin(pair.x, BinningSpec{2, {}, {}});

    LabeledDataset data;
    data.feature_names = {"Y"};
    data.class_labels = {"low", "high"};
    data.features.reserve(pair.y.size());
    data.targets.reserve(pair.y.size());
    for (std::size_t i = 0; i < pair.y.size(); ++i) {
        data.features.push_back({pair.y[i]});
        data.targets.push_back(classes.symbols[i]);
    }
    return data;
}

}  // namespace lzcdt
