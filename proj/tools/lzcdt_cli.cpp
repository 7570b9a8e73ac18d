#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lzcdt/causal_tree.hpp"
#include "lzcdt/dataio.hpp"
#include "lzcdt/evalbench.hpp"
#include "lzcdt/lz_core.hpp"
#include "lzcdt/symbolize.hpp"
#include "lzcdt/synthgen.hpp"

namespace fs = std::filesystem;
using namespace lzcdt;

namespace {

// Fixed-width round-trip formatting keeps table output byte-stable.
std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string join(const std::vector<double>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) out += ",";
        out += fmt(values[i]);
    }
    return out;
}

// Resolved-config echo placed at the top of every table. Execution
// details like --jobs are excluded so output stays identical for any
// worker count.
std::string config_line(const std::vector<std::pair<std::string, std::string>>& kv) {
    std::string line = "# config:";
    for (const auto& [key, value] : kv) line += " " + key + "=" + value;
    return line + "\n";
}

void write_text(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open --out path: " + out_path);
    out << text;
}

std::string sweep_csv(const SweepTable& table, const std::string& config) {
    std::string text = config;
    text += table.param_name + ",mean_x_to_y,std_x_to_y,mean_y_to_x,std_y_to_x\n";
    for (const SweepRow& row : table.rows)
        text += fmt(row.param) + "," + fmt(row.mean_x_to_y) + "," + fmt(row.std_x_to_y) +
                "," + fmt(row.mean_y_to_x) + "," + fmt(row.std_y_to_x) + "\n";
    return text;
}

// Relative dataset paths fall back to the directory named by
// LZCDT_DATA_DIR when the file is not found where given.
fs::path resolve_dataset(const std::string& path) {
    fs::path p(path);
    if (fs::exists(p) || p.is_absolute()) return p;
    if (const char* dir = std::getenv("LZCDT_DATA_DIR"))
        if (*dir != '\0' && fs::exists(fs::path(dir) / p)) return fs::path(dir) / p;
    return p;
}

std::vector<std::pair<double, double>> load_pair_csv(const fs::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open input: " + path.string());
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("empty input: " + path.string());
    std::vector<std::pair<double, double>> rows;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const std::size_t comma = line.find(',');
        if (comma == std::string::npos || line.find(',', comma + 1) != std::string::npos)
            throw std::runtime_error("expected exactly two columns in " + path.string());
        rows.emplace_back(std::stod(line.substr(0, comma)), std::stod(line.substr(comma + 1)));
    }
    if (rows.empty()) throw std::runtime_error("no data rows in " + path.string());
    return rows;
}

// ---------------------------------------------------------------- gen

struct GenArArgs {
    ARConfig cfg;
    int length = 2000;
    std::string out;
};

void run_gen_ar(const GenArArgs& args) {
    ARConfig cfg = args.cfg;
    cfg.total_steps = args.length + cfg.transient_steps;
    const SeriesPair pair = gen_coupled_ar(cfg);
    std::string text = config_line({{"cmd", "gen ar"},
                                    {"p", std::to_string(cfg.p)},
                                    {"a", fmt(cfg.a)},
                                    {"b", fmt(cfg.b)},
                                    {"eta", fmt(cfg.eta)},
                                    {"noise", fmt(cfg.noise_intensity)},
                                    {"length", std::to_string(args.length)},
                                    {"transient", std::to_string(cfg.transient_steps)},
                                    {"seed", std::to_string(cfg.seed)}});
    text += "X,Y\n";
    for (std::size_t t = 0; t < pair.x.size(); ++t)
        text += fmt(pair.x[t]) + "," + fmt(pair.y[t]) + "\n";
    write_text(text, args.out);
    std::cerr << "wrote " << pair.x.size() << " rows\n";
}

struct GenLogisticArgs {
    LogisticConfig cfg;
    int length = 2000;
    std::string out;
};

void run_gen_logistic(const GenLogisticArgs& args) {
    LogisticConfig cfg = args.cfg;
    cfg.total_steps = args.length + cfg.transient_steps;
    const SeriesPair pair = gen_coupled_logistic(cfg);
    std::string text = config_line({{"cmd", "gen logistic"},
                                    {"A1", fmt(cfg.A1)},
                                    {"A2", fmt(cfg.A2)},
                                    {"eta", fmt(cfg.eta)},
                                    {"length", std::to_string(args.length)},
                                    {"transient", std::to_string(cfg.transient_steps)},
                                    {"seed", std::to_string(cfg.seed)}});
    text += "X,Y\n";
    for (std::size_t t = 0; t < pair.x.size(); ++t)
        text += fmt(pair.x[t]) + "," + fmt(pair.y[t]) + "\n";
    write_text(text, args.out);
    std::cerr << "wrote " << pair.x.size() << " rows\n";
}

void run_gen_ar_dataset(std::uint64_t seed, const std::string& out) {
    const LabeledDataset data = gen_ar_classification(seed);
    std::string text = config_line({{"cmd", "gen ar-dataset"}, {"seed", std::to_string(seed)}});
    text += data.feature_names[0] + ",class\n";
    for (std::size_t i = 0; i < data.n_rows(); ++i)
        text += fmt(data.features[i][0]) + "," + data.class_labels[data.targets[i]] + "\n";
    write_text(text, out);
    std::cerr << "wrote " << data.n_rows() << " rows\n";
}

// ---------------------------------------------------------------- causality

struct CausalityArgs {
    std::string input;
    std::string x_digits, y_digits;
    int bins = 2;
    std::uint64_t seed = 0;
    std::string out;
};

void run_causality(const CausalityArgs& args) {
    SymbolSequence x, y;
    if (!args.x_digits.empty()) {
        int alphabet = 2;
        for (const std::string& s : {args.x_digits, args.y_digits})
            for (char c : s) alphabet = std::max(alphabet, c - '0' + 1);
        x = SymbolSequence::from_digits(args.x_digits, alphabet);
        y = SymbolSequence::from_digits(args.y_digits, alphabet);
    } else {
        const auto rows = load_pair_csv(resolve_dataset(args.input));
        std::vector<double> xs, ys;
        for (const auto& [a, b] : rows) {
            xs.push_back(a);
            ys.push_back(b);
        }
        x = equiwidth_bin(xs, {args.bins, {}, {}});
        y = equiwidth_bin(ys, {args.bins, {}, {}});
    }
    const PenaltyReport report = causality_report(x, y, args.seed);
    nlohmann::json j = report;
    const std::string text = j.dump(2) + "\n";
    std::cout << text;
    if (!args.out.empty()) save_results(report, args.out);
}

// ---------------------------------------------------------------- tree

struct TreeArgs {
    std::string dataset;
    std::string target_column;
    std::string criterion = "gini";
    TreeHyperparams hp;
    std::string split = "shuffled";
    double ratio = 0.8;
    std::uint64_t seed = 0;
    std::string out;
    bool want_ranking = false;
};

void run_tree(const TreeArgs& args) {
    const fs::path path = resolve_dataset(args.dataset);
    const CsvLoadReport loaded = load_csv(path, args.target_column);
    if (loaded.dropped_rows > 0)
        std::cerr << "dropped " << loaded.dropped_rows << " rows with missing cells\n";
    const SplitCriterion criterion = criterion_from_string(args.criterion);
    const auto [train, test] =
        split_train_test(loaded.data, args.ratio, args.split == "ordered", args.seed);
    const DecisionTree tree =
        fit(train, criterion, args.hp, args.seed, path.filename().string());
    const MetricsReport metrics = compute_metrics(test.targets, predict(tree, test.features));

    std::cout << config_line({{"cmd", "tree"},
                              {"dataset", path.filename().string()},
                              {"criterion", args.criterion},
                              {"max_depth", std::to_string(args.hp.max_depth)},
                              {"min_samples", std::to_string(args.hp.min_samples)},
                              {"split", args.split},
                              {"ratio", fmt(args.ratio)},
                              {"seed", std::to_string(args.seed)}});
    std::cout << "accuracy=" << fmt(metrics.accuracy)
              << " macro_f1=" << fmt(metrics.macro_f1)
              << " imbalance=" << fmt(imbalance_ratio(train.targets)) << "\n";

    if (!args.out.empty()) {
        const fs::path out(args.out);
        const fs::path stem = out.parent_path() / out.stem();
        save_results(tree, out);
        save_results(metrics, stem.string() + ".metrics.json");
        write_text(export_tree_dot(tree, loaded.data.feature_names), stem.string() + ".dot");
        if (args.want_ranking || criterion == SplitCriterion::LZCausal) {
            const CausalStrengthRanking ranking = causal_strength(tree);
            std::string text = "feature,strength\n";
            for (std::size_t idx : ranking.ranking)
                text += loaded.data.feature_names[idx] + "," + fmt(ranking.scores[idx]) + "\n";
            write_text(text, stem.string() + ".ranking.csv");
        }
    }
}

// ---------------------------------------------------------------- bench

struct BenchCommon {
    std::uint64_t seed = 0;
    int jobs = 1;
    std::string out;
};

void run_bench_trees(const std::string& dataset, const std::string& target,
                     const std::string& cv, const std::string& split, double ratio,
                     const BenchCommon& common) {
    const fs::path path = resolve_dataset(dataset);
    const LabeledDataset data = load_csv(path, target).data;
    const auto [train, test] =
        split_train_test(data, ratio, split == "ordered", common.seed);
    const CVScheme scheme{cv == "timeseries" ? CVKind::TimeSeriesSplit
                                             : CVKind::StratifiedKFold,
                          5, common.seed};
    std::string text = config_line({{"cmd", "bench trees"},
                                    {"dataset", path.filename().string()},
                                    {"cv", cv},
                                    {"split", split},
                                    {"ratio", fmt(ratio)},
                                    {"seed", std::to_string(common.seed)}});
    text += "criterion,best_max_depth,best_min_samples,cv_mean_f1,test_accuracy,test_macro_f1\n";
    for (SplitCriterion criterion :
         {SplitCriterion::LZCausal, SplitCriterion::LZDistance, SplitCriterion::Gini}) {
        const GridSearchResult grid = grid_search(train, criterion, scheme);
        const DecisionTree tree =
            fit(train, criterion, {grid.best_max_depth, grid.best_min_samples},
                common.seed, path.filename().string());
        const MetricsReport metrics =
            compute_metrics(test.targets, predict(tree, test.features));
        text += to_string(criterion) + "," + std::to_string(grid.best_max_depth) + "," +
                std::to_string(grid.best_min_samples) + "," + fmt(grid.best_mean_f1) +
                "," + fmt(metrics.accuracy) + "," + fmt(metrics.macro_f1) + "\n";
    }
    write_text(text, common.out);
}

void run_bench_tuebingen(const std::string& pairs_dir, const std::string& meta,
                         const std::vector<std::string>& exclude, int bins,
                         const std::string& format, const BenchCommon& common) {
    const fs::path dir(pairs_dir);
    const fs::path meta_path = meta.empty() ? dir / "pairmeta.txt" : fs::path(meta);
    const TuebingenLoadReport loaded = load_tuebingen(dir, meta_path, exclude);
    for (const std::string& id : loaded.skipped)
        std::cerr << "skipped " << id << " (not a two-column pair)\n";
    const TuebingenResult result = run_tuebingen(loaded.pairs, bins, common.seed);
    std::cerr << "pairs=" << result.n_pairs << " accuracy=" << fmt(result.accuracy)
              << " macro_f1=" << fmt(result.macro_f1) << "\n";
    if (format == "json") {
        if (common.out.empty())
            std::cout << nlohmann::json(result).dump(2) << "\n";
        else
            save_results(result, common.out);
        return;
    }
    std::string text = config_line({{"cmd", "bench tuebingen"},
                                    {"pairs", std::to_string(result.n_pairs)},
                                    {"bins", std::to_string(bins)},
                                    {"seed", std::to_string(common.seed)}});
    text += "k_percent,accuracy\n";
    for (const DecisionRatePoint& point : result.decision_rate_curve)
        text += std::to_string(point.k_percent) + "," + fmt(point.accuracy) + "\n";
    write_text(text, common.out);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Lempel-Ziv causality toolkit"};
    app.require_subcommand(1);

    // ---- gen
    CLI::App* gen = app.add_subcommand("gen", "generate synthetic series and datasets");
    gen->require_subcommand(1);

    GenArArgs gen_ar;
    CLI::App* gen_ar_cmd = gen->add_subcommand("ar", "coupled AR(p) series pair");
    gen_ar_cmd->add_option("--p", gen_ar.cfg.p, "coupling lag")->check(CLI::PositiveNumber);
    gen_ar_cmd->add_option("--a", gen_ar.cfg.a, "X self-coefficient");
    gen_ar_cmd->add_option("--b", gen_ar.cfg.b, "Y self-coefficient");
    gen_ar_cmd->add_option("--eta", gen_ar.cfg.eta, "coupling coefficient");
    gen_ar_cmd->add_option("--noise", gen_ar.cfg.noise_intensity, "noise intensity");
    gen_ar_cmd->add_option("--length", gen_ar.length, "rows kept after the transient")
        ->check(CLI::PositiveNumber);
    gen_ar_cmd->add_option("--transient", gen_ar.cfg.transient_steps, "steps dropped");
    gen_ar_cmd->add_option("--seed", gen_ar.cfg.seed, "rng seed");
    gen_ar_cmd->add_option("--out", gen_ar.out, "output CSV (default stdout)");

    GenLogisticArgs gen_logistic;
    CLI::App* gen_logistic_cmd =
        gen->add_subcommand("logistic", "master-slave logistic map pair");
    gen_logistic_cmd->add_option("--eta", gen_logistic.cfg.eta, "coupling strength")
        ->check(CLI::Range(0.0, 0.9));
    gen_logistic_cmd->add_option("--A1", gen_logistic.cfg.A1, "master map parameter");
    gen_logistic_cmd->add_option("--A2", gen_logistic.cfg.A2, "slave map parameter");
    gen_logistic_cmd
        ->add_option("--length", gen_logistic.length, "rows kept after the transient")
        ->check(CLI::PositiveNumber);
    gen_logistic_cmd->add_option("--transient", gen_logistic.cfg.transient_steps,
                                 "steps dropped");
    gen_logistic_cmd->add_option("--seed", gen_logistic.cfg.seed, "rng seed");
    gen_logistic_cmd->add_option("--out", gen_logistic.out, "output CSV (default stdout)");

    std::uint64_t gen_dataset_seed = 0;
    std::string gen_dataset_out;
    CLI::App* gen_dataset_cmd =
        gen->add_subcommand("ar-dataset", "AR(1) classification dataset (300 rows)");
    gen_dataset_cmd->add_option("--seed", gen_dataset_seed, "rng seed");
    gen_dataset_cmd->add_option("--out", gen_dataset_out, "output CSV (default stdout)");

    // ---- causality
    CausalityArgs causality;
    CLI::App* causality_cmd =
        app.add_subcommand("causality", "directional LZ penalties for a series pair");
    causality_cmd->add_option("--input", causality.input, "two-column CSV with header");
    causality_cmd->add_option("--x", causality.x_digits, "pre-symbolized X digit string");
    causality_cmd->add_option("--y", causality.y_digits, "pre-symbolized Y digit string");
    causality_cmd->add_option("--bins", causality.bins, "equi-width bins")
        ->check(CLI::Range(2, 1000));
    causality_cmd->add_option("--seed", causality.seed, "tie-break seed");
    causality_cmd->add_option("--out", causality.out, "write the report as JSON");

    // ---- tree
    TreeArgs tree;
    CLI::App* tree_cmd = app.add_subcommand("tree", "train and evaluate one decision tree");
    tree_cmd->add_option("--dataset", tree.dataset, "labeled CSV")->required();
    tree_cmd->add_option("--target", tree.target_column, "target column name (default last)");
    tree_cmd->add_option("--criterion", tree.criterion, "causal, distance, or gini")
        ->check(CLI::IsMember({"causal", "distance", "gini"}));
    tree_cmd->add_option("--max-depth", tree.hp.max_depth)->check(CLI::PositiveNumber);
    tree_cmd->add_option("--min-samples", tree.hp.min_samples)->check(CLI::PositiveNumber);
    tree_cmd->add_option("--split", tree.split, "ordered or shuffled")
        ->check(CLI::IsMember({"ordered", "shuffled"}));
    tree_cmd->add_option("--ratio", tree.ratio, "train fraction");
    tree_cmd->add_option("--seed", tree.seed, "split/fit seed");
    tree_cmd->add_option("--out", tree.out,
                         "tree JSON path; also writes .metrics.json and .dot siblings");
    tree_cmd->add_flag("--ranking", tree.want_ranking,
                       "write the causal-strength ranking (implied by --criterion causal)");

    // ---- bench
    CLI::App* bench = app.add_subcommand("bench", "experiment suites");
    bench->require_subcommand(1);

    BenchCommon ar_common;
    int ar_p = 1, ar_trials = 100, ar_length = 2000, ar_bins = 2;
    std::vector<double> ar_etas = {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0};
    CLI::App* bench_ar = bench->add_subcommand("ar-direction", "AR coupling sweep");
    bench_ar->add_option("--p", ar_p)->check(CLI::PositiveNumber);
    bench_ar->add_option("--etas", ar_etas, "comma-separated eta grid")->delimiter(',');
    bench_ar->add_option("--trials", ar_trials)->check(CLI::PositiveNumber);
    bench_ar->add_option("--length", ar_length)->check(CLI::PositiveNumber);
    bench_ar->add_option("--bins", ar_bins)->check(CLI::Range(2, 1000));
    bench_ar->add_option("--seed", ar_common.seed);
    bench_ar->add_option("--jobs", ar_common.jobs)->check(CLI::PositiveNumber);
    bench_ar->add_option("--out", ar_common.out);

    BenchCommon logi_common;
    int logi_trials = 100, logi_length = 2000, logi_bins = 2;
    std::vector<double> logi_etas = {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
    CLI::App* bench_logistic = bench->add_subcommand("logistic", "logistic coupling sweep");
    bench_logistic->add_option("--etas", logi_etas, "comma-separated eta grid")
        ->delimiter(',');
    bench_logistic->add_option("--trials", logi_trials)->check(CLI::PositiveNumber);
    bench_logistic->add_option("--length", logi_length)->check(CLI::PositiveNumber);
    bench_logistic->add_option("--bins", logi_bins)->check(CLI::Range(2, 1000));
    bench_logistic->add_option("--seed", logi_common.seed);
    bench_logistic->add_option("--jobs", logi_common.jobs)->check(CLI::PositiveNumber);
    bench_logistic->add_option("--out", logi_common.out);

    BenchCommon sens_common;
    int sens_trials = 100;
    double sens_b = 0.6;
    std::vector<double> sens_a = {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
    CLI::App* bench_sens =
        bench->add_subcommand("sensitivity", "uncoupled a-sweep spurious-causality probe");
    bench_sens->add_option("--a-grid", sens_a, "comma-separated a grid")->delimiter(',');
    bench_sens->add_option("--b", sens_b, "fixed Y self-coefficient");
    bench_sens->add_option("--trials", sens_trials)->check(CLI::PositiveNumber);
    bench_sens->add_option("--seed", sens_common.seed);
    bench_sens->add_option("--jobs", sens_common.jobs)->check(CLI::PositiveNumber);
    bench_sens->add_option("--out", sens_common.out);

    BenchCommon tueb_common;
    std::string tueb_pairs, tueb_meta, tueb_format = "csv";
    std::vector<std::string> tueb_exclude;
    int tueb_bins = 2;
    CLI::App* bench_tueb = bench->add_subcommand("tuebingen", "cause-effect pair benchmark");
    bench_tueb->add_option("--pairs", tueb_pairs, "pair directory")->required();
    bench_tueb->add_option("--meta", tueb_meta, "metadata path (default pairs/pairmeta.txt)");
    bench_tueb->add_option("--exclude", tueb_exclude, "pair ids to skip")->delimiter(',');
    bench_tueb->add_option("--bins", tueb_bins)->check(CLI::Range(2, 1000));
    bench_tueb->add_option("--format", tueb_format)->check(CLI::IsMember({"csv", "json"}));
    bench_tueb->add_option("--seed", tueb_common.seed);
    bench_tueb->add_option("--out", tueb_common.out);

    BenchCommon trees_common;
    std::string trees_dataset, trees_target, trees_cv = "stratified",
                trees_split = "shuffled";
    double trees_ratio = 0.8;
    CLI::App* bench_trees =
        bench->add_subcommand("trees", "grid search + final fit per criterion");
    bench_trees->add_option("--dataset", trees_dataset, "labeled CSV")->required();
    bench_trees->add_option("--target", trees_target, "target column name (default last)");
    bench_trees->add_option("--cv", trees_cv, "stratified or timeseries")
        ->check(CLI::IsMember({"stratified", "timeseries"}));
    bench_trees->add_option("--split", trees_split, "ordered or shuffled")
        ->check(CLI::IsMember({"ordered", "shuffled"}));
    bench_trees->add_option("--ratio", trees_ratio, "train fraction");
    bench_trees->add_option("--seed", trees_common.seed);
    bench_trees->add_option("--out", trees_common.out);

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen_ar_cmd->parsed()) {
            run_gen_ar(gen_ar);
        } else if (gen_logistic_cmd->parsed()) {
            run_gen_logistic(gen_logistic);
        } else if (gen_dataset_cmd->parsed()) {
            run_gen_ar_dataset(gen_dataset_seed, gen_dataset_out);
        } else if (causality_cmd->parsed()) {
            if (causality.input.empty() == causality.x_digits.empty())
                throw std::runtime_error("pass either --input or both --x and --y");
            if (causality.input.empty() && causality.y_digits.empty())
                throw std::runtime_error("--y is required with --x");
            run_causality(causality);
        } else if (tree_cmd->parsed()) {
            run_tree(tree);
        } else if (bench_ar->parsed()) {
            const SweepTable table = run_ar_direction_experiment(
                ar_p, ar_etas, ar_trials, ar_length, ar_bins, ar_common.seed,
                ar_common.jobs);
            write_text(
                sweep_csv(table, config_line({{"cmd", "bench ar-direction"},
                                              {"p", std::to_string(ar_p)},
                                              {"etas", join(ar_etas)},
                                              {"trials", std::to_string(ar_trials)},
                                              {"length", std::to_string(ar_length)},
                                              {"bins", std::to_string(ar_bins)},
                                              {"seed", std::to_string(ar_common.seed)}})),
                ar_common.out);
        } else if (bench_logistic->parsed()) {
            const SweepTable table =
                run_logistic_experiment(logi_etas, logi_trials, logi_length, logi_bins,
                                        logi_common.seed, logi_common.jobs);
            write_text(
                sweep_csv(table, config_line({{"cmd", "bench logistic"},
                                              {"etas", join(logi_etas)},
                                              {"trials", std::to_string(logi_trials)},
                                              {"length", std::to_string(logi_length)},
                                              {"bins", std::to_string(logi_bins)},
                                              {"seed", std::to_string(logi_common.seed)}})),
                logi_common.out);
        } else if (bench_sens->parsed()) {
            const SweepTable table = run_sensitivity_experiment(
                sens_a, sens_b, sens_trials, sens_common.seed, sens_common.jobs);
            write_text(
                sweep_csv(table, config_line({{"cmd", "bench sensitivity"},
                                              {"a_grid", join(sens_a)},
                                              {"b", fmt(sens_b)},
                                              {"trials", std::to_string(sens_trials)},
                                              {"seed", std::to_string(sens_common.seed)}})),
                sens_common.out);
        } else if (bench_tueb->parsed()) {
            run_bench_tuebingen(tueb_pairs, tueb_meta, tueb_exclude, tueb_bins,
                                tueb_format, tueb_common);
        } else if (bench_trees->parsed()) {
            run_bench_trees(trees_dataset, trees_target, trees_cv, trees_split,
                            trees_ratio, trees_common);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
