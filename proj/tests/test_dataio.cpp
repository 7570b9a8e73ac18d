#include "lzcdt/dataio.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <random>
#include <stdexcept>

#include "doctest.h"

using namespace lzcdt;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("lzcdt_test_" + std::to_string(std::random_device{}()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

void write_file(const fs::path& p, const std::string& content) {
    std::ofstream out(p);
    out << content;
}

}  // namespace

TEST_CASE("numeric CSV loads with preserved row order") {
    TempDir tmp;
    write_file(tmp.path / "d.csv", "a,b,label\n1.5,2,x\n3,4.25,y\n");
    const CsvLoadReport report = load_csv(tmp.path / "d.csv");
    CHECK(report.dropped_rows == 0);
    CHECK(report.data.n_rows() == 2);
    CHECK(report.data.n_features() == 2);
    CHECK(report.data.features[0] == std::vector<double>{1.5, 2.0});
    CHECK(report.data.features[1] == std::vector<double>{3.0, 4.25});
    CHECK(report.data.class_labels == std::vector<std::string>{"x", "y"});
    CHECK(report.data.targets == std::vector<int>{0, 1});
}

TEST_CASE("categorical columns are ordinal-encoded with the map retained") {
    TempDir tmp;
    write_file(tmp.path / "d.csv", "color,label\nx,0\ny,1\nx,0\n");
    const LabeledDataset data = load_csv(tmp.path / "d.csv").data;
    CHECK(data.column(0) == std::vector<double>{0, 1, 0});
    CHECK(data.categorical_maps.at("color").at("y") == 1);
}

TEST_CASE("rows with missing cells are dropped and counted") {
    TempDir tmp;
    write_file(tmp.path / "d.csv", "a,label\n1,x\n?,y\n3,x\n,y\n4,NA\n");
    const CsvLoadReport report = load_csv(tmp.path / "d.csv");
    CHECK(report.dropped_rows == 3);
    CHECK(report.data.n_rows() == 2);
}

TEST_CASE("target column can be selected by name") {
    TempDir tmp;
    write_file(tmp.path / "d.csv", "a,label,b\n1,x,9\n2,y,8\n");
    const LabeledDataset data = load_csv(tmp.path / "d.csv", "label").data;
    CHECK(data.feature_names == std::vector<std::string>{"a", "b"});
    CHECK(data.class_labels == std::vector<std::string>{"x", "y"});
    CHECK_THROWS(load_csv(tmp.path / "d.csv", "nope"));
}

TEST_CASE("ragged and empty files are rejected") {
    TempDir tmp;
    write_file(tmp.path / "ragged.csv", "a,b\n1,2\n3\n");
    CHECK_THROWS(load_csv(tmp.path / "ragged.csv"));
    write_file(tmp.path / "empty.csv", "");
    CHECK_THROWS(load_csv(tmp.path / "empty.csv"));
    CHECK_THROWS(load_csv(tmp.path / "absent.csv"));
}

TEST_CASE("the bundled iris fixture has the expected shape") {
    const fs::path iris = fs::path(LZCDT_DATA_DIR) / "iris.csv";
    const LabeledDataset data = load_csv(iris).data;
    CHECK(data.n_rows() == 150);
    CHECK(data.n_features() == 4);
    CHECK(data.class_labels.size() == 3);
}

TEST_CASE("tuebingen loader round-trips a small fixture") {
    TempDir tmp;
    write_file(tmp.path / "pair0001.txt", "1.0 2.0\n1.5 2.5\n2.0 3.0\n");
    write_file(tmp.path / "pair0002.txt", "0.1 9.0\n0.2 8.0\n0.3 7.0\n");
    write_file(tmp.path / "pair0003.txt", "1 2 3\n4 5 6\n");  // 3 columns: skipped
    write_file(tmp.path / "pairmeta.txt",
               "0001 1 1 2 2 1\n0002 2 2 1 1 1\n0003 1 1 2 2 1\n");

    const TuebingenLoadReport report =
        load_tuebingen(tmp.path, tmp.path / "pairmeta.txt");
    REQUIRE(report.pairs.size() == 2);
    CHECK(report.pairs[0].id == "pair0001");
    CHECK(report.pairs[0].x_causes_y);
    CHECK_FALSE(report.pairs[1].x_causes_y);
    CHECK(report.pairs[0].x == std::vector<double>{1.0, 1.5, 2.0});
    CHECK(report.skipped == std::vector<std::string>{"pair0003"});

    const TuebingenLoadReport excluded =
        load_tuebingen(tmp.path, tmp.path / "pairmeta.txt", {"pair0001"});
    CHECK(excluded.pairs.size() == 1);
    CHECK(excluded.pairs[0].id == "pair0002");

    CHECK_THROWS(load_tuebingen(tmp.path, tmp.path / "nope.txt"));
}

TEST_CASE("DOT export structure") {
    LabeledDataset data;
    data.features = {{1}, {2}, {3}, {4}};
    data.targets = {0, 0, 1, 1};
    data.feature_names = {"f0"};
    data.class_labels = {"a", "b"};

    const DecisionTree depth1 = fit(data, SplitCriterion::Gini, {1, 2});
    const std::string dot = export_tree_dot(depth1, data.feature_names);
    CHECK(dot.find("digraph") != std::string::npos);
    CHECK(dot.find("f0 <") != std::string::npos);
    CHECK(std::count(dot.begin(), dot.end(), '>') >= 2);  // two edges
    CHECK(dot == export_tree_dot(depth1, data.feature_names));

    data.targets = {0, 0, 0, 0};
    data.class_labels = {"a"};
    const DecisionTree leaf = fit(data, SplitCriterion::Gini, {1, 2});
    const std::string leaf_dot = export_tree_dot(leaf, data.feature_names);
    CHECK(leaf_dot.find("class 0") != std::string::npos);
    CHECK(leaf_dot.find("->") == std::string::npos);

    CHECK_THROWS_AS(export_tree_dot(depth1, {"a", "b"}), std::invalid_argument);
}

TEST_CASE("metrics and grid results round-trip through save/load") {
    TempDir tmp;
    MetricsReport metrics;
    metrics.accuracy = 0.75;
    metrics.macro_f1 = 0.5;
    metrics.macro_precision = 0.6;
    metrics.macro_recall = 0.45;
    metrics.confusion = {{3, 1}, {1, 3}};
    save_results(metrics, tmp.path / "m.json");
    const MetricsReport metrics2 = load_results<MetricsReport>(tmp.path / "m.json");
    CHECK(metrics2.accuracy == metrics.accuracy);
    CHECK(metrics2.confusion == metrics.confusion);

    GridSearchResult grid;
    grid.best_min_samples = 3;
    grid.best_max_depth = 7;
    grid.best_mean_f1 = 0.9;
    grid.cells = {{1, 1, 0.5, 0.01}, {3, 7, 0.9, 0.0}};
    save_results(grid, tmp.path / "g.json");
    const GridSearchResult grid2 = load_results<GridSearchResult>(tmp.path / "g.json");
    CHECK(grid2.best_max_depth == 7);
    CHECK(grid2.cells.size() == 2);
    CHECK(grid2.cells[1].mean_f1 == 0.9);
}

TEST_CASE("trees and sweep tables round-trip") {
    TempDir tmp;
    LabeledDataset data;
    data.features = {{1, 9}, {2, 8}, {3, 7}, {4, 6}};
    data.targets = {0, 0, 1, 1};
    data.feature_names = {"f0", "f1"};
    data.class_labels = {"a", "b"};
    const DecisionTree tree = fit(data, SplitCriterion::LZCausal, {3, 2}, 5, "toy");
    save_results(tree, tmp.path / "t.json");
    const DecisionTree tree2 = load_results<DecisionTree>(tmp.path / "t.json");
    CHECK(nlohmann::json(tree2) == nlohmann::json(tree));
    CHECK(predict(tree2, data.features) == predict(tree, data.features));

    SweepTable table;
    table.param_name = "eta";
    table.rows = {{0.1, 1, 2, 3, 4}, {0.2, 5, 6, 7, 8}};
    save_results(table, tmp.path / "s.json");
    const SweepTable table2 = load_results<SweepTable>(tmp.path / "s.json");
    CHECK(nlohmann::json(table2) == nlohmann::json(table));
}

TEST_CASE("corrupted result files are reported with context") {
    TempDir tmp;
    write_file(tmp.path / "bad.json", "{not json");
    CHECK_THROWS_WITH_AS(load_results<MetricsReport>(tmp.path / "bad.json"),
                         doctest::Contains("bad.json"), std::runtime_error);

    write_file(tmp.path / "wrong.json",
               "{\"schema_version\": 1, \"payload\": {\"accuracy\": 1.0}}");
    CHECK_THROWS_WITH_AS(load_results<MetricsReport>(tmp.path / "wrong.json"),
                         doctest::Contains("macro_f1"), std::runtime_error);

    write_file(tmp.path / "old.json", "{\"schema_version\": 99, \"payload\": {}}");
    CHECK_THROWS(load_results<MetricsReport>(tmp.path / "old.json"));
}
