#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "json.hpp"
#include "lzcdt/causal_tree.hpp"
#include "lzcdt/dataset.hpp"
#include "lzcdt/evalbench.hpp"
#include "lzcdt/lz_core.hpp"

namespace lzcdt {

struct CsvLoadReport {
    LabeledDataset data;
    std::size_t dropped_rows = 0;  // rows removed for missing cells
};

/// Loads a header-row CSV. Numeric columns parse as reals; anything
/// else is ordinal-encoded by first appearance. Rows with missing
/// cells ("", "?", "NA") are dropped and counted. The target column is
/// selected by name, or the last column when the name is empty.
CsvLoadReport load_csv(const std::filesystem::path& path, const std::string& target_column = "");

struct TuebingenLoadReport {
    std::vector<TuebingenPair> pairs;
    std::vector<std::string> skipped;  // ids of pairs with != 2 columns
};

/// Loads pair files matching "pair*.txt" under dir, minus exclusions.
/// The metadata file uses the benchmark's pairmeta layout: one line per
/// pair with id, cause column range, effect column range, and an
/// optional weight (which is ignored; accuracy is unweighted).
TuebingenLoadReport load_tuebingen(const std::filesystem::path& dir,
                                   const std::filesystem::path& metadata_path,
                                   const std::vector<std::string>& exclusions = {});

/// DOT digraph of the tree: split nodes labeled "name < threshold",
/// leaves labeled with class and sample count. Node ids follow
/// pre-order, so the text is stable for a given tree.
std::string export_tree_dot(const DecisionTree& tree,
                            const std::vector<std::string>& feature_names);

// JSON bindings. Every saved file carries a schema_version field.
void to_json(nlohmann::json& j, const MetricsReport& r);
void from_json(const nlohmann::json& j, MetricsReport& r);
void to_json(nlohmann::json& j, const GridCell& c);
void from_json(const nlohmann::json& j, GridCell& c);
void to_json(nlohmann::json& j, const GridSearchResult& r);
void from_json(const nlohmann::json& j, GridSearchResult& r);
void to_json(nlohmann::json& j, const SweepRow& r);
void from_json(const nlohmann::json& j, SweepRow& r);
void to_json(nlohmann::json& j, const SweepTable& t);
void from_json(const nlohmann::json& j, SweepTable& t);
void to_json(nlohmann::json& j, const DecisionRatePoint& p);
void from_json(const nlohmann::json& j, DecisionRatePoint& p);
void to_json(nlohmann::json& j, const TuebingenResult& r);
void from_json(const nlohmann::json& j, TuebingenResult& r);
void to_json(nlohmann::json& j, const PenaltyReport& r);
void from_json(const nlohmann::json& j, PenaltyReport& r);
void to_json(nlohmann::json& j, const DecisionTree& t);
void from_json(const nlohmann::json& j, DecisionTree& t);

inline constexpr int kResultSchemaVersion = 1;

/// Writes {"schema_version": ..., "payload": x} as pretty JSON.
template <typename T>
void save_results(const T& x, const std::filesystem::path& path);

/// Reads a file written by save_results. Parse or schema errors are
/// reported with the path and offending field.
template <typename T>
T load_results(const std::filesystem::path& path);

// implemented in dataio.cpp for the serializable types above
nlohmann::json read_result_payload(const std::filesystem::path& path);
void write_result_payload(const nlohmann::json& payload, const std::filesystem::path& path);

template <typename T>
void save_results(const T& x, const std::filesystem::path& path) {
    write_result_payload(nlohmann::json(x), path);
}

template <typename T>
T load_results(const std::filesystem::path& path) {
    try {
        return read_result_payload(path).get<T>();
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error("failed to decode " + path.string() + ": " + e.what());
    }
}

}  // namespace lzcdt
