#include "lzcdt/dataio.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "lzcdt/symbolize.hpp"

namespace lzcdt {

namespace {

bool is_missing(const std::string& cell) {
    return cell.empty() || cell == "?" || cell == "NA" || cell == "na";
}

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    bool quoted = false;
    for (char c : line) {
        if (c == '"') {
            quoted = !quoted;
        } else if (c == ',' && !quoted) {
            cells.push_back(trim(cell));
            cell.clear();
        } else {
            cell.push_back(c);
        }
    }
    cells.push_back(trim(cell));
    return cells;
}

bool parse_double(const std::string& s, double& out) {
    const char* first = s.data();
    const char* last = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc() && ptr == last;
}

}  // namespace

CsvLoadReport load_csv(const std::filesystem::path& path, const std::string& target_column) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("load_csv: cannot open " + path.string());

    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("load_csv: empty file " + path.string());
    const std::vector<std::string> header = split_csv_line(line);
    const std::size_t n_cols = header.size();

    std::size_t target_idx = n_cols - 1;
    if (!target_column.empty()) {
        const auto it = std::find(header.begin(), header.end(), target_column);
        if (it == header.end())
            throw std::runtime_error("load_csv: target column '" + target_column +
                                     "' not found in " + path.string());
        target_idx = static_cast<std::size_t>(it - header.begin());
    }

    std::vector<std::vector<std::string>> rows;
    CsvLoadReport report;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty()) continue;
        std::vector<std::string> cells = split_csv_line(line);
        if (cells.size() != n_cols)
            throw std::runtime_error("load_csv: ragged row at line " + std::to_string(line_no) +
                                     " in " + path.string());
        if (std::any_of(cells.begin(), cells.end(), is_missing)) {
            ++report.dropped_rows;
            continue;
        }
        rows.push_back(std::move(cells));
    }
    if (rows.empty()) throw std::runtime_error("load_csv: no data rows in " + path.string());

    LabeledDataset& data = report.data;
    for (std::size_t c = 0; c < n_cols; ++c)
        if (c != target_idx) data.feature_names.push_back(header[c]);

    // a column is numeric only if every cell parses as a real
    std::vector<bool> numeric(n_cols, true);
    for (std::size_t c = 0; c < n_cols; ++c) {
        double v;
        for (const auto& row : rows) {
            if (!parse_double(row[c], v)) {
                numeric[c] = false;
                break;
            }
        }
    }

    std::vector<std::vector<double>> columns(n_cols);
    for (std::size_t c = 0; c < n_cols; ++c) {
        if (c == target_idx) continue;
        if (numeric[c]) {
            for (const auto& row : rows) {
                double v;
                parse_double(row[c], v);
                columns[c].push_back(v);
            }
        } else {
            std::vector<std::string> tokens;
            tokens.reserve(rows.size());
            for (const auto& row : rows) tokens.push_back(row[c]);
            CategoricalEncoding enc = encode_categorical(tokens);
            columns[c] = std::move(enc.codes);
            data.categorical_maps[header[c]] = std::move(enc.token_to_code);
        }
    }

    // class labels in first-appearance order
    std::map<std::string, int> label_code;
    for (const auto& row : rows) {
        const std::string& token = row[target_idx];
        auto [it, inserted] = label_code.emplace(token, static_cast<int>(data.class_labels.size()));
        if (inserted) data.class_labels.push_back(token);
        data.targets.push_back(it->second);
    }

    data.features.resize(rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        data.features[r].reserve(n_cols - 1);
        for (std::size_t c = 0; c < n_cols; ++c)
            if (c != target_idx) data.features[r].push_back(columns[c][r]);
    }
    return report;
}

TuebingenLoadReport load_tuebingen(const std::filesystem::path& dir,
                                   const std::filesystem::path& metadata_path,
                                   const std::vector<std::string>& exclusions) {
    std::ifstream meta(metadata_path);
    if (!meta) throw std::runtime_error("load_tuebingen: cannot open " + metadata_path.string());

    // pairmeta layout: id cause_first cause_last effect_first effect_last [weight]
    std::map<std::string, bool> ground_truth;
    std::string line;
    while (std::getline(meta, line)) {
        std::istringstream ss(trim(line));
        std::string id;
        int c0, c1, e0, e1;
        if (!(ss >> id >> c0 >> c1 >> e0 >> e1)) continue;
        if (id.rfind("pair", 0) != 0) id = "pair" + id;
        ground_truth[id] = (c0 == 1);
    }

    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
        const std::string name = entry.path().filename().string();
        if (entry.is_regular_file() && name.rfind("pair", 0) == 0 &&
            entry.path().extension() == ".txt" &&
            name != metadata_path.filename().string())
            files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());

    TuebingenLoadReport report;
    for (const auto& file : files) {
        const std::string id = file.stem().string();
        if (std::find(exclusions.begin(), exclusions.end(), id) != exclusions.end()) continue;
        const auto truth = ground_truth.find(id);
        if (truth == ground_truth.end()) {
            report.skipped.push_back(id);
            continue;
        }

        std::ifstream in(file);
        TuebingenPair pair;
        pair.id = id;
        pair.x_causes_y = truth->second;
        bool bad_shape = false;
        while (std::getline(in, line)) {
            if (trim(line).empty()) continue;
            std::istringstream ss(line);
            std::vector<double> values;
            double v;
            while (ss >> v) values.push_back(v);
            if (values.size() != 2) {
                bad_shape = true;  // multivariate pairs are out of scope
                break;
            }
            pair.x.push_back(values[0]);
            pair.y.push_back(values[1]);
        }
        if (bad_shape || pair.x.size() < 2) {
            report.skipped.push_back(id);
            continue;
        }
        report.pairs.push_back(std::move(pair));
    }
    return report;
}

namespace {

void dot_node(const TreeNode* node, const std::vector<std::string>& names, int& next_id,
              std::ostringstream& out) {
    const int id = next_id++;
    if (node->is_leaf) {
        out << "  n" << id << " [shape=box, label=\"class " << node->class_id << "\\nsamples "
            << node->sample_count << "\"];\n";
        return;
    }
    out << "  n" << id << " [label=\"" << names[node->feature_index] << " < " << node->threshold
        << "\"];\n";
    const int left_id = next_id;
    dot_node(node->left.get(), names, next_id, out);
    const int right_id = next_id;
    dot_node(node->right.get(), names, next_id, out);
    out << "  n" << id << " -> n" << left_id << " [label=\"yes\"];\n";
    out << "  n" << id << " -> n" << right_id << " [label=\"no\"];\n";
}

}  // namespace

std::string export_tree_dot(const DecisionTree& tree,
                            const std::vector<std::string>& feature_names) {
    if (feature_names.size() != tree.n_features)
        throw std::invalid_argument("export_tree_dot: feature name count mismatch");
    std::ostringstream out;
    out << "digraph decision_tree {\n";
    int next_id = 0;
    dot_node(tree.root.get(), feature_names, next_id, out);
    out << "}\n";
    return out.str();
}

void to_json(nlohmann::json& j, const MetricsReport& r) {
    j = {{"accuracy", r.accuracy},
         {"macro_f1", r.macro_f1},
         {"macro_precision", r.macro_precision},
         {"macro_recall", r.macro_recall},
         {"confusion", r.confusion}};
}

void from_json(const nlohmann::json& j, MetricsReport& r) {
    j.at("accuracy").get_to(r.accuracy);
    j.at("macro_f1").get_to(r.macro_f1);
    j.at("macro_precision").get_to(r.macro_precision);
    j.at("macro_recall").get_to(r.macro_recall);
    j.at("confusion").get_to(r.confusion);
}

void to_json(nlohmann::json& j, const GridCell& c) {
    j = {{"min_samples", c.min_samples},
         {"max_depth", c.max_depth},
         {"mean_f1", c.mean_f1},
         {"var_f1", c.var_f1}};
}

void from_json(const nlohmann::json& j, GridCell& c) {
    j.at("min_samples").get_to(c.min_samples);
    j.at("max_depth").get_to(c.max_depth);
    j.at("mean_f1").get_to(c.mean_f1);
    j.at("var_f1").get_to(c.var_f1);
}

void to_json(nlohmann::json& j, const GridSearchResult& r) {
    j = {{"best_min_samples", r.best_min_samples},
         {"best_max_depth", r.best_max_depth},
         {"best_mean_f1", r.best_mean_f1},
         {"cells", r.cells}};
}

void from_json(const nlohmann::json& j, GridSearchResult& r) {
    j.at("best_min_samples").get_to(r.best_min_samples);
    j.at("best_max_depth").get_to(r.best_max_depth);
    j.at("best_mean_f1").get_to(r.best_mean_f1);
    j.at("cells").get_to(r.cells);
}

void to_json(nlohmann::json& j, const SweepRow& r) {
    j = {{"param", r.param},
         {"mean_x_to_y", r.mean_x_to_y},
         {"std_x_to_y", r.std_x_to_y},
         {"mean_y_to_x", r.mean_y_to_x},
         {"std_y_to_x", r.std_y_to_x}};
}

void from_json(const nlohmann::json& j, SweepRow& r) {
    j.at("param").get_to(r.param);
    j.at("mean_x_to_y").get_to(r.mean_x_to_y);
    j.at("std_x_to_y").get_to(r.std_x_to_y);
    j.at("mean_y_to_x").get_to(r.mean_y_to_x);
    j.at("std_y_to_x").get_to(r.std_y_to_x);
}

void to_json(nlohmann::json& j, const SweepTable& t) {
    j = {{"param_name", t.param_name}, {"rows", t.rows}};
}

void from_json(const nlohmann::json& j, SweepTable& t) {
    j.at("param_name").get_to(t.param_name);
    j.at("rows").get_to(t.rows);
}

void to_json(nlohmann::json& j, const DecisionRatePoint& p) {
    j = {{"k_percent", p.k_percent}, {"accuracy", p.accuracy}};
}

void from_json(const nlohmann::json& j, DecisionRatePoint& p) {
    j.at("k_percent").get_to(p.k_percent);
    j.at("accuracy").get_to(p.accuracy);
}

void to_json(nlohmann::json& j, const TuebingenResult& r) {
    j = {{"accuracy", r.accuracy},
         {"macro_f1", r.macro_f1},
         {"n_pairs", r.n_pairs},
         {"decision_rate_curve", r.decision_rate_curve}};
}

void from_json(const nlohmann::json& j, TuebingenResult& r) {
    j.at("accuracy").get_to(r.accuracy);
    j.at("macro_f1").get_to(r.macro_f1);
    j.at("n_pairs").get_to(r.n_pairs);
    j.at("decision_rate_curve").get_to(r.decision_rate_curve);
}

void to_json(nlohmann::json& j, const PenaltyReport& r) {
    j = {{"penalty_x_to_y", r.penalty_x_to_y},
         {"penalty_y_to_x", r.penalty_y_to_x},
         {"direction", to_string(r.direction)},
         {"strength", r.strength},
         {"tie_broken_by_coin", r.tie_broken_by_coin}};
}

void from_json(const nlohmann::json& j, PenaltyReport& r) {
    j.at("penalty_x_to_y").get_to(r.penalty_x_to_y);
    j.at("penalty_y_to_x").get_to(r.penalty_y_to_x);
    const std::string dir = j.at("direction").get<std::string>();
    r.direction = dir == "XtoY"   ? Direction::XtoY
                  : dir == "YtoX" ? Direction::YtoX
                                  : Direction::Tie;
    j.at("strength").get_to(r.strength);
    j.at("tie_broken_by_coin").get_to(r.tie_broken_by_coin);
}

namespace {

nlohmann::json node_to_json(const TreeNode* node) {
    nlohmann::json j;
    j["depth"] = node->depth;
    j["sample_count"] = node->sample_count;
    if (node->is_leaf) {
        j["class"] = node->class_id;
    } else {
        j["feature_index"] = node->feature_index;
        j["threshold"] = node->threshold;
        j["score"] = node->score;
        j["left"] = node_to_json(node->left.get());
        j["right"] = node_to_json(node->right.get());
    }
    return j;
}

std::unique_ptr<TreeNode> node_from_json(const nlohmann::json& j) {
    auto node = std::make_unique<TreeNode>();
    j.at("depth").get_to(node->depth);
    j.at("sample_count").get_to(node->sample_count);
    if (j.contains("class")) {
        j.at("class").get_to(node->class_id);
    } else {
        node->is_leaf = false;
        j.at("feature_index").get_to(node->feature_index);
        j.at("threshold").get_to(node->threshold);
        j.at("score").get_to(node->score);
        node->left = node_from_json(j.at("left"));
        node->right = node_from_json(j.at("right"));
    }
    return node;
}

}  // namespace

void to_json(nlohmann::json& j, const DecisionTree& t) {
    j = {{"criterion", to_string(t.criterion)},
         {"max_depth", t.hyperparams.max_depth},
         {"min_samples", t.hyperparams.min_samples},
         {"seed", t.seed},
         {"dataset_name", t.dataset_name},
         {"n_features", t.n_features},
         {"class_labels", t.class_labels},
         {"root", node_to_json(t.root.get())}};
}

void from_json(const nlohmann::json& j, DecisionTree& t) {
    t.criterion = criterion_from_string(j.at("criterion").get<std::string>());
    j.at("max_depth").get_to(t.hyperparams.max_depth);
    j.at("min_samples").get_to(t.hyperparams.min_samples);
    j.at("seed").get_to(t.seed);
    j.at("dataset_name").get_to(t.dataset_name);
    j.at("n_features").get_to(t.n_features);
    j.at("class_labels").get_to(t.class_labels);
    t.root = node_from_json(j.at("root"));
}

void write_result_payload(const nlohmann::json& payload, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("save_results: cannot write " + path.string());
    nlohmann::json envelope = {{"schema_version", kResultSchemaVersion}, {"payload", payload}};
    out << envelope.dump(2) << "\n";
    if (!out) throw std::runtime_error("save_results: write failed for " + path.string());
}

nlohmann::json read_result_payload(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("load_results: cannot open " + path.string());
    nlohmann::json envelope;
    try {
        in >> envelope;
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error("load_results: parse error in " + path.string() + ": " +
                                 e.what());
    }
    if (!envelope.contains("schema_version") ||
        envelope["schema_version"].get<int>() != kResultSchemaVersion)
        throw std::runtime_error("load_results: unsupported schema_version in " + path.string());
    if (!envelope.contains("payload"))
        throw std::runtime_error("load_results: missing payload in " + path.string());
    return envelope["payload"];
}

}  // namespace lzcdt
