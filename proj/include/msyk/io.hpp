/*
 * Copyright 2026 The msyk Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef MSYK_IO_HPP
#define MSYK_IO_HPP

#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace msyk {

/// Renders a double with %.12g, the fixed cell format of every CSV this
/// tool writes, so a rerun of the same command and seed is byte-identical.
inline std::string csv_cell(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

/// CSV table with a header row; cells are plain strings.
class CsvWriter {
  public:
    explicit CsvWriter(std::vector<std::string> header) : header_(std::move(header)) {}

    void add_row(std::vector<std::string> row) {
        if (row.size() != header_.size())
            throw std::invalid_argument("CsvWriter: row width mismatch");
        rows_.push_back(std::move(row));
    }

    void add_row(const std::vector<double>& row) {
        std::vector<std::string> cells;
        cells.reserve(row.size());
        for (double v : row) cells.push_back(csv_cell(v));
        add_row(std::move(cells));
    }

    std::string render() const {
        std::string out = join(header_);
        for (const auto& row : rows_) out += join(row);
        return out;
    }

    void write(const std::string& path) const {
        std::ofstream f(path, std::ios::binary);
        if (!f) throw std::runtime_error("CsvWriter: cannot open " + path);
        f << render();
    }

  private:
    static std::string join(const std::vector<std::string>& cells) {
        std::string line;
        for (std::size_t i = 0; i < cells.size(); ++i) {
            line += cells[i];
            line += (i + 1 < cells.size()) ? "," : "\n";
        }
        return line;
    }

    std::vector<std::string> header_;
    std::vector<std::vector<std::string>> rows_;
};

/// Run manifest: what was run, with what configuration, and which files
/// were produced. Written even when the run fails.
struct RunManifest {
    std::string command;
    nlohmann::json config;
    std::uint64_t seed = 0;
    std::string version = "1.0.0";
    std::vector<std::string> outputs;
    bool success = false;
    std::string error;

    void write(const std::string& path) const {
        nlohmann::json j{{"command", command}, {"config", config},
                         {"seed", seed},       {"version", version},
                         {"outputs", outputs}, {"success", success}};
        if (!error.empty()) j["error"] = error;
        std::ofstream f(path, std::ios::binary);
        if (!f) throw std::runtime_error("RunManifest: cannot open " + path);
        f << j.dump(2) << "\n";
    }
};

}  // namespace msyk

#endif  // MSYK_IO_HPP
