/*
   Copyright 2026 The bcsys Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "bcsys/numtower/json.hpp"

namespace bcsys::cli {

using numtower::Json;

enum class Format { json, csv };

/// Everything a command depends on besides its own arguments. Same config, same bytes out.
struct RunConfig {
    std::int64_t level = 24;
    long precision = 128;
    std::uint64_t seed = 0;
    long truncation = 100000;
    Format format = Format::json;
    std::string out_path;
};

/// A command's result: a flat list of rows plus a verdict.
struct Report {
    explicit Report(std::string name) : command(std::move(name)) {}

    std::string command;
    bool pass = true;
    Json summary = Json::object();
    std::vector<Json> rows;

    void add(Json row, bool ok) {
        pass = pass && ok;
        rows.push_back(std::move(row));
    }
};

/// JSON: {command, config, pass, summary, rows}. CSV: one header line, nested keys joined by '.'.
void write_report(const Report& report, const RunConfig& config, std::ostream& out);

/// Writes to config.out_path, or stdout when it is empty.
void emit(const Report& report, const RunConfig& config);

Format parse_format(const std::string& text);

}  // namespace bcsys::cli
