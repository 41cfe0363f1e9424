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

#include "bcsys/cli/report.hpp"

#include <fstream>
#include <iostream>
#include <map>

#include "bcsys/error.hpp"

namespace bcsys::cli {

namespace {

void flatten(const Json& j, const std::string& prefix, Json& out) {
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, out);
        return;
    }
    out[prefix] = j;
}

std::string cell(const Json& j) {
    std::string s = j.is_string() ? j.get<std::string>() : j.dump();
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string quoted = "\"";
    for (char c : s) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    return quoted + "\"";
}

Json config_json(const RunConfig& c) {
    return Json{{"level", c.level}, {"precision", c.precision}, {"seed", c.seed}, {"trunc", c.truncation}};
}

}  // namespace

void write_report(const Report& report, const RunConfig& config, std::ostream& out) {
    if (config.format == Format::json) {
        Json j{{"command", report.command}, {"config", config_json(config)}, {"pass", report.pass}, {"summary", report.summary}};
        j["rows"] = report.rows;
        out << j.dump(2) << '\n';
        return;
    }
    std::vector<Json> flat;
    std::vector<std::string> columns;
    std::map<std::string, bool> seen;
    for (const auto& row : report.rows) {
        Json f = Json::object();
        flatten(row, "", f);
        for (const auto& [k, v] : f.items())
            if (!seen[k]) {
                seen[k] = true;
                columns.push_back(k);
            }
        flat.push_back(std::move(f));
    }
    for (std::size_t i = 0; i < columns.size(); ++i) out << (i ? "," : "") << columns[i];
    out << '\n';
    for (const auto& f : flat) {
        for (std::size_t i = 0; i < columns.size(); ++i) {
            if (i) out << ',';
            if (f.contains(columns[i])) out << cell(f[columns[i]]);
        }
        out << '\n';
    }
}

void emit(const Report& report, const RunConfig& config) {
    if (config.out_path.empty()) {
        write_report(report, config, std::cout);
        return;
    }
    std::ofstream file(config.out_path);
    if (!file) throw Error(ErrorKind::InvalidArgument, "cannot open " + config.out_path + " for writing");
    write_report(report, config, file);
}

Format parse_format(const std::string& text) {
    if (text == "json") return Format::json;
    if (text == "csv") return Format::csv;
    throw Error(ErrorKind::InvalidArgument, "unknown format '" + text + "'");
}

}  // namespace bcsys::cli
