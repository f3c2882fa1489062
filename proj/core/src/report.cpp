// SPDX-License-Identifier: Apache-2.0
//
// Copyright (C) 2026 The risq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "risq/report.hpp"

#include <fmt/format.h>
#include <json.hpp>

#include <charconv>
#include <cmath>

#ifndef RISQ_VERSION
#define RISQ_VERSION "0.0.0"
#endif

namespace risq
{
    namespace
    {
        using nlohmann::ordered_json;

        std::vector<std::string_view> split(std::string_view s, char sep)
        {
            std::vector<std::string_view> out;
            while (true)
            {
                const auto pos = s.find(sep);
                out.push_back(s.substr(0, pos));
                if (pos == std::string_view::npos)
                    break;
                s.remove_prefix(pos + 1);
            }
            return out;
        }

        std::string format_cell(const Cell &cell)
        {
            return std::visit(
                [](const auto &v) -> std::string
                {
                    using T = std::decay_t<decltype(v)>;
                    if constexpr (std::is_same_v<T, std::monostate>)
                        return {};
                    else if constexpr (std::is_same_v<T, std::int64_t>)
                        return std::to_string(v);
                    else if constexpr (std::is_same_v<T, double>)
                        return format_real(v);
                    else if constexpr (std::is_same_v<T, bool>)
                        return v ? "true" : "false";
                    else
                        return v;
                },
                cell);
        }

        Cell parse_cell(std::string_view field, CellKind kind, std::size_t line)
        {
            if (field.empty())
                return std::monostate{};
            auto fail = [&] { return InvalidArgument(fmt::format("CSV line {}: cannot parse '{}'", line, field)); };
            switch (kind)
            {
            case CellKind::integer:
            {
                std::int64_t v = 0;
                auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
                if (ec != std::errc() || ptr != field.data() + field.size())
                    throw fail();
                return v;
            }
            case CellKind::real:
            {
                double v = 0.0;
                auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
                if (ec != std::errc() || ptr != field.data() + field.size())
                    throw fail();
                return v;
            }
            case CellKind::boolean:
                if (field == "true")
                    return true;
                if (field == "false")
                    return false;
                throw fail();
            case CellKind::text:
                return std::string(field);
            }
            throw fail();
        }

        ordered_json cell_json(const Cell &cell)
        {
            return std::visit(
                [](const auto &v) -> ordered_json
                {
                    using T = std::decay_t<decltype(v)>;
                    if constexpr (std::is_same_v<T, std::monostate>)
                        return nullptr;
                    else if constexpr (std::is_same_v<T, double>)
                    {
                        if (!std::isfinite(v))
                            return format_real(v); // JSON has no inf/nan
                        return v;
                    }
                    else
                        return v;
                },
                cell);
        }

        // Typed JSON value for a serialized config value
        ordered_json config_value(std::string_view key, std::string_view text)
        {
            if (text == "true" || text == "false")
                return text == "true";
            if (text.size() >= 2 && text.front() == '"' && text.back() == '"')
                return std::string(text.substr(1, text.size() - 2));

            auto number = [](std::string_view s) -> ordered_json
            {
                while (!s.empty() && s.front() == ' ')
                    s.remove_prefix(1);
                std::uint64_t u = 0;
                if (auto [p, e] = std::from_chars(s.data(), s.data() + s.size(), u); e == std::errc() && p == s.data() + s.size())
                    return u;
                double v = 0.0;
                auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
                if (ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(v))
                    return std::string(s);
                return v;
            };

            if (key.ends_with("_values") || text.find(',') != std::string_view::npos)
            {
                auto arr = ordered_json::array();
                for (auto item : split(text, ','))
                    arr.push_back(number(item));
                return arr;
            }
            return number(text);
        }
    } // namespace

    std::string_view library_version() { return RISQ_VERSION; }

    std::string format_real(double value)
    {
        return fmt::format("{:.9g}", value);
    }

    std::string to_csv(const Table &table)
    {
        std::string out;
        for (std::size_t i = 0; i < table.columns.size(); ++i)
        {
            if (i)
                out += ',';
            out += table.columns[i].name;
        }
        out += '\n';
        for (const auto &row : table.rows)
        {
            for (std::size_t i = 0; i < row.size(); ++i)
            {
                if (i)
                    out += ',';
                out += format_cell(row[i]);
            }
            out += '\n';
        }
        return out;
    }

    Table parse_csv(std::string_view text, const std::vector<Column> &schema)
    {
        Table table{schema, {}};
        auto lines = split(text, '\n');
        if (!lines.empty() && lines.back().empty())
            lines.pop_back();
        if (lines.empty())
            throw InvalidArgument("CSV: missing header");

        const auto header = split(lines.front(), ',');
        if (header.size() != schema.size())
            throw InvalidArgument(fmt::format("CSV: header has {} columns, expected {}", header.size(), schema.size()));
        for (std::size_t i = 0; i < header.size(); ++i)
            if (header[i] != schema[i].name)
                throw InvalidArgument(fmt::format("CSV: column {} is '{}', expected '{}'", i, header[i], schema[i].name));

        for (std::size_t l = 1; l < lines.size(); ++l)
        {
            const auto fields = split(lines[l], ',');
            if (fields.size() != schema.size())
                throw InvalidArgument(fmt::format("CSV line {}: {} fields, expected {}", l + 1, fields.size(), schema.size()));
            std::vector<Cell> row;
            row.reserve(fields.size());
            for (std::size_t i = 0; i < fields.size(); ++i)
                row.push_back(parse_cell(fields[i], schema[i].kind, l + 1));
            table.rows.push_back(std::move(row));
        }
        return table;
    }

    std::string to_json(const Report &report, const RunConfig &config)
    {
        ordered_json cfg = ordered_json::object();
        std::string section;
        const std::string text = serialize_config(config);
        for (auto line : split(text, '\n'))
        {
            if (line.empty())
                continue;
            if (line.front() == '[')
            {
                section = std::string(line.substr(1, line.size() - 2));
                cfg[section] = ordered_json::object();
                continue;
            }
            const auto eq = line.find(" = ");
            const auto key = line.substr(0, eq);
            cfg[section][std::string(key)] = config_value(key, line.substr(eq + 3));
        }

        ordered_json rows = ordered_json::array();
        for (const auto &row : report.table.rows)
        {
            ordered_json obj = ordered_json::object();
            for (std::size_t i = 0; i < row.size(); ++i)
                obj[report.table.columns[i].name] = cell_json(row[i]);
            rows.push_back(std::move(obj));
        }

        ordered_json doc = ordered_json::object();
        doc["scenario"] = report.scenario;
        for (const auto &[key, value] : report.summary)
            doc[key] = cell_json(value);
        doc["config"] = std::move(cfg);
        doc["rows"] = std::move(rows);
        doc["provenance"] = {{"seed", config.seed}, {"trials", config.trials}, {"version", std::string(library_version())}};
        if (!report.metadata.empty())
        {
            ordered_json meta = ordered_json::object();
            for (const auto &[key, value] : report.metadata)
                meta[key] = value;
            doc["metadata"] = std::move(meta);
        }
        return doc.dump(2) + "\n";
    }

} // namespace risq
