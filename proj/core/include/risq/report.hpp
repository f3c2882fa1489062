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

#ifndef RISQ_REPORT_HPP
#define RISQ_REPORT_HPP

#include "risq/config.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace risq
{
    enum class CellKind
    {
        integer,
        real,
        text,
        boolean,
    };

    // monostate is an empty field (value not available, e.g. analytic-only rows)
    using Cell = std::variant<std::monostate, std::int64_t, double, std::string, bool>;

    struct Column
    {
        std::string name;
        CellKind kind;

        friend bool operator==(const Column &, const Column &) = default;
    };

    struct Table
    {
        std::vector<Column> columns;
        std::vector<std::vector<Cell>> rows;

        friend bool operator==(const Table &, const Table &) = default;
    };

    // Reals use 9 significant digits with '.' as decimal separator
    std::string format_real(double value);

    // Header line plus one line per row, LF line endings
    std::string to_csv(const Table &table);

    // Parses CSV produced by to_csv; the header must match `schema` exactly.
    Table parse_csv(std::string_view text, const std::vector<Column> &schema);

    struct Report
    {
        std::string scenario;
        Table table;
        std::vector<std::pair<std::string, Cell>> summary;        // extra top-level JSON fields
        std::vector<std::pair<std::string, std::string>> metadata; // free-form notes
    };

    // {config, scenario, rows[], provenance{seed, trials, version}, metadata{}, <summary fields>}
    std::string to_json(const Report &report, const RunConfig &config);

    std::string_view library_version();

} // namespace risq

#endif
