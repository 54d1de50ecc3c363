// Copyright 2026 The fermibath Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace fermibath::csv {

// RFC 4180 style: comma separated, fields quoted when they contain a comma,
// quote or line break, LF record terminator.
std::string escape_field(std::string_view field);
void write_row(std::ostream& out, const std::vector<std::string>& fields);

// 17 significant digits in scientific notation; parses back bit-exactly.
std::string format_number(double value);

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

Table parse(std::string_view text);
Table read_file(const std::string& path);

// Numeric view of a table whose every body cell is a number.
std::vector<std::vector<double>> numeric_rows(const Table& table);

}  // namespace fermibath::csv
