// SPDX-License-Identifier: Apache-2.0
//
// buspl - in-vehicle 60 GHz path loss modelling and link budget toolkit
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

#ifndef BUSPL_TEXT_HPP
#define BUSPL_TEXT_HPP

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace buspl::text {

// Whole-field numeric parse; surrounding blanks allowed, anything else rejects.
std::optional<double> parse_double(std::string_view field) noexcept;
std::optional<long long> parse_int(std::string_view field) noexcept;

// Shortest representation that parses back to the identical double.
std::string format_double(double v);

std::string format_fixed(double v, int decimals);

// Splits on commas. Quoting is not supported; none of the formats need it.
std::vector<std::string_view> split_csv(std::string_view line);

std::string_view trim(std::string_view s) noexcept;

// Lines without terminators; a trailing '\r' is removed from each.
std::vector<std::string_view> split_lines(std::string_view text);

// Throws ParseError (line 0) if the file cannot be opened.
std::string read_file(const std::filesystem::path &path);
void write_file(const std::filesystem::path &path, std::string_view contents);

} // namespace buspl::text

#endif
