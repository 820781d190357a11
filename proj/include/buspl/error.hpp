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

#ifndef BUSPL_ERROR_HPP
#define BUSPL_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace buspl {

// Argument outside the mathematical domain of an operation (d <= 0, NaN, ...).
class DomainError : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

// Malformed input file. `line` is 1-based, 0 when the error is not tied to a line.
class ParseError : public std::runtime_error
{
public:
    ParseError(std::string source, std::size_t line, const std::string &what)
        : std::runtime_error(format(source, line, what)), source_(std::move(source)), line_(line) {}

    const std::string &source() const noexcept { return source_; }
    std::size_t line() const noexcept { return line_; }

private:
    static std::string format(const std::string &source, std::size_t line, const std::string &what)
    {
        std::string msg = source;
        if (line != 0)
            msg += ":" + std::to_string(line);
        return msg + ": " + what;
    }

    std::string source_;
    std::size_t line_;
};

// Configuration rejected by validation; carries every violation found, not just the first.
class ValidationError : public std::runtime_error
{
public:
    explicit ValidationError(std::vector<std::string> violations)
        : std::runtime_error(join(violations)), violations_(std::move(violations)) {}

    const std::vector<std::string> &violations() const noexcept { return violations_; }

private:
    static std::string join(const std::vector<std::string> &v)
    {
        std::string msg = "invalid configuration";
        for (const auto &s : v)
            msg += "\n  - " + s;
        return msg;
    }

    std::vector<std::string> violations_;
};

class InsufficientDataError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

class DegenerateDesignError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

// Seat lookup failures. Both map to the "ineligible request" exit code of the CLI.
class NotFoundError : public std::out_of_range
{
public:
    using std::out_of_range::out_of_range;
};

class ExcludedPositionError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

} // namespace buspl

#endif
