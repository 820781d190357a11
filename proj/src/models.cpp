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

#include "buspl/models.hpp"

#include "buspl/error.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <numbers>

namespace buspl {

namespace {

// Region, position, alpha, beta, sigma.
constexpr std::array<PathLossModel, 10> table{{
    {87.29, 1.44, 3.13, Region::A, HeightClass::Lower},
    {83.29, 1.83, 2.22, Region::A, HeightClass::Upper},
    {83.83, 1.91, 2.88, Region::B, HeightClass::Lower},
    {84.43, 1.92, 1.67, Region::B, HeightClass::Upper},
    {85.77, 1.70, 2.00, Region::C, HeightClass::Lower},
    {81.24, 2.39, 2.27, Region::C, HeightClass::Upper},
    {84.34, 1.82, 2.38, Region::D, HeightClass::Lower},
    {81.88, 2.13, 2.65, Region::D, HeightClass::Upper},
    {85.23, 1.74, 2.54, Region::All, HeightClass::Lower},
    {82.86, 2.03, 2.34, Region::All, HeightClass::Upper},
}};

std::string lower(std::string_view s)
{
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

void require_distance(double distance_m)
{
    if (!std::isfinite(distance_m) || distance_m <= 0.0)
        throw DomainError("distance must be finite and > 0, got " + std::to_string(distance_m));
}

} // namespace

std::string_view to_string(Region r) noexcept
{
    switch (r)
    {
    case Region::A: return "A";
    case Region::B: return "B";
    case Region::C: return "C";
    case Region::D: return "D";
    case Region::All: return "All";
    }
    return "?";
}

std::string_view to_string(HeightClass h) noexcept
{
    return h == HeightClass::Lower ? "lower" : "upper";
}

Region parse_region(std::string_view s)
{
    const auto v = lower(s);
    if (v == "a") return Region::A;
    if (v == "b") return Region::B;
    if (v == "c") return Region::C;
    if (v == "d") return Region::D;
    if (v == "all") return Region::All;
    throw DomainError("unknown region '" + std::string(s) + "'");
}

HeightClass parse_height(std::string_view s)
{
    const auto v = lower(s);
    if (v == "lower") return HeightClass::Lower;
    if (v == "upper") return HeightClass::Upper;
    throw DomainError("unknown height class '" + std::string(s) + "'");
}

void PathLossModel::validate() const
{
    if (!std::isfinite(alpha_db) || !std::isfinite(beta))
        throw DomainError("model alpha_db and beta must be finite");
    if (!std::isfinite(sigma_db) || sigma_db < 0.0)
        throw DomainError("model sigma_db must be finite and >= 0");
}

bool is_extrapolated(double distance_m) noexcept
{
    return !(distance_m > validity_min_m && distance_m < validity_max_m);
}

double mean_path_loss(const PathLossModel &model, double distance_m)
{
    require_distance(distance_m);
    return model.alpha_db + 10.0 * model.beta * std::log10(distance_m);
}

PathLossEvaluation evaluate(const PathLossModel &model, double distance_m)
{
    return {mean_path_loss(model, distance_m), is_extrapolated(distance_m)};
}

double sample_path_loss(const PathLossModel &model, double distance_m, RandomStream &rng)
{
    const double mean = mean_path_loss(model, distance_m);
    const double g = rng.standard_normal();
    if (model.sigma_db == 0.0)
        return mean;
    return mean + model.sigma_db * g;
}

double standard_normal_cdf(double z) noexcept
{
    return 0.5 * std::erfc(-z / std::numbers::sqrt2);
}

double coverage_probability(const PathLossModel &model, double distance_m, double l_max_db)
{
    const double mean = mean_path_loss(model, distance_m);
    if (model.sigma_db == 0.0)
        return l_max_db >= mean ? 1.0 : 0.0;
    return standard_normal_cdf((l_max_db - mean) / model.sigma_db);
}

std::span<const PathLossModel> builtin_models() noexcept
{
    return table;
}

std::optional<PathLossModel> find_model(std::span<const PathLossModel> models, Region region,
                                        HeightClass height) noexcept
{
    for (const auto &m : models)
        if (m.region == region && m.height == height)
            return m;
    return std::nullopt;
}

PathLossModel lookup_builtin(Region region, HeightClass height)
{
    if (auto m = find_model(table, region, height))
        return *m;
    throw NotFoundError("no built-in model for " + std::string(to_string(region)) + "/" +
                        std::string(to_string(height)));
}

CombinedForm to_combined_form(const PathLossModel &model)
{
    return {model.alpha_db, 10.0 * model.beta, model.sigma_db * model.sigma_db};
}

PathLossModel from_combined_form(const CombinedForm &form, Region region, HeightClass height)
{
    if (!(form.variance_db2 >= 0.0))
        throw DomainError("variance must be >= 0");
    return {form.alpha_db, form.slope_db_per_decade / 10.0, std::sqrt(form.variance_db2), region, height};
}

double fspl(double distance_m, double frequency_hz)
{
    require_distance(distance_m);
    if (!std::isfinite(frequency_hz) || frequency_hz <= 0.0)
        throw DomainError("frequency must be finite and > 0");
    return 20.0 * std::log10(4.0 * std::numbers::pi * distance_m * frequency_hz / speed_of_light_mps);
}

std::vector<double> compare_models(const PathLossModel &a, const PathLossModel &b,
                                   std::span<const double> distances_m)
{
    std::vector<double> out;
    out.reserve(distances_m.size());
    for (double d : distances_m)
        out.push_back(mean_path_loss(a, d) - mean_path_loss(b, d));
    return out;
}

bool ConsistencyReport::all_pass() const noexcept
{
    return std::all_of(checks.begin(), checks.end(), [](const auto &c) { return c.pass; });
}

ConsistencyReport verify_combined_forms(std::span<const PathLossModel> registry)
{
    struct Printed
    {
        HeightClass height;
        double alpha, slope, variance, variance_tol;
    };
    // alpha and slope are printed to one decimal (half-width 0.05); the variance
    // tolerances bracket sigma^2 of each row against its printed value.
    constexpr std::array<Printed, 2> printed{{
        {HeightClass::Lower, 85.2, 17.4, 6.5, 0.06},
        {HeightClass::Upper, 82.9, 20.3, 5.5, 0.03},
    }};
    constexpr double decimal_half_width = 0.05;
    constexpr double nan = std::numeric_limits<double>::quiet_NaN();

    ConsistencyReport report;
    for (const auto &p : printed)
    {
        const auto model = find_model(registry, Region::All, p.height);
        const CombinedForm form = model ? to_combined_form(*model) : CombinedForm{nan, nan, nan};
        auto add = [&](std::string quantity, double computed, double expected, double tol) {
            const bool pass = std::abs(computed - expected) <= tol + consistency_boundary_slack;
            report.checks.push_back({p.height, std::move(quantity), computed, expected, tol, pass});
        };
        add("alpha_db", form.alpha_db, p.alpha, decimal_half_width);
        add("slope_db_per_decade", form.slope_db_per_decade, p.slope, decimal_half_width);
        add("variance_db2", form.variance_db2, p.variance, p.variance_tol);
    }
    return report;
}

} // namespace buspl
