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

#ifndef BUSPL_MODELS_HPP
#define BUSPL_MODELS_HPP

#include "buspl/random.hpp"

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace buspl {

inline constexpr double speed_of_light_mps = 299792458.0;

// Seat groups of the bus plus the pooled "All" group.
enum class Region { A, B, C, D, All };

// Transmitter placement class: upper (head level) or lower (hand-held level).
enum class HeightClass { Lower, Upper };

inline constexpr std::array<Region, 5> all_regions{Region::A, Region::B, Region::C, Region::D, Region::All};
inline constexpr std::array<Region, 4> seat_regions{Region::A, Region::B, Region::C, Region::D};
inline constexpr std::array<HeightClass, 2> all_heights{HeightClass::Lower, HeightClass::Upper};

std::string_view to_string(Region r) noexcept;
std::string_view to_string(HeightClass h) noexcept; // "lower" / "upper"

// Case-insensitive; throw DomainError on unknown names.
Region parse_region(std::string_view s);
HeightClass parse_height(std::string_view s);

// Log-distance path loss with log-normal shadowing:
//
//     L(d) = alpha_db + 10 * beta * log10(d) + X,   X ~ Normal(0, sigma_db^2)
//
// sigma_db is the standard deviation of the shadowing term in dB (not the variance).
struct PathLossModel
{
    double alpha_db = 0.0;
    double beta = 0.0;
    double sigma_db = 0.0;
    Region region = Region::All;
    HeightClass height = HeightClass::Upper;

    // Throws DomainError if alpha/beta are not finite or sigma is negative or not finite.
    void validate() const;

    bool operator==(const PathLossModel &) const = default;
};

// The model with the slope folded into dB/decade and the shadowing expressed as variance.
struct CombinedForm
{
    double alpha_db = 0.0;
    double slope_db_per_decade = 0.0;
    double variance_db2 = 0.0;
};

// Distances outside this open interval lie beyond the measured span of the in-bus models.
// Evaluation still succeeds there; results carry an extrapolation flag instead.
inline constexpr double validity_min_m = 0.5;
inline constexpr double validity_max_m = 15.0;

bool is_extrapolated(double distance_m) noexcept;

struct PathLossEvaluation
{
    double mean_db = 0.0;
    bool extrapolated = false;
};

// Deterministic part alpha + 10 beta log10(d). Throws DomainError unless d is finite and > 0.
double mean_path_loss(const PathLossModel &model, double distance_m);

PathLossEvaluation evaluate(const PathLossModel &model, double distance_m);

// Mean plus one Gaussian shadowing draw. Always consumes one normal variate from `rng`,
// including when sigma is zero, so that stream alignment does not depend on the model.
double sample_path_loss(const PathLossModel &model, double distance_m, RandomStream &rng);

// P[L(d) <= l_max] = Phi((l_max - mean) / sigma). For sigma == 0 the step function
// (1 if l_max >= mean, else 0) is returned.
double coverage_probability(const PathLossModel &model, double distance_m, double l_max_db);

double standard_normal_cdf(double z) noexcept;

// The ten fitted parameter sets measured in the city bus, ordered A..D, All with
// Lower before Upper inside each region.
std::span<const PathLossModel> builtin_models() noexcept;

std::optional<PathLossModel> find_model(std::span<const PathLossModel> models, Region region,
                                        HeightClass height) noexcept;

// Throws NotFoundError when no built-in row matches.
PathLossModel lookup_builtin(Region region, HeightClass height);

CombinedForm to_combined_form(const PathLossModel &model);

// Inverse of to_combined_form. Throws DomainError on negative variance.
PathLossModel from_combined_form(const CombinedForm &form, Region region, HeightClass height);

// 20 log10(4 pi d f / c). Throws DomainError on non-positive inputs.
double fspl(double distance_m, double frequency_hz);

// mean_path_loss(a, d) - mean_path_loss(b, d) for each d.
std::vector<double> compare_models(const PathLossModel &a, const PathLossModel &b,
                                   std::span<const double> distances_m);

// Cross-check of the pooled ("All") models against their printed one-decimal combined
// expressions: lower 85.2 + 17.4 log10(d) + X(0, 6.5), upper 82.9 + 20.3 log10(d) + X(0, 5.5).
struct ConsistencyCheck
{
    HeightClass height = HeightClass::Upper;
    std::string quantity; // "alpha_db", "slope_db_per_decade" or "variance_db2"
    double computed = 0.0;
    double printed = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

struct ConsistencyReport
{
    std::vector<ConsistencyCheck> checks;
    bool all_pass() const noexcept;
};

// Slack added to every tolerance so that values sitting exactly on a rounding boundary
// (e.g. 85.25 vs 85.2) pass despite binary representation error.
inline constexpr double consistency_boundary_slack = 1e-9;

// Checks the All/Lower and All/Upper entries of `registry`. A missing entry is a failure.
ConsistencyReport verify_combined_forms(std::span<const PathLossModel> registry);

} // namespace buspl

#endif
