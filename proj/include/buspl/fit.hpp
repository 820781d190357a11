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

#ifndef BUSPL_FIT_HPP
#define BUSPL_FIT_HPP

#include "buspl/models.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace buspl {

struct Sample
{
    double distance_m = 0.0;
    double path_loss_db = 0.0;
    std::optional<int> seat;
    std::optional<Region> region;
    std::optional<HeightClass> height;
};

using SampleSet = std::vector<Sample>;

struct FitResult
{
    PathLossModel model;
    std::vector<double> residuals_db; // observed minus fitted, in input order
    double r_squared = 0.0;
    std::size_t n = 0;
};

struct FitOptions
{
    // Fraction of points dropped from each tail of the residual distribution before a
    // second fit. 0 disables trimming.
    double trim_fraction = 0.0;
    Region region = Region::All;
    HeightClass height = HeightClass::Upper;
};

// Ordinary least squares of path loss on 10 log10(d): intercept -> alpha_db, slope -> beta.
// sigma_db is the residual standard deviation with n - 2 degrees of freedom.
//
// Throws InsufficientDataError for fewer than 3 samples, DegenerateDesignError when all
// distances coincide and DomainError for a non-positive distance.
FitResult fit_log_distance(std::span<const Sample> samples, const FitOptions &options = {});

using CellKey = std::pair<Region, HeightClass>;

struct PartitionFit
{
    std::map<CellKey, FitResult> fits;
    // Non-empty cells with fewer than 3 samples.
    std::vector<CellKey> skipped;
};

// One fit per populated (region, height) cell plus an All cell per height pooling every
// sample of that height. Samples tagged with Region::All feed only the pooled cell.
// Throws DomainError if any sample lacks a region or height tag.
PartitionFit fit_by_partition(std::span<const Sample> samples, const FitOptions &options = {});

// One sample per distance drawn from `model` using RandomStream(seed).
SampleSet synth_samples(const PathLossModel &model, std::span<const double> distances_m, std::uint64_t seed);

} // namespace buspl

#endif
