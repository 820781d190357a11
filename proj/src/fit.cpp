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

#include "buspl/fit.hpp"

#include "buspl/error.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace buspl {

namespace {

struct Line
{
    double intercept;
    double slope;
};

// Centered two-pass least squares; centering keeps noiseless data exact to ~1e-15.
Line least_squares(std::span<const double> x, std::span<const double> y)
{
    const auto n = static_cast<double>(x.size());
    const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
    const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i)
    {
        const double dx = x[i] - mx;
        sxx += dx * dx;
        sxy += dx * (y[i] - my);
    }
    if (sxx == 0.0)
        throw DegenerateDesignError("all sample distances are identical; slope is undetermined");
    const double slope = sxy / sxx;
    return {my - slope * mx, slope};
}

FitResult plain_fit(std::span<const double> x, std::span<const double> y, const FitOptions &options)
{
    const Line line = least_squares(x, y);
    FitResult r;
    r.n = x.size();
    r.residuals_db.resize(r.n);
    const double my = std::accumulate(y.begin(), y.end(), 0.0) / static_cast<double>(r.n);
    double ss_res = 0.0, ss_tot = 0.0;
    for (std::size_t i = 0; i < r.n; ++i)
    {
        const double e = y[i] - (line.intercept + line.slope * x[i]);
        r.residuals_db[i] = e;
        ss_res += e * e;
        ss_tot += (y[i] - my) * (y[i] - my);
    }
    r.model = {line.intercept, line.slope, std::sqrt(ss_res / static_cast<double>(r.n - 2)), options.region,
               options.height};
    r.r_squared = ss_tot > 0.0 ? std::clamp(1.0 - ss_res / ss_tot, 0.0, 1.0) : 1.0;
    return r;
}

} // namespace

FitResult fit_log_distance(std::span<const Sample> samples, const FitOptions &options)
{
    if (samples.size() < 3)
        throw InsufficientDataError("need at least 3 samples to fit, got " + std::to_string(samples.size()));
    if (!(options.trim_fraction >= 0.0 && options.trim_fraction < 0.5))
        throw DomainError("trim_fraction must be in [0, 0.5)");

    std::vector<double> x, y;
    x.reserve(samples.size());
    y.reserve(samples.size());
    for (const auto &s : samples)
    {
        if (!std::isfinite(s.distance_m) || s.distance_m <= 0.0)
            throw DomainError("sample distance must be finite and > 0");
        if (!std::isfinite(s.path_loss_db))
            throw DomainError("sample path loss must be finite");
        x.push_back(10.0 * std::log10(s.distance_m));
        y.push_back(s.path_loss_db);
    }

    if (std::all_of(x.begin(), x.end(), [&](double v) { return v == x.front(); }))
        throw DegenerateDesignError("all sample distances are identical; slope is undetermined");

    FitResult first = plain_fit(x, y, options);
    const auto drop = static_cast<std::size_t>(options.trim_fraction * static_cast<double>(samples.size()));
    if (drop == 0)
        return first;

    std::vector<std::size_t> order(samples.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return first.residuals_db[a] < first.residuals_db[b]; });
    std::vector<std::size_t> kept(order.begin() + static_cast<std::ptrdiff_t>(drop),
                                  order.end() - static_cast<std::ptrdiff_t>(drop));
    std::sort(kept.begin(), kept.end());
    if (kept.size() < 3)
        throw InsufficientDataError("fewer than 3 samples left after trimming");
    std::vector<double> xt, yt;
    for (auto i : kept)
    {
        xt.push_back(x[i]);
        yt.push_back(y[i]);
    }
    return plain_fit(xt, yt, options);
}

PartitionFit fit_by_partition(std::span<const Sample> samples, const FitOptions &options)
{
    std::map<CellKey, SampleSet> cells;
    for (const auto &s : samples)
    {
        if (!s.region || !s.height)
            throw DomainError("partitioned fit requires region and height on every sample");
        if (*s.region != Region::All)
            cells[{*s.region, *s.height}].push_back(s);
        cells[{Region::All, *s.height}].push_back(s);
    }

    PartitionFit out;
    for (const auto &[key, cell] : cells)
    {
        if (cell.size() < 3)
        {
            out.skipped.push_back(key);
            continue;
        }
        FitOptions cell_options = options;
        cell_options.region = key.first;
        cell_options.height = key.second;
        out.fits.emplace(key, fit_log_distance(cell, cell_options));
    }
    return out;
}

SampleSet synth_samples(const PathLossModel &model, std::span<const double> distances_m, std::uint64_t seed)
{
    model.validate();
    RandomStream rng(seed);
    SampleSet out;
    out.reserve(distances_m.size());
    for (double d : distances_m)
    {
        Sample s;
        s.distance_m = d;
        s.path_loss_db = sample_path_loss(model, d, rng);
        s.region = model.region;
        s.height = model.height;
        out.push_back(s);
    }
    return out;
}

} // namespace buspl
