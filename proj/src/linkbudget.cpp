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

#include "buspl/linkbudget.hpp"

#include "buspl/error.hpp"
#include "buspl/text.hpp"

#include "json.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

namespace buspl {

using nlohmann::json;

void LinkBudgetConfig::validate() const
{
    std::vector<std::string> v;
    if (!std::isfinite(tx_power_dbm))
        v.emplace_back("tx_power_dbm must be finite");
    if (!std::isfinite(g_tx_dbi) || !std::isfinite(g_rx_dbi))
        v.emplace_back("antenna gains must be finite");
    if (!(std::isfinite(bandwidth_hz) && bandwidth_hz > 0.0))
        v.emplace_back("bandwidth_hz must be > 0");
    if (!(std::isfinite(noise_figure_db) && noise_figure_db >= 0.0))
        v.emplace_back("noise_figure_db must be >= 0");
    if (std::isnan(snr_threshold_db))
        v.emplace_back("snr_threshold_db must be a number");
    if (!v.empty())
        throw ValidationError(std::move(v));
}

LinkBudgetConfig budget_from_json(const std::string &json_text, const std::string &source)
{
    LinkBudgetConfig c;
    try
    {
        const auto j = json::parse(json_text);
        c.tx_power_dbm = j.value("tx_power_dbm", c.tx_power_dbm);
        c.g_tx_dbi = j.value("g_tx_dbi", c.g_tx_dbi);
        c.g_rx_dbi = j.value("g_rx_dbi", c.g_rx_dbi);
        c.bandwidth_hz = j.value("bandwidth_hz", c.bandwidth_hz);
        c.noise_figure_db = j.value("noise_figure_db", c.noise_figure_db);
        c.snr_threshold_db = j.value("snr_threshold_db", c.snr_threshold_db);
    }
    catch (const json::exception &e)
    {
        throw ParseError(source, 0, e.what());
    }
    c.validate();
    return c;
}

LinkBudgetConfig load_budget(const std::filesystem::path &path)
{
    return budget_from_json(text::read_file(path), path.string());
}

double noise_floor_dbm(const LinkBudgetConfig &config)
{
    if (!(config.bandwidth_hz > 0.0))
        throw DomainError("bandwidth must be > 0");
    return -174.0 + 10.0 * std::log10(config.bandwidth_hz) + config.noise_figure_db;
}

double link_snr(const LinkBudgetConfig &config, double path_loss_db)
{
    return config.tx_power_dbm + config.g_tx_dbi + config.g_rx_dbi - path_loss_db - noise_floor_dbm(config);
}

double max_path_loss(const LinkBudgetConfig &config)
{
    return config.tx_power_dbm + config.g_tx_dbi + config.g_rx_dbi - noise_floor_dbm(config) -
           config.snr_threshold_db;
}

double shannon_rate(double snr_db, double bandwidth_hz)
{
    if (!(bandwidth_hz > 0.0))
        throw DomainError("bandwidth must be > 0");
    return bandwidth_hz * std::log2(1.0 + std::pow(10.0, snr_db / 10.0));
}

double dbm_to_mw(double dbm) noexcept
{
    return std::pow(10.0, dbm / 10.0);
}

double mw_to_dbm(double mw) noexcept
{
    return 10.0 * std::log10(mw);
}

PathLossModel select_model(std::span<const PathLossModel> models, const SeatSpec &seat, HeightClass height,
                           const ModelSelection &selection)
{
    const Region region = selection.force_all ? Region::All : seat.group;
    if (auto m = find_model(models, region, height))
        return *m;
    throw NotFoundError("no model for " + std::string(to_string(region)) + "/" + std::string(to_string(height)));
}

std::vector<SeatReport> seat_sweep(const BusLayout &layout, std::span<const PathLossModel> models,
                                   const LinkBudgetConfig &config, HeightClass height,
                                   const ModelSelection &selection)
{
    config.validate();
    const double pl_max = max_path_loss(config);
    std::vector<SeatReport> out;
    for (int id : seats_in_group(layout, Region::All, height))
    {
        const auto &seat = layout.seat(id);
        const auto model = select_model(models, seat, height, selection);
        SeatReport r;
        r.seat_id = id;
        r.height = height;
        r.group = seat.group;
        r.distance_m = link_distance(layout, id, height);
        const auto eval = evaluate(model, r.distance_m);
        r.mean_pl_db = eval.mean_db;
        r.extrapolated = eval.extrapolated;
        r.snr_db = link_snr(config, r.mean_pl_db);
        r.rate_bps = shannon_rate(r.snr_db, config.bandwidth_hz);
        r.coverage_prob = coverage_probability(model, r.distance_m, pl_max);
        out.push_back(r);
    }
    return out;
}

double quantile(std::vector<double> values, double q)
{
    if (values.empty())
        throw DomainError("quantile of an empty sample");
    std::sort(values.begin(), values.end());
    const double pos = std::clamp(q, 0.0, 1.0) * static_cast<double>(values.size() - 1);
    const auto lo = static_cast<std::size_t>(std::floor(pos));
    const auto hi = std::min(lo + 1, values.size() - 1);
    return values[lo] + (pos - static_cast<double>(lo)) * (values[hi] - values[lo]);
}

FootprintResult interference_footprint(const BusLayout &layout, std::span<const PathLossModel> models,
                                       const LinkBudgetConfig &config, std::span<const int> active_seats,
                                       HeightClass height, std::uint64_t seed, std::size_t n_draws,
                                       const FootprintOptions &options)
{
    config.validate();
    if (n_draws == 0)
        throw DomainError("n_draws must be >= 1");
    if (active_seats.empty())
        throw DomainError("at least one active seat is required");
    if (std::set<int>(active_seats.begin(), active_seats.end()).size() != active_seats.size())
        throw DomainError("active seats must be distinct");

    const std::size_t n = active_seats.size();
    std::vector<PathLossModel> link_models;
    FootprintResult result;
    result.height = height;
    result.n_draws = n_draws;
    for (int id : active_seats)
    {
        SeatFootprint f;
        f.seat_id = id;
        f.distance_m = link_distance(layout, id, height);
        link_models.push_back(select_model(models, layout.seat(id), height, options.selection));
        f.mean_pl_db = mean_path_loss(link_models.back(), f.distance_m);
        f.snr_db.reserve(n_draws);
        f.sinr_db.reserve(n_draws);
        result.seats.push_back(std::move(f));
    }

    const double eirp_dbm = config.tx_power_dbm + config.g_tx_dbi + config.g_rx_dbi;
    const double noise_mw = dbm_to_mw(noise_floor_dbm(config));

    auto draw_received = [&](std::uint64_t draw, std::vector<double> &rx_mw) {
        RandomStream rng(seed, draw);
        for (std::size_t i = 0; i < n; ++i)
            rx_mw[i] = dbm_to_mw(eirp_dbm - sample_path_loss(link_models[i], result.seats[i].distance_m, rng));
    };

    std::vector<double> rx_mw(n);
    if (options.frozen_shadowing)
        draw_received(0, rx_mw);
    for (std::size_t draw = 0; draw < n_draws; ++draw)
    {
        if (!options.frozen_shadowing)
            draw_received(draw, rx_mw);
        for (std::size_t i = 0; i < n; ++i)
        {
            double interference_mw = 0.0;
            for (std::size_t k = 0; k < n; ++k)
                if (k != i)
                    interference_mw += rx_mw[k];
            result.seats[i].snr_db.push_back(10.0 * std::log10(rx_mw[i] / noise_mw));
            result.seats[i].sinr_db.push_back(10.0 * std::log10(rx_mw[i] / (noise_mw + interference_mw)));
        }
    }

    for (auto &f : result.seats)
    {
        const auto dn = static_cast<double>(n_draws);
        f.snr_mean_db = std::accumulate(f.snr_db.begin(), f.snr_db.end(), 0.0) / dn;
        f.sinr_mean_db = std::accumulate(f.sinr_db.begin(), f.sinr_db.end(), 0.0) / dn;
        f.sinr_median_db = quantile(f.sinr_db, 0.5);
        f.sinr_p05_db = quantile(f.sinr_db, 0.05);
    }
    return result;
}

std::vector<CoverageEstimate> empirical_coverage(const BusLayout &layout, std::span<const PathLossModel> models,
                                                 const LinkBudgetConfig &config, HeightClass height,
                                                 std::uint64_t seed, std::size_t n_draws,
                                                 const ModelSelection &selection)
{
    config.validate();
    if (n_draws == 0)
        throw DomainError("n_draws must be >= 1");
    const double pl_max = max_path_loss(config);
    std::vector<CoverageEstimate> out;
    for (int id : seats_in_group(layout, Region::All, height))
    {
        const auto model = select_model(models, layout.seat(id), height, selection);
        const double d = link_distance(layout, id, height);
        RandomStream rng(seed, static_cast<std::uint64_t>(id));
        std::size_t hits = 0;
        for (std::size_t k = 0; k < n_draws; ++k)
            if (link_snr(config, sample_path_loss(model, d, rng)) >= config.snr_threshold_db)
                ++hits;
        out.push_back({id, static_cast<double>(hits) / static_cast<double>(n_draws),
                       coverage_probability(model, d, pl_max)});
    }
    return out;
}

} // namespace buspl
