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

#ifndef BUSPL_LINKBUDGET_HPP
#define BUSPL_LINKBUDGET_HPP

#include "buspl/geometry.hpp"
#include "buspl/models.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace buspl {

// Link budget inputs. The defaults describe a single 2.16 GHz 60 GHz channel with a
// modest 10 dBm transmitter; only the 2 dBi antenna gains come from the measurement setup.
struct LinkBudgetConfig
{
    double tx_power_dbm = 10.0;
    double g_tx_dbi = 2.0;
    double g_rx_dbi = 2.0;
    double bandwidth_hz = 2.16e9;
    double noise_figure_db = 7.0;
    double snr_threshold_db = 0.0;

    void validate() const;
};

LinkBudgetConfig budget_from_json(const std::string &json_text, const std::string &source = "<budget>");
LinkBudgetConfig load_budget(const std::filesystem::path &path);

// Thermal noise at 290 K: -174 dBm/Hz + 10 log10(B) + NF.
double noise_floor_dbm(const LinkBudgetConfig &config);

double link_snr(const LinkBudgetConfig &config, double path_loss_db);

// Largest path loss that still meets snr_threshold_db.
double max_path_loss(const LinkBudgetConfig &config);

double shannon_rate(double snr_db, double bandwidth_hz);

double dbm_to_mw(double dbm) noexcept;
double mw_to_dbm(double mw) noexcept;

struct ModelSelection
{
    // Use the pooled All model of the height class for every seat instead of the seat's group.
    bool force_all = false;
};

// Throws NotFoundError if the registry lacks the required (region, height) entry.
PathLossModel select_model(std::span<const PathLossModel> models, const SeatSpec &seat, HeightClass height,
                           const ModelSelection &selection = {});

struct SeatReport
{
    int seat_id = 0;
    HeightClass height = HeightClass::Upper;
    Region group = Region::A;
    double distance_m = 0.0;
    double mean_pl_db = 0.0;
    double snr_db = 0.0;
    double rate_bps = 0.0;
    double coverage_prob = 0.0;
    bool extrapolated = false;
};

// Reports for every seat eligible at `height`; excluded lower positions are skipped.
std::vector<SeatReport> seat_sweep(const BusLayout &layout, std::span<const PathLossModel> models,
                                   const LinkBudgetConfig &config, HeightClass height,
                                   const ModelSelection &selection = {});

struct FootprintOptions
{
    ModelSelection selection;
    // Draw each link's shadowing once and reuse it for every draw (static scene).
    bool frozen_shadowing = false;
};

struct SeatFootprint
{
    int seat_id = 0;
    double distance_m = 0.0;
    double mean_pl_db = 0.0;
    std::vector<double> snr_db;  // per draw, shadowed, no interference
    std::vector<double> sinr_db; // per draw
    double snr_mean_db = 0.0;
    double sinr_mean_db = 0.0;
    double sinr_median_db = 0.0;
    double sinr_p05_db = 0.0;
};

struct FootprintResult
{
    HeightClass height = HeightClass::Upper;
    std::size_t n_draws = 0;
    std::vector<SeatFootprint> seats; // same order as the active seat list
};

// All active transmitters share one channel. Each draw samples every active link's path loss
// from RandomStream(seed, draw) in active-seat order, then forms per-seat SINR in linear
// power. Throws ExcludedPositionError / NotFoundError for ineligible seats and DomainError
// for an empty or duplicated active list or n_draws == 0.
FootprintResult interference_footprint(const BusLayout &layout, std::span<const PathLossModel> models,
                                       const LinkBudgetConfig &config, std::span<const int> active_seats,
                                       HeightClass height, std::uint64_t seed, std::size_t n_draws,
                                       const FootprintOptions &options = {});

struct CoverageEstimate
{
    int seat_id = 0;
    double empirical = 0.0;
    double analytic = 0.0;
};

// Fraction of shadowed draws meeting snr_threshold_db, per eligible seat. Each seat uses its
// own RandomStream(seed, seat_id).
std::vector<CoverageEstimate> empirical_coverage(const BusLayout &layout, std::span<const PathLossModel> models,
                                                 const LinkBudgetConfig &config, HeightClass height,
                                                 std::uint64_t seed, std::size_t n_draws,
                                                 const ModelSelection &selection = {});

// Linear-interpolated quantile (q in [0, 1]) of an unsorted sample.
double quantile(std::vector<double> values, double q);

} // namespace buspl

#endif
