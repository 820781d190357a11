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

#ifndef BUSPL_PDP_HPP
#define BUSPL_PDP_HPP

#include "buspl/models.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace buspl {

struct PdpBin
{
    double delay_ns = 0.0;
    double power_db = 0.0;
};

// Power delay profile of one channel sounder sweep.
struct PdpRecord
{
    std::vector<PdpBin> bins; // strictly increasing delay, finite power
    int seat = 0;
    HeightClass height = HeightClass::Upper;
    int sweep = 0;

    // Throws DomainError naming the first offending bin.
    void validate() const;
};

// Repeated sweeps recorded at one transmitter position.
struct MeasurementSet
{
    int seat = 0;
    HeightClass height = HeightClass::Upper;
    std::vector<PdpRecord> sweeps;
};

struct LinkCalibration
{
    double radiated_power_db = 0.0; // no default on purpose: callers must state it
    double g_tx_dbi = 2.0;
    double g_rx_dbi = 2.0;
    double noise_threshold_db = 25.0; // bins further below the peak are discarded

    void validate() const;
};

inline constexpr double default_noise_threshold_db = 25.0;

// Sum of the linear powers of all bins within `threshold_db` of the peak, returned in dB.
// Throws DomainError on an empty profile or a negative threshold.
double integrate_pdp(const PdpRecord &pdp, double threshold_db = default_noise_threshold_db);

// radiated - received + g_tx + g_rx.
double path_loss_from_power(const LinkCalibration &cal, double p_rx_db) noexcept;

// Strongest bin; the earliest one wins a tie.
PdpBin peak_component(const PdpRecord &pdp);

double delay_to_distance(double delay_ns);
double distance_to_delay(double distance_m);

struct AggregateResult
{
    int seat = 0;
    HeightClass height = HeightClass::Upper;
    double distance_m = 0.0;
    double received_power_db = 0.0;
    double path_loss_db = 0.0;
};

// Received power per sweep, averaged in linear power, converted to path loss. The distance
// estimate comes from the median peak delay. Independent of sweep order.
AggregateResult aggregate_measurement(const MeasurementSet &set, const LinkCalibration &cal);

// PDP CSV with header `delay_ns,power_db`.
PdpRecord load_pdp_csv(const std::filesystem::path &path);
PdpRecord parse_pdp_csv(const std::string &text, const std::string &source = "<pdp>");
void write_pdp_csv(const std::filesystem::path &path, const PdpRecord &pdp);

// Directory of `<seat>_<height>/` subdirectories, each holding `meta.json`
// ({"seat": int, "height": "lower"|"upper"}) and `sweep_<k>.csv` files, optionally with a
// `sweep_<k>.json` sidecar ({"seat", "height", "sweep"}). Sets are returned ordered by
// (seat, height) and sweeps by k. Throws ParseError naming the offending file.
std::vector<MeasurementSet> load_measurement_dir(const std::filesystem::path &dir);
void write_measurement_dir(const std::filesystem::path &dir, const std::vector<MeasurementSet> &sets);

LinkCalibration load_calibration(const std::filesystem::path &path);

} // namespace buspl

#endif
