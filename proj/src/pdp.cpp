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

#include "buspl/pdp.hpp"

#include "buspl/error.hpp"
#include "buspl/text.hpp"

#include "json.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <regex>

namespace buspl {

namespace fs = std::filesystem;
using nlohmann::json;

void PdpRecord::validate() const
{
    for (std::size_t i = 0; i < bins.size(); ++i)
    {
        if (!std::isfinite(bins[i].delay_ns) || !std::isfinite(bins[i].power_db))
            throw DomainError("PDP bin " + std::to_string(i) + " is not finite");
        if (i > 0 && !(bins[i].delay_ns > bins[i - 1].delay_ns))
            throw DomainError("PDP delays must be strictly increasing at bin " + std::to_string(i));
    }
}

void LinkCalibration::validate() const
{
    std::vector<std::string> v;
    if (!std::isfinite(radiated_power_db))
        v.emplace_back("radiated_power_db must be finite");
    if (!std::isfinite(g_tx_dbi) || !std::isfinite(g_rx_dbi))
        v.emplace_back("antenna gains must be finite");
    if (!std::isfinite(noise_threshold_db) || noise_threshold_db <= 0.0)
        v.emplace_back("noise_threshold_db must be > 0");
    if (!v.empty())
        throw ValidationError(std::move(v));
}

PdpBin peak_component(const PdpRecord &pdp)
{
    if (pdp.bins.empty())
        throw DomainError("empty power delay profile");
    // Strict > keeps the first (smallest delay) of equal maxima.
    PdpBin best = pdp.bins.front();
    for (const auto &b : pdp.bins)
        if (b.power_db > best.power_db)
            best = b;
    return best;
}

double integrate_pdp(const PdpRecord &pdp, double threshold_db)
{
    if (!(threshold_db >= 0.0))
        throw DomainError("integration threshold must be >= 0 dB");
    const double floor_db = peak_component(pdp).power_db - threshold_db;
    // Summed relative to the peak, in ascending order, so the result is exact for a single
    // component and does not depend on bin order.
    const double peak_db = peak_component(pdp).power_db;
    std::vector<double> rel;
    for (const auto &b : pdp.bins)
        if (b.power_db >= floor_db)
            rel.push_back(std::pow(10.0, (b.power_db - peak_db) / 10.0));
    std::sort(rel.begin(), rel.end());
    double sum = 0.0;
    for (double r : rel)
        sum += r;
    return peak_db + 10.0 * std::log10(sum);
}

double path_loss_from_power(const LinkCalibration &cal, double p_rx_db) noexcept
{
    return cal.radiated_power_db - p_rx_db + cal.g_tx_dbi + cal.g_rx_dbi;
}

double delay_to_distance(double delay_ns)
{
    if (!std::isfinite(delay_ns) || delay_ns < 0.0)
        throw DomainError("delay must be finite and >= 0");
    return delay_ns * 1e-9 * speed_of_light_mps;
}

double distance_to_delay(double distance_m)
{
    if (!std::isfinite(distance_m) || distance_m < 0.0)
        throw DomainError("distance must be finite and >= 0");
    return distance_m / speed_of_light_mps * 1e9;
}

AggregateResult aggregate_measurement(const MeasurementSet &set, const LinkCalibration &cal)
{
    if (set.sweeps.empty())
        throw DomainError("measurement set for seat " + std::to_string(set.seat) + " has no sweeps");
    cal.validate();

    std::vector<double> powers_db, delays;
    for (const auto &sweep : set.sweeps)
    {
        powers_db.push_back(integrate_pdp(sweep, cal.noise_threshold_db));
        delays.push_back(peak_component(sweep).delay_ns);
    }

    // Linear mean relative to the strongest sweep; sorting fixes the summation order.
    std::sort(powers_db.begin(), powers_db.end());
    const double ref = powers_db.back();
    double sum = 0.0;
    for (double p : powers_db)
        sum += std::pow(10.0, (p - ref) / 10.0);
    const double p_rx = ref + 10.0 * std::log10(sum / static_cast<double>(powers_db.size()));

    std::sort(delays.begin(), delays.end());
    const auto n = delays.size();
    const double median_delay = n % 2 == 1 ? delays[n / 2] : 0.5 * (delays[n / 2 - 1] + delays[n / 2]);

    return {set.seat, set.height, delay_to_distance(median_delay), p_rx, path_loss_from_power(cal, p_rx)};
}

PdpRecord parse_pdp_csv(const std::string &text, const std::string &source)
{
    const auto lines = text::split_lines(text);
    if (lines.empty() || text::trim(lines.front()) != "delay_ns,power_db")
        throw ParseError(source, 1, "expected header 'delay_ns,power_db'");

    PdpRecord pdp;
    for (std::size_t i = 1; i < lines.size(); ++i)
    {
        const std::size_t line_no = i + 1;
        if (text::trim(lines[i]).empty())
            continue;
        const auto fields = text::split_csv(lines[i]);
        if (fields.size() != 2)
            throw ParseError(source, line_no, "expected 2 fields, got " + std::to_string(fields.size()));
        const auto delay = text::parse_double(fields[0]);
        const auto power = text::parse_double(fields[1]);
        if (!delay || !power)
            throw ParseError(source, line_no, "non-numeric value");
        if (*delay < 0.0)
            throw ParseError(source, line_no, "negative delay");
        if (!pdp.bins.empty() && !(*delay > pdp.bins.back().delay_ns))
            throw ParseError(source, line_no, "delays must be strictly increasing");
        pdp.bins.push_back({*delay, *power});
    }
    if (pdp.bins.empty())
        throw ParseError(source, 0, "no PDP bins");
    return pdp;
}

PdpRecord load_pdp_csv(const fs::path &path)
{
    return parse_pdp_csv(text::read_file(path), path.string());
}

void write_pdp_csv(const fs::path &path, const PdpRecord &pdp)
{
    std::string out = "delay_ns,power_db\n";
    for (const auto &b : pdp.bins)
        out += text::format_double(b.delay_ns) + "," + text::format_double(b.power_db) + "\n";
    text::write_file(path, out);
}

namespace {

json read_json(const fs::path &path)
{
    try
    {
        return json::parse(text::read_file(path));
    }
    catch (const json::parse_error &e)
    {
        throw ParseError(path.string(), 0, e.what());
    }
}

struct SweepTag
{
    int seat;
    HeightClass height;
};

SweepTag read_tag(const json &j, const fs::path &path)
{
    try
    {
        return {j.at("seat").get<int>(), parse_height(j.at("height").get<std::string>())};
    }
    catch (const json::exception &e)
    {
        throw ParseError(path.string(), 0, std::string("bad metadata: ") + e.what());
    }
    catch (const DomainError &e)
    {
        throw ParseError(path.string(), 0, e.what());
    }
}

MeasurementSet load_set(const fs::path &dir)
{
    static const std::regex dir_re(R"((\d+)_(lower|upper))", std::regex::icase);
    static const std::regex sweep_re(R"(sweep_(\d+)\.csv)");

    const auto name = dir.filename().string();
    std::smatch m;
    if (!std::regex_match(name, m, dir_re))
        throw ParseError(dir.string(), 0, "directory name must be <seat>_<lower|upper>");

    const auto meta_path = dir / "meta.json";
    if (!fs::exists(meta_path))
        throw ParseError(meta_path.string(), 0, "missing metadata file");
    const auto tag = read_tag(read_json(meta_path), meta_path);
    if (tag.seat != std::stoi(m[1].str()) || tag.height != parse_height(m[2].str()))
        throw ParseError(meta_path.string(), 0, "metadata does not match directory name " + name);

    std::map<int, fs::path> sweeps;
    for (const auto &entry : fs::directory_iterator(dir))
    {
        const auto file = entry.path().filename().string();
        std::smatch sm;
        if (entry.is_regular_file() && std::regex_match(file, sm, sweep_re))
            sweeps.emplace(std::stoi(sm[1].str()), entry.path());
    }
    if (sweeps.empty())
        throw ParseError(dir.string(), 0, "no sweep_<k>.csv files");

    MeasurementSet set{tag.seat, tag.height, {}};
    for (const auto &[k, path] : sweeps)
    {
        auto pdp = load_pdp_csv(path);
        pdp.seat = tag.seat;
        pdp.height = tag.height;
        pdp.sweep = k;
        auto sidecar = path;
        sidecar.replace_extension(".json");
        if (fs::exists(sidecar))
        {
            const auto j = read_json(sidecar);
            const auto st = read_tag(j, sidecar);
            if (st.seat != tag.seat || st.height != tag.height || j.value("sweep", k) != k)
                throw ParseError(sidecar.string(), 0, "sweep metadata does not match its set");
        }
        set.sweeps.push_back(std::move(pdp));
    }
    return set;
}

} // namespace

std::vector<MeasurementSet> load_measurement_dir(const fs::path &dir)
{
    if (!fs::is_directory(dir))
        throw ParseError(dir.string(), 0, "not a directory");
    std::vector<fs::path> subdirs;
    for (const auto &entry : fs::directory_iterator(dir))
        if (entry.is_directory())
            subdirs.push_back(entry.path());

    std::vector<MeasurementSet> sets;
    for (const auto &d : subdirs)
        sets.push_back(load_set(d));
    std::sort(sets.begin(), sets.end(), [](const auto &a, const auto &b) {
        return std::pair(a.seat, a.height) < std::pair(b.seat, b.height);
    });
    return sets;
}

void write_measurement_dir(const fs::path &dir, const std::vector<MeasurementSet> &sets)
{
    fs::create_directories(dir);
    for (const auto &set : sets)
    {
        const auto sub = dir / (std::to_string(set.seat) + "_" + std::string(to_string(set.height)));
        fs::create_directories(sub);
        text::write_file(sub / "meta.json",
                         json{{"seat", set.seat}, {"height", to_string(set.height)}}.dump(2) + "\n");
        for (std::size_t k = 0; k < set.sweeps.size(); ++k)
        {
            const auto base = sub / ("sweep_" + std::to_string(k));
            write_pdp_csv(base.string() + ".csv", set.sweeps[k]);
            text::write_file(base.string() + ".json",
                             json{{"seat", set.seat}, {"height", to_string(set.height)}, {"sweep", k}}.dump(2) + "\n");
        }
    }
}

LinkCalibration load_calibration(const fs::path &path)
{
    const auto j = read_json(path);
    LinkCalibration cal;
    try
    {
        if (!j.contains("radiated_power_db"))
            throw ParseError(path.string(), 0, "radiated_power_db is required");
        cal.radiated_power_db = j.at("radiated_power_db").get<double>();
        cal.g_tx_dbi = j.value("g_tx_dbi", cal.g_tx_dbi);
        cal.g_rx_dbi = j.value("g_rx_dbi", cal.g_rx_dbi);
        cal.noise_threshold_db = j.value("noise_threshold_db", cal.noise_threshold_db);
    }
    catch (const json::exception &e)
    {
        throw ParseError(path.string(), 0, e.what());
    }
    cal.validate();
    return cal;
}

} // namespace buspl
