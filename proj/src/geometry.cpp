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

#include "buspl/geometry.hpp"

#include "buspl/error.hpp"
#include "buspl/text.hpp"

#include "json.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace buspl {

using nlohmann::json;

double distance(const Point3 &a, const Point3 &b) noexcept
{
    return std::hypot(a.x - b.x, a.y - b.y, a.z - b.z);
}

void BusLayout::validate() const
{
    std::vector<std::string> v;
    auto finite = [](double x) { return std::isfinite(x); };

    if (!(finite(length_m) && length_m > 0.0))
        v.emplace_back("length_m must be > 0");
    if (!(finite(width_m) && width_m > 0.0))
        v.emplace_back("width_m must be > 0");
    if (!(finite(upper_height_m) && upper_height_m > 0.0) || !(finite(lower_height_m) && lower_height_m > 0.0))
        v.emplace_back("upper_height_m and lower_height_m must be > 0");
    if (!finite(rx.x) || !finite(rx.y) || !finite(rx.z))
        v.emplace_back("rx coordinates must be finite");
    else if (rx.x < 0.0 || rx.x > length_m || rx.y < 0.0 || rx.y > width_m)
        v.emplace_back("rx lies outside the bus footprint");

    std::set<int> ids;
    for (const auto &s : seats)
    {
        const auto tag = "seat " + std::to_string(s.id);
        if (!ids.insert(s.id).second)
            v.push_back(tag + ": duplicate id");
        if (!finite(s.x) || !finite(s.y) || s.x < 0.0 || s.x > length_m || s.y < 0.0 || s.y > width_m)
            v.push_back(tag + ": position outside the bus footprint");
        if (!finite(s.seat_height_m) || s.seat_height_m < 0.0)
            v.push_back(tag + ": seat_height_m must be >= 0");
        if (s.group == Region::All)
            v.push_back(tag + ": group must be one of A, B, C, D");
    }
    if (!v.empty())
        throw ValidationError(std::move(v));
}

const SeatSpec &BusLayout::seat(int id) const
{
    const auto it = std::find_if(seats.begin(), seats.end(), [id](const auto &s) { return s.id == id; });
    if (it == seats.end())
        throw NotFoundError("seat " + std::to_string(id) + " is not in the layout");
    return *it;
}

BusLayout default_layout()
{
    BusLayout layout;
    // Two seats per row and side. Left side: odd ids at the window (y = 0.35), even on the
    // aisle (0.80). Right side: odd ids on the aisle (1.75), even at the window (2.20).
    struct Row
    {
        int first_id;
        double x;
        Region group;
        bool left;
    };
    constexpr Row rows[] = {
        {1, 1.60, Region::A, true},   {3, 2.40, Region::A, true},   {5, 3.20, Region::A, true},
        {7, 4.00, Region::A, true},   {9, 2.84, Region::D, false},  {11, 3.60, Region::D, false},
        {13, 4.36, Region::D, false}, {15, 6.40, Region::B, true},  {17, 7.20, Region::B, true},
        {19, 8.00, Region::B, true},  {21, 8.80, Region::B, true},  {23, 8.00, Region::C, false},
        {25, 8.80, Region::C, false}, {27, 9.60, Region::C, false}, {29, 10.40, Region::C, false},
    };
    for (const auto &row : rows)
    {
        for (int k = 0; k < 2; ++k)
        {
            SeatSpec s;
            s.id = row.first_id + k;
            s.x = row.x;
            s.y = row.left ? (k == 0 ? 0.35 : 0.80) : (k == 0 ? 1.75 : 2.20);
            s.group = row.group;
            // Floor bulges over the wheel arches.
            s.lower_excluded = (s.id >= 5 && s.id <= 8) || (s.id >= 27 && s.id <= 30);
            layout.seats.push_back(s);
        }
    }
    std::sort(layout.seats.begin(), layout.seats.end(), [](const auto &a, const auto &b) { return a.id < b.id; });
    return layout;
}

BusLayout layout_from_json(const std::string &json_text, const std::string &source)
{
    json j;
    try
    {
        j = json::parse(json_text);
    }
    catch (const json::parse_error &e)
    {
        throw ParseError(source, 0, e.what());
    }

    BusLayout layout;
    layout.seats.clear();
    std::vector<std::string> problems;
    try
    {
        layout.length_m = j.at("length_m").get<double>();
        layout.width_m = j.at("width_m").get<double>();
        const auto &rx = j.at("rx");
        layout.rx = {rx.at("x").get<double>(), rx.at("y").get<double>(), rx.at("z").get<double>()};
        layout.upper_height_m = j.value("upper_height_m", layout.upper_height_m);
        layout.lower_height_m = j.value("lower_height_m", layout.lower_height_m);
        const auto mode = j.value("height_mode", std::string("floor"));
        if (mode == "floor")
            layout.height_mode = HeightMode::Floor;
        else if (mode == "seat_relative")
            layout.height_mode = HeightMode::SeatRelative;
        else
            problems.push_back("height_mode must be 'floor' or 'seat_relative'");

        for (const auto &js : j.value("seats", json::array()))
        {
            SeatSpec s;
            s.id = js.at("id").get<int>();
            s.x = js.at("x").get<double>();
            s.y = js.at("y").get<double>();
            s.seat_height_m = js.value("seat_height_m", s.seat_height_m);
            s.lower_excluded = js.value("lower_excluded", false);
            try
            {
                s.group = parse_region(js.at("group").get<std::string>());
            }
            catch (const DomainError &e)
            {
                problems.push_back("seat " + std::to_string(s.id) + ": " + e.what());
            }
            layout.seats.push_back(s);
        }
    }
    catch (const json::exception &e)
    {
        throw ParseError(source, 0, e.what());
    }

    try
    {
        layout.validate();
    }
    catch (const ValidationError &e)
    {
        problems.insert(problems.end(), e.violations().begin(), e.violations().end());
    }
    if (!problems.empty())
        throw ValidationError(std::move(problems));
    return layout;
}

BusLayout load_layout(const std::filesystem::path &path)
{
    return layout_from_json(text::read_file(path), path.string());
}

std::string layout_to_json(const BusLayout &layout)
{
    json seats = json::array();
    for (const auto &s : layout.seats)
        seats.push_back({{"id", s.id},
                         {"x", s.x},
                         {"y", s.y},
                         {"seat_height_m", s.seat_height_m},
                         {"group", to_string(s.group)},
                         {"lower_excluded", s.lower_excluded}});
    const json j = {
        {"length_m", layout.length_m},
        {"width_m", layout.width_m},
        {"rx", {{"x", layout.rx.x}, {"y", layout.rx.y}, {"z", layout.rx.z}}},
        {"upper_height_m", layout.upper_height_m},
        {"lower_height_m", layout.lower_height_m},
        {"height_mode", layout.height_mode == HeightMode::Floor ? "floor" : "seat_relative"},
        {"seats", seats},
    };
    return j.dump(2) + "\n";
}

Point3 tx_position(const BusLayout &layout, int seat_id, HeightClass height)
{
    const auto &s = layout.seat(seat_id);
    if (height == HeightClass::Lower && s.lower_excluded)
        throw ExcludedPositionError("seat " + std::to_string(seat_id) + " has no lower transmitter position");
    double z = height == HeightClass::Upper ? layout.upper_height_m : layout.lower_height_m;
    if (layout.height_mode == HeightMode::SeatRelative)
        z += s.seat_height_m;
    return {s.x, s.y, z};
}

double link_distance(const BusLayout &layout, int seat_id, HeightClass height)
{
    return distance(layout.rx, tx_position(layout, seat_id, height));
}

bool is_eligible(const BusLayout &layout, int seat_id, HeightClass height) noexcept
{
    const auto it = std::find_if(layout.seats.begin(), layout.seats.end(),
                                 [seat_id](const auto &s) { return s.id == seat_id; });
    return it != layout.seats.end() && !(height == HeightClass::Lower && it->lower_excluded);
}

std::vector<int> seats_in_group(const BusLayout &layout, Region region, HeightClass height)
{
    std::vector<int> out;
    for (const auto &s : layout.seats)
    {
        if (region != Region::All && s.group != region)
            continue;
        if (height == HeightClass::Lower && s.lower_excluded)
            continue;
        out.push_back(s.id);
    }
    return out;
}

} // namespace buspl
