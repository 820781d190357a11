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

#ifndef BUSPL_GEOMETRY_HPP
#define BUSPL_GEOMETRY_HPP

#include "buspl/models.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace buspl {

struct Point3
{
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

double distance(const Point3 &a, const Point3 &b) noexcept;

struct SeatSpec
{
    int id = 0;
    double x = 0.0; // along the bus, from the front
    double y = 0.0; // across the bus
    double seat_height_m = 0.45;
    Region group = Region::A; // never Region::All
    bool lower_excluded = false;
};

// How transmitter heights are referenced: above the floor, or above the seat cushion.
enum class HeightMode { Floor, SeatRelative };

struct BusLayout
{
    double length_m = 12.80;
    double width_m = 2.55;
    Point3 rx{0.5, 1.275, 2.0};
    double upper_height_m = 1.2;
    double lower_height_m = 0.7;
    HeightMode height_mode = HeightMode::Floor;
    std::vector<SeatSpec> seats;

    // Throws ValidationError listing every violation.
    void validate() const;

    // Throws NotFoundError.
    const SeatSpec &seat(int id) const;
};

// Built-in 12.80 m x 2.55 m city-bus layout with 30 seats in groups A-D. Seat coordinates
// are approximate; seats 5-8 and 27-30 are flagged lower_excluded.
BusLayout default_layout();

BusLayout layout_from_json(const std::string &json_text, const std::string &source = "<layout>");
BusLayout load_layout(const std::filesystem::path &path);
std::string layout_to_json(const BusLayout &layout);

// Throws NotFoundError for an unknown seat and ExcludedPositionError for a lower position
// on an excluded seat.
Point3 tx_position(const BusLayout &layout, int seat_id, HeightClass height);

double link_distance(const BusLayout &layout, int seat_id, HeightClass height);

// Seats of `region` eligible at `height`, in layout order. Region::All selects every group.
std::vector<int> seats_in_group(const BusLayout &layout, Region region, HeightClass height);

bool is_eligible(const BusLayout &layout, int seat_id, HeightClass height) noexcept;

} // namespace buspl

#endif
