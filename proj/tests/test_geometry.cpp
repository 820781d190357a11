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

#include "doctest.h"

#include "buspl/error.hpp"
#include "buspl/geometry.hpp"
#include "buspl/text.hpp"

#include <algorithm>
#include <cmath>
#include <set>

using namespace buspl;

#ifndef BUSPL_DATA_DIR
#error "BUSPL_DATA_DIR must point at the repository data directory"
#endif

TEST_CASE("default layout")
{
    const auto layout = default_layout();
    CHECK_NOTHROW(layout.validate());
    CHECK(layout.length_m == 12.80);
    CHECK(layout.width_m == 2.55);
    CHECK(layout.rx.z == 2.0);
    CHECK(layout.seats.size() == 30);
    CHECK(std::count_if(layout.seats.begin(), layout.seats.end(), [](const auto &s) { return s.lower_excluded; }) == 8);
    for (int id : {5, 6, 7, 8, 27, 28, 29, 30})
        CHECK(layout.seat(id).lower_excluded);

    // every seat in exactly one of A-D, union is the seat set
    std::set<int> seen;
    for (auto r : seat_regions)
        for (int id : seats_in_group(layout, r, HeightClass::Upper))
            CHECK(seen.insert(id).second);
    CHECK(seen.size() == 30);

    CHECK(seats_in_group(layout, Region::All, HeightClass::Upper).size() == 30);
    CHECK(seats_in_group(layout, Region::All, HeightClass::Lower).size() == 22);
}

TEST_CASE("shipped layout file matches the built-in default")
{
    const auto from_file = load_layout(std::string(BUSPL_DATA_DIR) + "/default_layout.json");
    CHECK(layout_to_json(from_file) == layout_to_json(default_layout()));
}

TEST_CASE("layout JSON round trip")
{
    auto layout = default_layout();
    layout.height_mode = HeightMode::SeatRelative;
    layout.upper_height_m = 0.75;
    const auto back = layout_from_json(layout_to_json(layout));
    CHECK(layout_to_json(back) == layout_to_json(layout));
    CHECK(back.height_mode == HeightMode::SeatRelative);
}

TEST_CASE("layout validation")
{
    SUBCASE("seat beyond the bus length")
    {
        auto layout = default_layout();
        layout.seats[0].x = 13.0;
        CHECK_THROWS_AS(layout.validate(), ValidationError);
    }

    SUBCASE("all violations are listed")
    {
        const std::string j = R"({"length_m": 12.8, "width_m": 2.55, "rx": {"x": 0.5, "y": 1.2, "z": 2},
            "seats": [{"id": 1, "x": 13.0, "y": 1.0, "group": "A"},
                      {"id": 1, "x": 2.0, "y": 1.0, "group": "B"},
                      {"id": 2, "x": 3.0, "y": 1.0, "group": "All"}]})";
        try
        {
            layout_from_json(j);
            FAIL("expected validation error");
        }
        catch (const ValidationError &e)
        {
            CHECK(e.violations().size() == 3);
        }
    }

    SUBCASE("empty seat list is valid")
    {
        const auto layout = layout_from_json(R"({"length_m": 12.8, "width_m": 2.55, "rx": {"x": 0.5, "y": 1.2, "z": 2}, "seats": []})");
        CHECK(layout.seats.empty());
        CHECK(seats_in_group(layout, Region::All, HeightClass::Upper).empty());
    }

    SUBCASE("receiver outside the footprint")
    {
        CHECK_THROWS_AS(layout_from_json(R"({"length_m": 12.8, "width_m": 2.55, "rx": {"x": -1, "y": 1.2, "z": 2}})"),
                        ValidationError);
    }

    SUBCASE("malformed JSON")
    {
        CHECK_THROWS_AS(layout_from_json("{"), ParseError);
        CHECK_THROWS_AS(layout_from_json(R"({"width_m": 2})"), ParseError);
    }
}

TEST_CASE("transmitter positions")
{
    const auto layout = default_layout();
    CHECK(tx_position(layout, 14, HeightClass::Upper).z == 1.2);
    CHECK(tx_position(layout, 24, HeightClass::Lower).z == 0.7);
    CHECK_THROWS_AS(tx_position(layout, 5, HeightClass::Lower), ExcludedPositionError);
    CHECK_NOTHROW(tx_position(layout, 5, HeightClass::Upper));
    CHECK_THROWS_AS(tx_position(layout, 99, HeightClass::Upper), NotFoundError);

    // height depends only on the class under floor referencing
    for (const auto &s : layout.seats)
        CHECK(tx_position(layout, s.id, HeightClass::Upper).z == 1.2);

    SUBCASE("seat-relative heights")
    {
        auto rel = layout;
        rel.height_mode = HeightMode::SeatRelative;
        CHECK(tx_position(rel, 14, HeightClass::Upper).z == doctest::Approx(1.2 + 0.45));
    }
}

TEST_CASE("link distance")
{
    BusLayout layout;
    layout.rx = {0.0, 0.0, 2.0};
    layout.seats = {{1, 3.0, 0.0, 0.45, Region::A, false}, {2, 0.0, 0.0, 0.45, Region::A, false}};
    layout.upper_height_m = 1.2;
    CHECK(link_distance(layout, 1, HeightClass::Upper) == doctest::Approx(3.104834939252005).epsilon(1e-14));

    layout.upper_height_m = 2.0;
    CHECK(link_distance(layout, 2, HeightClass::Upper) == 0.0);

    const Point3 a{1, 2, 3}, b{4, -1, 0.5};
    CHECK(distance(a, b) == distance(b, a));

    SUBCASE("bounded by the bus diagonal")
    {
        const auto def = default_layout();
        const double dz = std::max(std::abs(def.rx.z - def.upper_height_m), std::abs(def.rx.z - def.lower_height_m));
        const double diag = std::sqrt(def.length_m * def.length_m + def.width_m * def.width_m + dz * dz);
        for (auto h : all_heights)
            for (int id : seats_in_group(def, Region::All, h))
                CHECK(link_distance(def, id, h) <= diag);
    }

    SUBCASE("default seat 14 sits about 4.05 m from the access point")
    {
        CHECK(link_distance(default_layout(), 14, HeightClass::Upper) == doctest::Approx(4.05).epsilon(0.005));
    }
}

TEST_CASE("eligibility")
{
    const auto layout = default_layout();
    CHECK(is_eligible(layout, 24, HeightClass::Lower));
    CHECK_FALSE(is_eligible(layout, 27, HeightClass::Lower));
    CHECK(is_eligible(layout, 27, HeightClass::Upper));
    CHECK_FALSE(is_eligible(layout, 31, HeightClass::Upper));
}
