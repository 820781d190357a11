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
#include "temp_dir.hpp"

#include "cli.hpp"

#include "buspl/geometry.hpp"
#include "buspl/io.hpp"
#include "buspl/models.hpp"
#include "buspl/text.hpp"

#include "json.hpp"

#include <sstream>

using namespace buspl;
namespace fs = std::filesystem;

namespace {

struct Result
{
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::vector<std::string>> csv_rows(const std::string &csv)
{
    std::vector<std::vector<std::string>> rows;
    for (auto line : text::split_lines(csv))
    {
        if (line.empty())
            continue;
        std::vector<std::string> row;
        for (auto f : text::split_csv(line))
            row.emplace_back(f);
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string write_model(const fs::path &dir, const std::string &name, PathLossModel m)
{
    const auto path = dir / name;
    text::write_file(path, io::model_to_json(m).dump());
    return path.string();
}

} // namespace

TEST_CASE("fit")
{
    TempDir tmp("buspl_cli");
    const auto samples = tmp.path / "s.csv";

    SUBCASE("noiseless data recovers the generating parameters")
    {
        auto m = lookup_builtin(Region::All, HeightClass::Lower);
        m.sigma_db = 0;
        SampleSet s;
        for (double d : {1.0, 2.0, 3.5, 6.0, 11.0})
            s.push_back({d, mean_path_loss(m, d), {}, {}, {}});
        text::write_file(samples, io::samples_to_csv(s, false));

        const auto table = run({"fit", samples.string(), "--format", "csv"});
        REQUIRE(table.code == 0);
        const auto rows = csv_rows(table.out);
        REQUIRE(rows.size() == 2);
        CHECK(rows[1][2] == "85.23");
        CHECK(rows[1][3] == "1.74");
        CHECK(rows[1][4] == "0.00");

        const auto js = run({"fit", samples.string()});
        REQUIRE(js.code == 0);
        const auto j = nlohmann::json::parse(js.out);
        CHECK(j.at("alpha_db").get<double>() == doctest::Approx(85.23).epsilon(1e-12));
        CHECK(j.at("n").get<int>() == 5);
        CHECK(j.contains("r_squared"));
    }

    SUBCASE("two rows are insufficient")
    {
        text::write_file(samples, "distance_m,path_loss_db\n1,85\n2,88\n");
        CHECK(run({"fit", samples.string()}).code == cli::exit_insufficient_data);
    }

    SUBCASE("identical distances are insufficient")
    {
        text::write_file(samples, "distance_m,path_loss_db\n2,85\n2,88\n2,86\n");
        CHECK(run({"fit", samples.string()}).code == cli::exit_insufficient_data);
    }

    SUBCASE("text in a numeric column")
    {
        text::write_file(samples, "distance_m,path_loss_db\n1,85\n2,88\nthree,90\n");
        const auto r = run({"fit", samples.string()});
        CHECK(r.code == cli::exit_input_error);
        CHECK(r.err.find("s.csv:4") != std::string::npos);
    }

    SUBCASE("missing file")
    {
        CHECK(run({"fit", (tmp.path / "nope.csv").string()}).code == cli::exit_input_error);
    }

    SUBCASE("by group")
    {
        const auto synth = run({"synth", "--seed", "3", "--samples-per-seat", "5"});
        REQUIRE(synth.code == 0);
        text::write_file(samples, synth.out);
        const auto r = run({"fit", samples.string(), "--by-group"});
        REQUIRE(r.code == 0);
        const auto j = nlohmann::json::parse(r.out);
        CHECK(j.size() == 10);
    }
}

TEST_CASE("eval")
{
    TempDir tmp("buspl_cli");

    const auto r = run({"eval", "--model", "All/Upper", "--distances", "1:12:1"});
    REQUIRE(r.code == 0);
    const auto rows = csv_rows(r.out);
    REQUIRE(rows.size() == 13);
    CHECK(rows[0] == std::vector<std::string>{"distance_m", "mean_pl_db", "p05_db", "p95_db"});
    CHECK(std::stod(rows[10][1]) == doctest::Approx(103.16).epsilon(1e-12));
    CHECK(r.err.empty());

    const auto lo = csv_rows(run({"eval", "--model", "all/lower", "--distances", "1"}).out);
    CHECK(std::stod(lo[1][3]) - std::stod(lo[1][2]) == doctest::Approx(2 * 1.6449 * 2.54).epsilon(1e-4));

    PathLossModel flat{80.0, 2.0, 0.0, Region::A, HeightClass::Upper};
    const auto file = write_model(tmp.path, "flat.json", flat);
    for (const auto &row : csv_rows(run({"eval", "--model-file", file, "--distances", "1:3:0.5"}).out))
        if (row[0] != "distance_m")
        {
            CHECK(row[1] == row[2]);
            CHECK(row[2] == row[3]);
        }

    CHECK(run({"eval", "--distances", "0:5:1"}).code == cli::exit_input_error);
    CHECK(run({"eval", "--distances", "5:1:1"}).code == cli::exit_input_error);
    CHECK(run({"eval", "--distances", "1:5:0"}).code == cli::exit_input_error);
    CHECK(run({"eval", "--distances", "a:b:c"}).code == cli::exit_input_error);
    CHECK(run({"eval", "--model", "E/upper", "--distances", "1"}).code == cli::exit_input_error);

    const auto far = run({"eval", "--distances", "10:20:5", "--format", "json"});
    REQUIRE(far.code == 0);
    CHECK(far.err.find("extrapolated") != std::string::npos);
    const auto j = nlohmann::json::parse(far.out);
    CHECK_FALSE(j[0].at("extrapolated").get<bool>());
    CHECK(j[2].at("extrapolated").get<bool>());
}

TEST_CASE("verify")
{
    TempDir tmp("buspl_cli");
    const auto ok = run({"verify"});
    CHECK(ok.code == 0);
    CHECK(ok.out.find("FAIL") == std::string::npos);
    CHECK(ok.out.rfind("PASS") != std::string::npos);

    const auto b = builtin_models();
    std::vector<PathLossModel> reg(b.begin(), b.end());
    for (auto &m : reg)
        if (m.region == Region::All && m.height == HeightClass::Lower)
            m.sigma_db = 3.0;
    const auto path = tmp.path / "reg.json";
    text::write_file(path, io::models_to_json_text(reg));
    const auto bad = run({"verify", "--registry", path.string()});
    CHECK(bad.code == cli::exit_verification_failed);
    CHECK(bad.out.find("variance_db2,9.0000,6.5") != std::string::npos);

    const auto js = nlohmann::json::parse(run({"verify", "--format", "json"}).out);
    CHECK(js.at("pass").get<bool>());
    CHECK(js.at("checks").size() == 6);
}

TEST_CASE("models export")
{
    const auto r = run({"models"});
    REQUIRE(r.code == 0);
    const auto models = io::models_from_json_text(r.out, "<stdout>");
    REQUIRE(models.size() == 10);
    for (std::size_t i = 0; i < 10; ++i)
        CHECK(models[i] == builtin_models()[i]);
}

TEST_CASE("synth")
{
    const auto a = run({"synth", "--seed", "11"});
    const auto b = run({"synth", "--seed", "11"});
    const auto c = run({"synth", "--seed", "12"});
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out != c.out);
    CHECK(csv_rows(a.out).size() == 1 + 30 + 22);

    const auto lower = csv_rows(run({"synth", "--seed", "1", "--height", "lower"}).out);
    CHECK(lower.size() == 23);
    for (std::size_t i = 1; i < lower.size(); ++i)
    {
        const int seat = std::stoi(lower[i][2]);
        CHECK_FALSE(((seat >= 5 && seat <= 8) || (seat >= 27 && seat <= 30)));
    }

    const auto flat = run({"synth", "--seed", "1", "--model", "All/Upper", "--no-shadowing"});
    const auto m = lookup_builtin(Region::All, HeightClass::Upper);
    for (const auto &s : io::parse_samples_csv(flat.out))
        CHECK(s.path_loss_db == mean_path_loss(m, s.distance_m));

    CHECK(run({"synth", "--layout", "/nonexistent/layout.json"}).code == cli::exit_input_error);
    CHECK(run({"synth", "--pdp-dir", "/tmp/x"}).code == cli::exit_input_error); // needs --calibration
}

TEST_CASE("process")
{
    TempDir tmp("buspl_cli");
    const auto cal = tmp.path / "cal.json";
    text::write_file(cal, R"({"radiated_power_db": -10.0, "g_tx_dbi": 2, "g_rx_dbi": 2, "noise_threshold_db": 25})");

    SUBCASE("72 measurement sets")
    {
        BusLayout layout = default_layout();
        layout.seats.clear();
        for (int id = 1; id <= 36; ++id)
            layout.seats.push_back({id, 1.0 + 0.3 * id, id % 2 ? 0.4 : 2.1, 0.45, seat_regions[id % 4], false});
        const auto lpath = tmp.path / "layout36.json";
        text::write_file(lpath, layout_to_json(layout));

        const auto dir = tmp.path / "m72";
        REQUIRE(run({"synth", "--layout", lpath.string(), "--seed", "5", "--pdp-dir", dir.string(), "--calibration",
                     cal.string()})
                    .code == 0);
        const auto r = run({"process", dir.string(), cal.string(), "--layout", lpath.string()});
        REQUIRE(r.code == 0);
        CHECK(csv_rows(r.out).size() == 73);

        SUBCASE("a corrupt sweep withholds all output")
        {
            const auto bad = dir / "17_lower" / "sweep_3.csv";
            text::write_file(bad, "delay_ns,power_db\n5,-90\n4,x\n");
            const auto out = tmp.path / "out.csv";
            const auto e = run({"process", dir.string(), cal.string(), "--layout", lpath.string(), "-o", out.string()});
            CHECK(e.code == cli::exit_input_error);
            CHECK(e.err.find("sweep_3.csv") != std::string::npos);
            CHECK_FALSE(fs::exists(out));
        }

        SUBCASE("seats missing from the layout")
        {
            CHECK(run({"process", dir.string(), cal.string()}).code == cli::exit_input_error);
        }
    }

    SUBCASE("noise-free round trip through fit")
    {
        const auto dir = tmp.path / "flat";
        REQUIRE(run({"synth", "--seed", "1", "--model", "B/Lower", "--no-shadowing", "--height", "lower", "--pdp-dir",
                     dir.string(), "--calibration", cal.string()})
                    .code == 0);
        const auto samples = tmp.path / "samples.csv";
        REQUIRE(run({"process", dir.string(), cal.string(), "-o", samples.string()}).code == 0);
        const auto fit = nlohmann::json::parse(run({"fit", samples.string()}).out);
        CHECK(fit.at("alpha_db").get<double>() == doctest::Approx(83.83).epsilon(1e-9));
        CHECK(fit.at("beta").get<double>() == doctest::Approx(1.91).epsilon(1e-9));
        CHECK(fit.at("height") == "lower");
        CHECK(fit.at("n").get<int>() == 22);
    }

    CHECK(run({"process", (tmp.path / "none").string(), cal.string()}).code == cli::exit_input_error);
}

TEST_CASE("sweep and footprint")
{
    TempDir tmp("buspl_cli");

    CHECK(csv_rows(run({"sweep"}).out).size() == 31);
    CHECK(csv_rows(run({"sweep", "--height", "lower"}).out).size() == 23);
    CHECK(csv_rows(run({"sweep", "--seats", "1,14"}).out).size() == 3);
    CHECK(run({"sweep", "--height", "lower", "--seats", "5"}).code == cli::exit_ineligible);
    CHECK(run({"sweep", "--seats", "99"}).code == cli::exit_ineligible);

    const auto js = nlohmann::json::parse(run({"sweep", "--format", "json"}).out);
    CHECK(js.size() == 30);
    CHECK(js[0].contains("coverage"));

    const auto cfg = tmp.path / "budget.json";
    text::write_file(cfg, R"({"bandwidth_hz": 0})");
    CHECK(run({"sweep", "--config", cfg.string()}).code == cli::exit_input_error);

    CHECK(run({"footprint", "--active", "1,2"}).code == cli::exit_input_error); // --seed is mandatory
    CHECK(run({"footprint", "--seed", "1", "--active", "5", "--height", "lower"}).code == cli::exit_ineligible);

    const auto f1 = run({"footprint", "--seed", "9", "--active", "3,14,22", "--draws", "500"});
    const auto f2 = run({"footprint", "--seed", "9", "--active", "3,14,22", "--draws", "500"});
    REQUIRE(f1.code == 0);
    CHECK(f1.out == f2.out);
    CHECK(csv_rows(f1.out).size() == 4);

    SUBCASE("single active seat matches the sweep SNR")
    {
        const auto b = builtin_models();
        std::vector<PathLossModel> reg(b.begin(), b.end());
        for (auto &m : reg)
            m.sigma_db = 0.0;
        const auto rpath = tmp.path / "flat.json";
        text::write_file(rpath, io::models_to_json_text(reg));
        const auto sweep = csv_rows(run({"sweep", "--registry", rpath.string(), "--seats", "14"}).out);
        const auto fp =
            csv_rows(run({"footprint", "--registry", rpath.string(), "--seed", "1", "--active", "14", "--draws", "10"}).out);
        CHECK(std::stod(fp[1][4]) == doctest::Approx(std::stod(sweep[1][4])).epsilon(1e-12));
        CHECK(std::stod(fp[1][5]) == doctest::Approx(std::stod(sweep[1][4])).epsilon(1e-12));
    }

    SUBCASE("registry gaps are configuration errors")
    {
        const auto rpath = tmp.path / "one.json";
        text::write_file(rpath, io::model_to_json(lookup_builtin(Region::All, HeightClass::Upper)).dump());
        CHECK(run({"sweep", "--registry", rpath.string()}).code == cli::exit_input_error);
        CHECK(run({"sweep", "--registry", rpath.string(), "--all-model"}).code == 0);
    }
}

TEST_CASE("compare needs a user-supplied model")
{
    TempDir tmp("buspl_cli");
    CHECK(run({"compare", "--distances", "1:10:1"}).code == cli::exit_input_error);

    const auto other = write_model(tmp.path, "other.json", lookup_builtin(Region::All, HeightClass::Lower));
    const auto r = run({"compare", "--model", "All/Upper", "--against", other, "--distances", "1:10:9"});
    REQUIRE(r.code == 0);
    const auto rows = csv_rows(r.out);
    CHECK(std::stod(rows[1][3]) == doctest::Approx(-2.37).epsilon(1e-12));
    CHECK(std::stod(rows[2][3]) == doctest::Approx(0.53).epsilon(1e-9));
}

TEST_CASE("general command line behaviour")
{
    TempDir tmp("buspl_cli");
    CHECK(run({}).code == cli::exit_input_error);
    CHECK(run({"bogus"}).code == cli::exit_input_error);
    const auto help = run({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("footprint") != std::string::npos);

    const auto out = tmp.path / "curve.csv";
    REQUIRE(run({"eval", "--distances", "1:2:1", "--output", out.string()}).code == 0);
    CHECK(text::read_file(out).starts_with("distance_m,mean_pl_db"));
}
