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

#include "cli.hpp"

#include "buspl/error.hpp"
#include "buspl/fit.hpp"
#include "buspl/geometry.hpp"
#include "buspl/io.hpp"
#include "buspl/linkbudget.hpp"
#include "buspl/models.hpp"
#include "buspl/pdp.hpp"
#include "buspl/text.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <sstream>

namespace buspl::cli {

namespace {

using nlohmann::json;
namespace fs = std::filesystem;

// Two-sided 90 % band of a standard normal.
constexpr double z_95 = 1.6448536269514722;

// Signals exit code 1 out of a command handler.
struct VerificationFailed
{
};

// Raised for requests naming seats that cannot transmit at the requested height.
struct IneligibleRequest : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

struct Globals
{
    std::string output;
    std::string format;
    std::uint64_t seed = 0;
    bool seed_given = false;
    std::string layout;
};

std::string fmt(double v)
{
    return text::format_double(v);
}

BusLayout resolve_layout(const Globals &g)
{
    return g.layout.empty() ? default_layout() : load_layout(g.layout);
}

std::vector<PathLossModel> resolve_registry(const std::string &path)
{
    if (path.empty())
    {
        const auto b = builtin_models();
        return {b.begin(), b.end()};
    }
    return io::load_models(path);
}

// "All/Upper", "c/lower", ...
PathLossModel parse_model_selector(const std::string &sel)
{
    const auto slash = sel.find('/');
    if (slash == std::string::npos)
        throw DomainError("model selector must look like REGION/HEIGHT, e.g. All/Upper");
    return lookup_builtin(parse_region(sel.substr(0, slash)), parse_height(sel.substr(slash + 1)));
}

PathLossModel resolve_model(const std::string &selector, const std::string &file)
{
    if (!file.empty())
    {
        const auto models = io::load_models(file);
        if (models.size() != 1)
            throw ParseError(file, 0, "expected exactly one model");
        return models.front();
    }
    return parse_model_selector(selector.empty() ? "All/Upper" : selector);
}

// a:b:step, inclusive of b up to rounding.
std::vector<double> parse_distance_range(const std::string &spec)
{
    std::vector<double> parts;
    std::size_t start = 0;
    while (true)
    {
        const auto colon = spec.find(':', start);
        const auto v = text::parse_double(spec.substr(start, colon == std::string::npos ? std::string::npos : colon - start));
        if (!v)
            throw DomainError("distance range must be a:b:step with numbers, got '" + spec + "'");
        parts.push_back(*v);
        if (colon == std::string::npos)
            break;
        start = colon + 1;
    }
    if (parts.size() == 1)
        parts = {parts[0], parts[0], 1.0};
    if (parts.size() != 3)
        throw DomainError("distance range must be a:b:step");
    const double a = parts[0], b = parts[1], step = parts[2];
    if (!(a > 0.0) || !(b >= a) || !(step > 0.0))
        throw DomainError("distance range needs 0 < a <= b and step > 0");
    std::vector<double> out;
    const auto count = static_cast<std::size_t>(std::floor((b - a) / step + 1e-9)) + 1;
    if (count > 10'000'000)
        throw DomainError("distance range has too many points");
    for (std::size_t i = 0; i < count; ++i)
        out.push_back(a + static_cast<double>(i) * step);
    return out;
}

std::vector<int> parse_seat_list(const std::string &spec)
{
    std::vector<int> seats;
    for (auto field : text::split_csv(spec))
    {
        const auto v = text::parse_int(field);
        if (!v)
            throw DomainError("seat list must be comma-separated integers, got '" + spec + "'");
        seats.push_back(static_cast<int>(*v));
    }
    return seats;
}

std::vector<HeightClass> parse_heights(const std::string &s)
{
    if (s == "both")
        return {HeightClass::Lower, HeightClass::Upper};
    return {parse_height(s)};
}

void require_eligible(const BusLayout &layout, std::span<const int> seats, HeightClass height)
{
    for (int id : seats)
        if (!is_eligible(layout, id, height))
            throw IneligibleRequest("seat " + std::to_string(id) + " is not eligible at height " +
                                    std::string(to_string(height)));
}

// A registry is usable for seat-level work only if every (group, height) it will be asked
// for is present; a gap is a configuration error rather than an ineligible seat.
void require_registry_covers(std::span<const PathLossModel> registry, const BusLayout &layout, HeightClass height,
                             bool force_all)
{
    for (const auto &s : layout.seats)
    {
        const Region r = force_all ? Region::All : s.group;
        if (!find_model(registry, r, height))
            throw ValidationError({"model registry has no entry for " + std::string(to_string(r)) + "/" +
                                   std::string(to_string(height))});
    }
}

class Emitter
{
public:
    Emitter(const Globals &g, std::ostream &out) : g_(g), out_(out) {}

    void emit(const std::string &payload) const
    {
        if (g_.output.empty() || g_.output == "-")
            out_ << payload;
        else
            text::write_file(g_.output, payload);
    }

    bool json() const { return g_.format == "json"; }

private:
    const Globals &g_;
    std::ostream &out_;
};

// ---- fit -------------------------------------------------------------------

std::string fit_table(const std::vector<FitResult> &fits)
{
    std::string s = "region,height,alpha_db,beta,sigma_db,r_squared,n\n";
    for (const auto &f : fits)
        s += std::string(to_string(f.model.region)) + "," + std::string(to_string(f.model.height)) + "," +
             text::format_fixed(f.model.alpha_db, 2) + "," + text::format_fixed(f.model.beta, 2) + "," +
             text::format_fixed(f.model.sigma_db, 2) + "," + text::format_fixed(f.r_squared, 2) + "," +
             std::to_string(f.n) + "\n";
    return s;
}

void cmd_fit(const std::string &input, bool by_group, double trim, const Emitter &em, std::ostream &err)
{
    const auto samples = io::load_samples_csv(input);
    FitOptions options;
    options.trim_fraction = trim;

    std::vector<FitResult> fits;
    if (by_group)
    {
        const auto part = fit_by_partition(samples, options);
        for (const auto &[key, fit] : part.fits)
            fits.push_back(fit);
        for (const auto &key : part.skipped)
            err << "note: skipped " << to_string(key.first) << "/" << to_string(key.second)
                << " (fewer than 3 samples)\n";
    }
    else
    {
        // Tag the pooled fit with the samples' common height when there is one.
        if (!samples.empty() && samples.front().height &&
            std::all_of(samples.begin(), samples.end(), [&](const Sample &s) { return s.height == samples.front().height; }))
            options.height = *samples.front().height;
        fits.push_back(fit_log_distance(samples, options));
    }

    if (!em.json())
    {
        em.emit(fit_table(fits));
        return;
    }
    if (!by_group)
    {
        em.emit(io::fit_to_json(fits.front()).dump(2) + "\n");
        return;
    }
    json arr = json::array();
    for (const auto &f : fits)
        arr.push_back(io::fit_to_json(f));
    em.emit(arr.dump(2) + "\n");
}

// ---- eval / compare --------------------------------------------------------

void cmd_eval(const PathLossModel &model, const std::string &range, const Emitter &em, std::ostream &err)
{
    const auto distances = parse_distance_range(range);
    std::string csv = "distance_m,mean_pl_db,p05_db,p95_db\n";
    json arr = json::array();
    std::size_t extrapolated = 0;
    for (double d : distances)
    {
        const auto e = evaluate(model, d);
        const double half = z_95 * model.sigma_db;
        extrapolated += e.extrapolated ? 1 : 0;
        csv += fmt(d) + "," + fmt(e.mean_db) + "," + fmt(e.mean_db - half) + "," + fmt(e.mean_db + half) + "\n";
        arr.push_back({{"distance_m", d},
                       {"mean_pl_db", e.mean_db},
                       {"p05_db", e.mean_db - half},
                       {"p95_db", e.mean_db + half},
                       {"extrapolated", e.extrapolated}});
    }
    if (extrapolated > 0)
        err << "warning: " << extrapolated << " distance(s) outside (" << validity_min_m << ", " << validity_max_m
            << ") m are extrapolated\n";
    em.emit(em.json() ? arr.dump(2) + "\n" : csv);
}

void cmd_compare(const PathLossModel &a, const PathLossModel &b, const std::string &range, const Emitter &em)
{
    const auto distances = parse_distance_range(range);
    const auto diff = compare_models(a, b, distances);
    std::string csv = "distance_m,model_db,against_db,difference_db\n";
    json arr = json::array();
    for (std::size_t i = 0; i < distances.size(); ++i)
    {
        const double ma = mean_path_loss(a, distances[i]);
        const double mb = mean_path_loss(b, distances[i]);
        csv += fmt(distances[i]) + "," + fmt(ma) + "," + fmt(mb) + "," + fmt(diff[i]) + "\n";
        arr.push_back({{"distance_m", distances[i]}, {"model_db", ma}, {"against_db", mb}, {"difference_db", diff[i]}});
    }
    em.emit(em.json() ? arr.dump(2) + "\n" : csv);
}

// ---- verify ----------------------------------------------------------------

void cmd_verify(const std::string &registry_path, const Emitter &em)
{
    const auto registry = resolve_registry(registry_path);
    const auto report = verify_combined_forms(registry);

    std::string table = "height,quantity,computed,printed,delta,tolerance,status\n";
    json arr = json::array();
    for (const auto &c : report.checks)
    {
        const double delta = c.computed - c.printed;
        table += std::string(to_string(c.height)) + "," + c.quantity + "," + text::format_fixed(c.computed, 4) + "," +
                 text::format_fixed(c.printed, 1) + "," + text::format_fixed(delta, 4) + "," +
                 text::format_fixed(c.tolerance, 2) + "," + (c.pass ? "PASS" : "FAIL") + "\n";
        arr.push_back({{"height", to_string(c.height)},
                       {"quantity", c.quantity},
                       {"computed", c.computed},
                       {"printed", c.printed},
                       {"delta", delta},
                       {"tolerance", c.tolerance},
                       {"pass", c.pass}});
    }
    table += report.all_pass() ? "PASS\n" : "FAIL\n";
    em.emit(em.json() ? json{{"pass", report.all_pass()}, {"checks", arr}}.dump(2) + "\n" : table);
    if (!report.all_pass())
        throw VerificationFailed{};
}

// ---- process ---------------------------------------------------------------

void cmd_process(const std::string &dir, const std::string &calibration, const Globals &g, const Emitter &em)
{
    const auto cal = load_calibration(calibration);
    const auto layout = resolve_layout(g);
    const auto sets = load_measurement_dir(dir);

    SampleSet samples;
    for (const auto &set : sets)
    {
        const auto agg = aggregate_measurement(set, cal);
        Sample s;
        s.distance_m = agg.distance_m;
        s.path_loss_db = agg.path_loss_db;
        s.seat = set.seat;
        s.height = set.height;
        try
        {
            s.region = layout.seat(set.seat).group;
        }
        catch (const NotFoundError &)
        {
            throw ValidationError({"seat " + std::to_string(set.seat) + " in " + dir + " is not in the layout"});
        }
        samples.push_back(s);
    }
    em.emit(io::samples_to_csv(samples, true));
}

// ---- synth -----------------------------------------------------------------

struct SynthOptions
{
    std::string model_selector;
    std::string model_file;
    std::string heights = "both";
    std::size_t per_seat = 1;
    bool no_shadowing = false;
    std::string pdp_dir;
    std::string calibration;
    std::size_t sweeps = 10;
};

void cmd_synth(const SynthOptions &o, const Globals &g, const Emitter &em, std::ostream &err)
{
    const auto layout = resolve_layout(g);
    const bool per_group = o.model_file.empty() && (o.model_selector.empty() || o.model_selector == "group");
    std::optional<PathLossModel> fixed;
    if (!per_group)
        fixed = resolve_model(o.model_selector, o.model_file);
    if (o.per_seat == 0)
        throw DomainError("--samples-per-seat must be >= 1");

    std::optional<LinkCalibration> cal;
    if (!o.pdp_dir.empty())
    {
        if (o.calibration.empty())
            throw DomainError("--pdp-dir requires --calibration");
        if (o.sweeps == 0)
            throw DomainError("--sweeps must be >= 1");
        cal = load_calibration(o.calibration);
    }

    RandomStream rng(g.seed);
    SampleSet samples;
    std::vector<MeasurementSet> sets;
    for (auto height : parse_heights(o.heights))
    {
        for (int id : seats_in_group(layout, Region::All, height))
        {
            const auto &seat = layout.seat(id);
            PathLossModel model = fixed ? *fixed : lookup_builtin(seat.group, height);
            if (o.no_shadowing)
                model.sigma_db = 0.0;
            const double d = link_distance(layout, id, height);
            if (cal)
            {
                const double pl = sample_path_loss(model, d, rng);
                const double p_rx = cal->radiated_power_db + cal->g_tx_dbi + cal->g_rx_dbi - pl;
                const double tau = distance_to_delay(d);
                // Two weak multipath bins that the noise threshold must discard.
                const double weak = p_rx - cal->noise_threshold_db - 15.0;
                MeasurementSet set{id, height, {}};
                for (std::size_t k = 0; k < o.sweeps; ++k)
                    set.sweeps.push_back(PdpRecord{{{tau, p_rx}, {tau + 5.0, weak}, {tau + 10.0, weak}},
                                                   id, height, static_cast<int>(k)});
                sets.push_back(std::move(set));
                continue;
            }
            for (std::size_t k = 0; k < o.per_seat; ++k)
            {
                Sample s;
                s.distance_m = d;
                s.path_loss_db = sample_path_loss(model, d, rng);
                s.seat = id;
                s.region = seat.group;
                s.height = height;
                samples.push_back(s);
            }
        }
    }

    if (cal)
    {
        write_measurement_dir(o.pdp_dir, sets);
        err << "wrote " << sets.size() << " measurement sets to " << o.pdp_dir << "\n";
        return;
    }
    em.emit(io::samples_to_csv(samples, true));
}

// ---- sweep / footprint -----------------------------------------------------

struct BudgetOptions
{
    std::string config;
    std::string registry;
    std::string height = "upper";
    bool force_all = false;
};

LinkBudgetConfig resolve_budget(const std::string &path)
{
    return path.empty() ? LinkBudgetConfig{} : load_budget(path);
}

void cmd_sweep(const BudgetOptions &o, const std::string &seat_filter, const Globals &g, const Emitter &em)
{
    const auto layout = resolve_layout(g);
    const auto config = resolve_budget(o.config);
    const auto registry = resolve_registry(o.registry);
    const auto height = parse_height(o.height);
    require_registry_covers(registry, layout, height, o.force_all);

    auto reports = seat_sweep(layout, registry, config, height, {o.force_all});
    if (!seat_filter.empty())
    {
        const auto wanted = parse_seat_list(seat_filter);
        require_eligible(layout, wanted, height);
        std::erase_if(reports, [&](const SeatReport &r) {
            return std::find(wanted.begin(), wanted.end(), r.seat_id) == wanted.end();
        });
    }

    std::string csv = "seat,height,distance_m,mean_pl_db,snr_db,rate_bps,coverage\n";
    json arr = json::array();
    for (const auto &r : reports)
    {
        csv += std::to_string(r.seat_id) + "," + std::string(to_string(r.height)) + "," + fmt(r.distance_m) + "," +
               fmt(r.mean_pl_db) + "," + fmt(r.snr_db) + "," + fmt(r.rate_bps) + "," + fmt(r.coverage_prob) + "\n";
        arr.push_back({{"seat", r.seat_id},
                       {"height", to_string(r.height)},
                       {"group", to_string(r.group)},
                       {"distance_m", r.distance_m},
                       {"mean_pl_db", r.mean_pl_db},
                       {"snr_db", r.snr_db},
                       {"rate_bps", r.rate_bps},
                       {"coverage", r.coverage_prob},
                       {"extrapolated", r.extrapolated}});
    }
    em.emit(em.json() ? arr.dump(2) + "\n" : csv);
}

void cmd_footprint(const BudgetOptions &o, const std::string &active, std::size_t draws, bool frozen,
                   const Globals &g, const Emitter &em)
{
    if (!g.seed_given)
        throw DomainError("footprint requires an explicit --seed");
    const auto layout = resolve_layout(g);
    const auto config = resolve_budget(o.config);
    const auto registry = resolve_registry(o.registry);
    const auto height = parse_height(o.height);
    require_registry_covers(registry, layout, height, o.force_all);
    const auto seats = parse_seat_list(active);
    require_eligible(layout, seats, height);

    FootprintOptions fo;
    fo.selection.force_all = o.force_all;
    fo.frozen_shadowing = frozen;
    const auto result = interference_footprint(layout, registry, config, seats, height, g.seed, draws, fo);

    std::string csv = "seat,height,distance_m,mean_pl_db,snr_mean_db,sinr_mean_db,sinr_median_db,sinr_p05_db\n";
    json arr = json::array();
    for (const auto &f : result.seats)
    {
        csv += std::to_string(f.seat_id) + "," + std::string(to_string(height)) + "," + fmt(f.distance_m) + "," +
               fmt(f.mean_pl_db) + "," + fmt(f.snr_mean_db) + "," + fmt(f.sinr_mean_db) + "," +
               fmt(f.sinr_median_db) + "," + fmt(f.sinr_p05_db) + "\n";
        arr.push_back({{"seat", f.seat_id},
                       {"height", to_string(height)},
                       {"distance_m", f.distance_m},
                       {"mean_pl_db", f.mean_pl_db},
                       {"snr_mean_db", f.snr_mean_db},
                       {"sinr_mean_db", f.sinr_mean_db},
                       {"sinr_median_db", f.sinr_median_db},
                       {"sinr_p05_db", f.sinr_p05_db}});
    }
    em.emit(em.json() ? json{{"seed", g.seed}, {"n_draws", draws}, {"seats", arr}}.dump(2) + "\n" : csv);
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    CLI::App app{"In-vehicle 60 GHz path loss models, fitting and link budget analysis", "buspl"};
    app.require_subcommand(1);
    app.fallthrough();

    Globals g;
    app.add_option("-o,--output", g.output, "Write primary output to this file instead of stdout");
    app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    auto *seed_opt = app.add_option("--seed", g.seed, "Seed for every random draw");
    app.add_option("--layout", g.layout, "Bus layout JSON (defaults to the built-in layout)");

    // fit
    std::string fit_input;
    bool by_group = false;
    double trim = 0.0;
    auto *fit = app.add_subcommand("fit", "Fit alpha, beta, sigma to a sample CSV");
    fit->add_option("samples", fit_input, "Sample CSV")->required();
    fit->add_flag("--by-group", by_group, "Fit every (region, height) cell separately");
    fit->add_option("--trim", trim, "Symmetric residual trimming fraction per tail (default 0)");

    // eval
    std::string model_sel, model_file, range;
    auto *eval = app.add_subcommand("eval", "Evaluate a model over a distance range");
    eval->add_option("--model", model_sel, "Built-in model REGION/HEIGHT (default All/Upper)");
    eval->add_option("--model-file", model_file, "Model JSON file");
    eval->add_option("--distances", range, "a:b:step in metres")->required();

    // verify
    std::string registry_path;
    auto *verify = app.add_subcommand("verify", "Cross-check the pooled models against their combined expressions");
    verify->add_option("--registry", registry_path, "Model registry JSON (defaults to the built-in models)");

    // models
    auto *models = app.add_subcommand("models", "Export the built-in model registry as JSON");

    auto *layout_cmd = app.add_subcommand("layout", "Export the active bus layout (built-in or --layout) as JSON");

    // process
    std::string measurement_dir, calibration;
    auto *process = app.add_subcommand("process", "Reduce a PDP measurement directory to path loss samples");
    process->add_option("measurement_dir", measurement_dir)->required();
    process->add_option("calibration", calibration, "Calibration JSON")->required();

    // synth
    SynthOptions so;
    auto *synth = app.add_subcommand("synth", "Generate synthetic samples or PDP directories from a model");
    synth->add_option("--model", so.model_selector, "REGION/HEIGHT, or 'group' for per-seat group models (default)");
    synth->add_option("--model-file", so.model_file, "Model JSON file");
    synth->add_option("--height", so.heights, "lower, upper or both")->check(CLI::IsMember({"lower", "upper", "both"}));
    synth->add_option("--samples-per-seat", so.per_seat, "Samples per eligible seat (default 1)");
    synth->add_flag("--no-shadowing", so.no_shadowing, "Set sigma to 0");
    synth->add_option("--pdp-dir", so.pdp_dir, "Write a PDP measurement directory instead of samples");
    synth->add_option("--calibration", so.calibration, "Calibration JSON used for --pdp-dir");
    synth->add_option("--sweeps", so.sweeps, "Sweeps per measurement set (default 10)");

    // sweep
    BudgetOptions bo;
    std::string seat_filter;
    auto add_budget = [&](CLI::App *sub) {
        sub->add_option("--config", bo.config, "Link budget JSON (defaults shown in README)");
        sub->add_option("--registry", bo.registry, "Model registry JSON (defaults to the built-in models)");
        sub->add_option("--height", bo.height, "lower or upper")->check(CLI::IsMember({"lower", "upper"}));
        sub->add_flag("--all-model", bo.force_all, "Use the pooled All model for every seat");
    };
    auto *sweep = app.add_subcommand("sweep", "Per-seat link budget report");
    add_budget(sweep);
    sweep->add_option("--seats", seat_filter, "Comma-separated seat ids to report");

    // footprint
    std::string active;
    std::size_t draws = 10000;
    bool frozen = false;
    auto *footprint = app.add_subcommand("footprint", "Monte Carlo SINR with concurrent transmitters");
    add_budget(footprint);
    footprint->add_option("--active", active, "Comma-separated active seat ids")->required();
    footprint->add_option("--draws", draws, "Number of Monte Carlo draws (default 10000)");
    footprint->add_flag("--frozen", frozen, "Reuse one shadowing draw per link");

    // compare
    std::string against;
    auto *compare = app.add_subcommand("compare", "Mean path loss difference against a user-supplied model");
    compare->add_option("--model", model_sel, "Built-in model REGION/HEIGHT (default All/Upper)");
    compare->add_option("--model-file", model_file, "Model JSON file");
    compare->add_option("--against", against, "Second model JSON file")->required();
    compare->add_option("--distances", range, "a:b:step in metres")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try
    {
        app.parse(reversed);
    }
    catch (const CLI::ParseError &e)
    {
        std::ostringstream o, eo;
        const int code = app.exit(e, o, eo);
        out << o.str();
        err << eo.str();
        return code == 0 ? exit_ok : exit_input_error;
    }
    g.seed_given = seed_opt->count() > 0;

    try
    {
        if (g.format.empty())
            g.format = fit->parsed() || models->parsed() ? "json" : "csv";
        if (verify->parsed() && g.format == "csv")
            g.format = "table";
        Emitter em(g, out);

        if (fit->parsed())
            cmd_fit(fit_input, by_group, trim, em, err);
        else if (eval->parsed())
            cmd_eval(resolve_model(model_sel, model_file), range, em, err);
        else if (verify->parsed())
            cmd_verify(registry_path, em);
        else if (models->parsed())
            em.emit(io::models_to_json_text(builtin_models()));
        else if (layout_cmd->parsed())
            em.emit(layout_to_json(resolve_layout(g)));
        else if (process->parsed())
            cmd_process(measurement_dir, calibration, g, em);
        else if (synth->parsed())
            cmd_synth(so, g, em, err);
        else if (sweep->parsed())
            cmd_sweep(bo, seat_filter, g, em);
        else if (footprint->parsed())
            cmd_footprint(bo, active, draws, frozen, g, em);
        else if (compare->parsed())
            cmd_compare(resolve_model(model_sel, model_file), resolve_model("", against), range, em);
        return exit_ok;
    }
    catch (const VerificationFailed &)
    {
        err << "verification failed\n";
        return exit_verification_failed;
    }
    catch (const InsufficientDataError &e)
    {
        err << "error: " << e.what() << "\n";
        return exit_insufficient_data;
    }
    catch (const DegenerateDesignError &e)
    {
        err << "error: " << e.what() << "\n";
        return exit_insufficient_data;
    }
    catch (const IneligibleRequest &e)
    {
        err << "error: " << e.what() << "\n";
        return exit_ineligible;
    }
    catch (const ExcludedPositionError &e)
    {
        err << "error: " << e.what() << "\n";
        return exit_ineligible;
    }
    catch (const NotFoundError &e)
    {
        err << "error: " << e.what() << "\n";
        return exit_ineligible;
    }
    catch (const std::exception &e)
    {
        err << "error: " << e.what() << "\n";
        return exit_input_error;
    }
}

} // namespace buspl::cli
