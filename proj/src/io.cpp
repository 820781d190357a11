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

#include "buspl/io.hpp"

#include "buspl/error.hpp"
#include "buspl/text.hpp"

namespace buspl::io {

using nlohmann::json;

json model_to_json(const PathLossModel &model)
{
    return {{"alpha_db", model.alpha_db},
            {"beta", model.beta},
            {"sigma_db", model.sigma_db},
            {"region", to_string(model.region)},
            {"height", to_string(model.height)}};
}

PathLossModel model_from_json(const json &j, const std::string &source)
{
    PathLossModel m;
    try
    {
        m.alpha_db = j.at("alpha_db").get<double>();
        m.beta = j.at("beta").get<double>();
        m.sigma_db = j.at("sigma_db").get<double>();
        m.region = parse_region(j.at("region").get<std::string>());
        m.height = parse_height(j.at("height").get<std::string>());
        m.validate();
    }
    catch (const json::exception &e)
    {
        throw ParseError(source, 0, e.what());
    }
    catch (const DomainError &e)
    {
        throw ParseError(source, 0, e.what());
    }
    return m;
}

std::vector<PathLossModel> models_from_json_text(const std::string &text, const std::string &source)
{
    json j;
    try
    {
        j = json::parse(text);
    }
    catch (const json::parse_error &e)
    {
        throw ParseError(source, 0, e.what());
    }
    std::vector<PathLossModel> out;
    if (j.is_array())
        for (const auto &item : j)
            out.push_back(model_from_json(item, source));
    else
        out.push_back(model_from_json(j, source));
    return out;
}

std::vector<PathLossModel> load_models(const std::filesystem::path &path)
{
    return models_from_json_text(text::read_file(path), path.string());
}

std::string models_to_json_text(std::span<const PathLossModel> models)
{
    json arr = json::array();
    for (const auto &m : models)
        arr.push_back(model_to_json(m));
    return arr.dump(2) + "\n";
}

json fit_to_json(const FitResult &fit)
{
    auto j = model_to_json(fit.model);
    j["r_squared"] = fit.r_squared;
    j["n"] = fit.n;
    return j;
}

SampleSet parse_samples_csv(const std::string &text, const std::string &source)
{
    const auto lines = text::split_lines(text);
    if (lines.empty())
        throw ParseError(source, 1, "missing header");
    const auto header = text::trim(lines.front());
    bool tagged = false;
    if (header == "distance_m,path_loss_db,seat,region,height")
        tagged = true;
    else if (header != "distance_m,path_loss_db")
        throw ParseError(source, 1, "expected header 'distance_m,path_loss_db[,seat,region,height]'");
    const std::size_t width = tagged ? 5 : 2;

    SampleSet out;
    for (std::size_t i = 1; i < lines.size(); ++i)
    {
        const std::size_t line_no = i + 1;
        if (text::trim(lines[i]).empty())
            continue;
        const auto f = text::split_csv(lines[i]);
        if (f.size() != width)
            throw ParseError(source, line_no,
                             "expected " + std::to_string(width) + " fields, got " + std::to_string(f.size()));
        Sample s;
        const auto d = text::parse_double(f[0]);
        const auto pl = text::parse_double(f[1]);
        if (!d)
            throw ParseError(source, line_no, "distance_m is not a number: '" + std::string(f[0]) + "'");
        if (!pl)
            throw ParseError(source, line_no, "path_loss_db is not a number: '" + std::string(f[1]) + "'");
        if (*d <= 0.0)
            throw ParseError(source, line_no, "distance_m must be > 0");
        s.distance_m = *d;
        s.path_loss_db = *pl;
        if (tagged)
        {
            try
            {
                if (!f[2].empty())
                {
                    const auto seat = text::parse_int(f[2]);
                    if (!seat)
                        throw DomainError("seat is not an integer: '" + std::string(f[2]) + "'");
                    s.seat = static_cast<int>(*seat);
                }
                if (!f[3].empty())
                    s.region = parse_region(f[3]);
                if (!f[4].empty())
                    s.height = parse_height(f[4]);
            }
            catch (const DomainError &e)
            {
                throw ParseError(source, line_no, e.what());
            }
        }
        out.push_back(s);
    }
    return out;
}

SampleSet load_samples_csv(const std::filesystem::path &path)
{
    return parse_samples_csv(text::read_file(path), path.string());
}

std::string samples_to_csv(std::span<const Sample> samples, bool with_tags)
{
    std::string out = with_tags ? "distance_m,path_loss_db,seat,region,height\n" : "distance_m,path_loss_db\n";
    for (const auto &s : samples)
    {
        out += text::format_double(s.distance_m) + "," + text::format_double(s.path_loss_db);
        if (with_tags)
        {
            out += ",";
            if (s.seat)
                out += std::to_string(*s.seat);
            out += ",";
            if (s.region)
                out += to_string(*s.region);
            out += ",";
            if (s.height)
                out += to_string(*s.height);
        }
        out += "\n";
    }
    return out;
}

} // namespace buspl::io
