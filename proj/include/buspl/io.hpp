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

#ifndef BUSPL_IO_HPP
#define BUSPL_IO_HPP

#include "buspl/fit.hpp"
#include "buspl/models.hpp"

#include "json.hpp"

#include <filesystem>
#include <span>
#include <string>
#include <vector>

namespace buspl::io {

// {"alpha_db", "beta", "sigma_db", "region": "A".."All", "height": "lower"|"upper"}
nlohmann::json model_to_json(const PathLossModel &model);
PathLossModel model_from_json(const nlohmann::json &j, const std::string &source = "<model>");

// A single model object or an array of them.
std::vector<PathLossModel> models_from_json_text(const std::string &text, const std::string &source);
std::vector<PathLossModel> load_models(const std::filesystem::path &path);
std::string models_to_json_text(std::span<const PathLossModel> models);

// Model fields plus "r_squared" and "n".
nlohmann::json fit_to_json(const FitResult &fit);

// Header `distance_m,path_loss_db` optionally followed by `,seat,region,height`. Tag fields
// may be left empty.
SampleSet parse_samples_csv(const std::string &text, const std::string &source = "<samples>");
SampleSet load_samples_csv(const std::filesystem::path &path);
std::string samples_to_csv(std::span<const Sample> samples, bool with_tags);

} // namespace buspl::io

#endif
