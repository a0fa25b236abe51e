/*
 * SPDX-License-Identifier: Apache-2.0
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 *
 * This file is part of scatk, a side-channel analysis toolkit for
 * dataflow accelerator parameter recovery.
 */

#include "scatk/types.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace scatk {

ConfigSpace::ConfigSpace(std::vector<int> folding_values,
                         std::vector<int> quantization_values)
    : folding_(std::move(folding_values)), quant_(std::move(quantization_values)) {
    if (folding_.empty() || quant_.empty())
        throw std::invalid_argument("ConfigSpace: empty parameter space");
    auto distinct_positive = [](const std::vector<int> &v) {
        std::set<int> s(v.begin(), v.end());
        return s.size() == v.size() &&
               std::all_of(v.begin(), v.end(), [](int x) { return x > 0; });
    };
    if (!distinct_positive(folding_) || !distinct_positive(quant_))
        throw std::invalid_argument(
            "ConfigSpace: parameter values must be positive and distinct");
}

std::vector<AcceleratorConfig> ConfigSpace::configs() const {
    std::vector<AcceleratorConfig> out;
    out.reserve(size());
    for (int f : folding_)
        for (int q : quant_)
            out.push_back({f, q});
    return out;
}

bool ConfigSpace::contains(const AcceleratorConfig &c) const {
    return std::find(folding_.begin(), folding_.end(), c.folding) !=
               folding_.end() &&
           std::find(quant_.begin(), quant_.end(), c.quantization) !=
               quant_.end();
}

std::size_t ConfigSpace::index_of(const AcceleratorConfig &c) const {
    auto f = std::find(folding_.begin(), folding_.end(), c.folding);
    auto q = std::find(quant_.begin(), quant_.end(), c.quantization);
    if (f == folding_.end() || q == quant_.end())
        throw std::invalid_argument("config not in configuration space");
    return static_cast<std::size_t>(f - folding_.begin()) * quant_.size() +
           static_cast<std::size_t>(q - quant_.begin());
}

void validate_trace(const Trace &t) {
    if (t.samples.size() == 0)
        throw std::invalid_argument("trace has no samples");
    if (!t.samples.allFinite())
        throw std::invalid_argument("trace contains non-finite samples");
    if (!(t.sensor_freq_hz > 0.0))
        throw std::invalid_argument("sensor frequency must be positive");
}

std::vector<std::size_t> TraceDataset::indices_of(Split s) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < split.size(); ++i)
        if (split[i] == s)
            out.push_back(i);
    return out;
}

std::size_t TraceDataset::count_of(Split s) const {
    return static_cast<std::size_t>(
        std::count(split.begin(), split.end(), s));
}

std::size_t TraceDataset::count_of(const AcceleratorConfig &c, Split s) const {
    std::size_t n = 0;
    for (std::size_t i = 0; i < traces.size(); ++i)
        if (split[i] == s && traces[i].label == c)
            ++n;
    return n;
}

bool TraceDataset::is_balanced() const {
    for (Split s : {Split::Training, Split::Test}) {
        bool first = true;
        std::size_t expect = 0;
        for (const auto &c : config_space.configs()) {
            std::size_t n = count_of(c, s);
            if (first) {
                expect = n;
                first = false;
            } else if (n != expect) {
                return false;
            }
        }
    }
    return true;
}

void TraceDataset::validate() const {
    if (split.size() != traces.size())
        throw std::invalid_argument(
            "dataset split assignment does not cover every trace");
    for (const auto &lt : traces) {
        validate_trace(lt.trace);
        if (!config_space.contains(lt.label))
            throw std::invalid_argument(
                "trace label outside the dataset's configuration space");
    }
}

void WindowSpec::validate() const {
    if (!(t_dataflow_s > 0.0) || !(t_inf_s > 0.0))
        throw std::invalid_argument("window spec latencies must be positive");
    if (t_inf_s < t_dataflow_s)
        throw std::invalid_argument(
            "inference latency cannot be shorter than the slowest stage");
}

namespace {

// ceil of a time*frequency product, with a small multiplicative tolerance so
// that exact-integer products do not round up from representation error.
Eigen::Index samples_ceil(double seconds, double hz) {
    const double v = seconds * hz;
    return static_cast<Eigen::Index>(std::ceil(v - v * 1e-12));
}

} // namespace

Eigen::Index window_length(const WindowSpec &spec, double sensor_freq_hz) {
    spec.validate();
    if (!(sensor_freq_hz > 0.0))
        throw std::invalid_argument("sensor frequency must be positive");
    return samples_ceil(spec.t_dataflow_s, sensor_freq_hz);
}

Eigen::Index loading_length(const WindowSpec &spec, double sensor_freq_hz) {
    spec.validate();
    if (!(sensor_freq_hz > 0.0))
        throw std::invalid_argument("sensor frequency must be positive");
    return samples_ceil(spec.t_inf_s, sensor_freq_hz);
}

std::size_t dataset_cardinality(std::size_t n_traces, const ConfigSpace &space) {
    if (n_traces == 0)
        throw std::invalid_argument("n_traces must be positive");
    return n_traces * space.size();
}

} // namespace scatk
