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

#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <vector>

namespace scatk {

/// Which hardware parameter a classifier targets.
enum class HwParameter { Folding, Quantization };

/// One accelerator version: the label pair recovered by the attack.
struct AcceleratorConfig {
    int folding = 1;       ///< PE parallelism factor
    int quantization = 4;  ///< weight bit-width [bits]

    friend bool operator==(const AcceleratorConfig &,
                           const AcceleratorConfig &) = default;

    int parameter(HwParameter p) const {
        return p == HwParameter::Folding ? folding : quantization;
    }
};

/// The set of accelerator versions considered by the attacker, as the cross
/// product of a folding space and a quantization space.
class ConfigSpace {
  public:
    ConfigSpace() = default;
    ConfigSpace(std::vector<int> folding_values,
                std::vector<int> quantization_values);

    static ConfigSpace standard() { return ConfigSpace({1, 2, 4, 8}, {4, 6}); }

    const std::vector<int> &folding_values() const { return folding_; }
    const std::vector<int> &quantization_values() const { return quant_; }
    const std::vector<int> &values(HwParameter p) const {
        return p == HwParameter::Folding ? folding_ : quant_;
    }

    /// All configurations, folding-major, in declaration order.
    std::vector<AcceleratorConfig> configs() const;

    std::size_t size() const { return folding_.size() * quant_.size(); }
    bool contains(const AcceleratorConfig &c) const;

    /// Position of `c` within configs(); throws std::invalid_argument if
    /// the config is not part of the space.
    std::size_t index_of(const AcceleratorConfig &c) const;

    friend bool operator==(const ConfigSpace &, const ConfigSpace &) = default;

  private:
    std::vector<int> folding_{1, 2, 4, 8};
    std::vector<int> quant_{4, 6};
};

/// One sensor capture. Samples are kept as reals: averaging and PCA need
/// real arithmetic even though the sensor output is integral.
struct Trace {
    Eigen::VectorXd samples;
    double sensor_freq_hz = 0.0;
    Eigen::Index raw_len = 0;  ///< sample count before any trimming

    Eigen::Index size() const { return samples.size(); }
};

/// Throws std::invalid_argument unless the trace is non-empty, finite and
/// carries a positive sampling frequency.
void validate_trace(const Trace &t);

enum class Split : std::uint8_t { Training = 0, Test = 1 };

struct LabeledTrace {
    Trace trace;
    AcceleratorConfig label;
    std::uint64_t input_id = 0;  ///< which random inference batch was running
};

/// Labeled trace collection with a training/test partition.
struct TraceDataset {
    std::vector<LabeledTrace> traces;
    ConfigSpace config_space;
    std::vector<Split> split;  ///< one entry per trace

    std::size_t size() const { return traces.size(); }

    std::vector<std::size_t> indices_of(Split s) const;
    std::size_t count_of(Split s) const;

    /// Trace count for config `c` within split `s`.
    std::size_t count_of(const AcceleratorConfig &c, Split s) const;

    /// True when every config has the same trace count within each split.
    bool is_balanced() const;

    /// Throws std::invalid_argument on inconsistent sizes or labels outside
    /// the config space.
    void validate() const;
};

/// Timing figures of the slowest accelerator configuration considered,
/// from which the capture geometry is derived.
struct WindowSpec {
    double t_dataflow_s = 0.0;  ///< slowest stage latency [s]
    double t_inf_s = 0.0;       ///< one full inference latency [s]

    void validate() const;
};

/// Normalized Window Size in samples: the window must contain at least all
/// the samples of the slowest dataflow stage, hence the ceil.
Eigen::Index window_length(const WindowSpec &spec, double sensor_freq_hz);

/// Loading-phase sample count to discard before the window.
Eigen::Index loading_length(const WindowSpec &spec, double sensor_freq_hz);

/// Total trace count of a balanced acquisition campaign:
/// n_traces * |folding space| * |quantization space|.
std::size_t dataset_cardinality(std::size_t n_traces, const ConfigSpace &space);

} // namespace scatk
