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

#include "scatk/types.hpp"

#include <cstdint>
#include <vector>

namespace scatk {

/// Synthetic victim: reproduces the leakage structure seen on real dataflow
/// accelerators so the full pipeline is testable without hardware.
///
/// Leakage model. The pattern period scales with 1/folding and the loading
/// phase shortens with folding. Quantization leaks through a per-bit
/// amplitude gain plus a sub-harmonic at period * quantization/4; both are
/// deliberately subtle so quantization recovery trails folding recovery.
struct VictimModel {
    AcceleratorConfig config;

    double base_period_samples = 512.0;  ///< pattern period at folding 1
    double base_amplitude = 20.0;        ///< peak amplitude at 4-bit [LSB]
    double quant_amplitude_gain = 1.06;  ///< amplitude factor per extra bit
    Eigen::Index loading_len_base = 8192;  ///< loading length at folding 1
    Eigen::Index post_len_samples = 4096;  ///< requested post-loading length

    double noise_sigma = 2.0;        ///< white noise std dev [LSB]
    double cpu_burst_rate = 2.0;     ///< expected CPU bursts per trace
    double calib_offset_sigma = 25.0;  ///< per-trace calibration offset sigma
    double sensor_freq_hz = 1e8;

    /// Per-trace timing jitter as a fraction of the pattern period. Kept
    /// small: inputs differ but the stage schedule stays clock-locked, so
    /// averaging different-input traces still reinforces the pattern.
    double phase_jitter = 0.05;
    double subharmonic_weight = 0.25;  ///< quantization signature strength
    double amplitude_jitter = 0.06;    ///< per-trace relative amplitude spread

    std::uint64_t rng_seed = 1;

    double effective_period() const {
        return base_period_samples / config.folding;
    }
    Eigen::Index effective_loading() const {
        return loading_len_base / config.folding;
    }

    void validate() const;
};

/// Copy of `base` targeting `config`, with the post-loading length extended
/// so every configuration yields the same total capture length
/// (loading_len_base + post_len_samples), as a fixed-duration capture would.
VictimModel victim_model_for(const AcceleratorConfig &config,
                             const VictimModel &base);

std::vector<VictimModel> victim_models_for(const ConfigSpace &space,
                                           const VictimModel &base);

/// One synthetic capture. Deterministic in (model, input_id); different
/// input ids change phase and microstructure but not the class signature.
LabeledTrace generate_trace(const VictimModel &model, std::uint64_t input_id);

/// Balanced dataset: n_traces per config, distinct input ids, stratified
/// split with round(split_ratio * n_traces) training traces per config.
/// Trace generation is order-independent across workers.
TraceDataset generate_dataset(const std::vector<VictimModel> &models,
                              std::size_t n_traces, double split_ratio = 0.8,
                              unsigned n_threads = 0);

} // namespace scatk
