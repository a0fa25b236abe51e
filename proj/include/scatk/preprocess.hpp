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

namespace scatk {

/// Capture-window geometry plus the averaging factor.
struct PreprocessConfig {
    Eigen::Index window_samples = 4096;   ///< Normalized Window Size
    Eigen::Index loading_samples = 8192;  ///< loading-phase samples to skip
    int n_average = 1;                    ///< traces averaged per output

    void validate() const;

    static PreprocessConfig from_spec(const WindowSpec &spec,
                                      double sensor_freq_hz,
                                      int n_average = 1);
};

/// Keeps samples [loading_samples, loading_samples + window_samples).
/// Throws TraceTooShortError when the capture cannot cover the window.
Trace trim(const Trace &trace, const PreprocessConfig &cfg);

/// Removes the per-trace mean; cancels the constant artifact left by
/// automatic sensor calibration.
Trace normalize(const Trace &trace);

/// Element-wise means over consecutive disjoint groups of n_average traces;
/// the remainder (count mod n_average) is dropped.
std::vector<Trace> average(const std::vector<Trace> &traces, int n_average);

/// Trim -> normalize -> (if n_average > 1) average. Averaging groups are
/// formed by acquisition order and never mix labels or splits.
TraceDataset preprocess_dataset(const TraceDataset &ds,
                                const PreprocessConfig &cfg);

} // namespace scatk
