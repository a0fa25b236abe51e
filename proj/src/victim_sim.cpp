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

#include "scatk/victim_sim.hpp"

#include "scatk/parallel.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <set>
#include <stdexcept>

namespace scatk {

void VictimModel::validate() const {
    if (base_period_samples < 2.0)
        throw std::invalid_argument("base_period_samples must be >= 2");
    if (config.folding < 1 || config.quantization < 1)
        throw std::invalid_argument("invalid accelerator config");
    if (base_amplitude < 0 || noise_sigma < 0 || calib_offset_sigma < 0 ||
        cpu_burst_rate < 0 || subharmonic_weight < 0 || amplitude_jitter < 0 ||
        phase_jitter < 0 || quant_amplitude_gain < 0)
        throw std::invalid_argument("amplitudes and sigmas must be >= 0");
    if (post_len_samples < 1 || loading_len_base < 0)
        throw std::invalid_argument("invalid trace geometry");
    if (!(sensor_freq_hz > 0.0))
        throw std::invalid_argument("sensor frequency must be positive");
}

VictimModel victim_model_for(const AcceleratorConfig &config,
                             const VictimModel &base) {
    VictimModel m = base;
    m.config = config;
    const Eigen::Index total = base.loading_len_base + base.post_len_samples;
    m.post_len_samples = total - m.effective_loading();
    return m;
}

std::vector<VictimModel> victim_models_for(const ConfigSpace &space,
                                           const VictimModel &base) {
    std::vector<VictimModel> out;
    out.reserve(space.size());
    for (const auto &c : space.configs())
        out.push_back(victim_model_for(c, base));
    return out;
}

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Fraction of a stage pattern cycle, exactly periodic in t for integral
// periods: frac((t + p)/p) reproduces frac(t/p) bit for bit.
inline double cycle_frac(double t, double period) {
    const double x = t / period;
    return x - std::floor(x);
}

// Relative weights of the stage pattern harmonics.
constexpr double kHarmonicWeights[3] = {1.0, 0.35, 0.15};
// Fixed harmonic phases; they shape the waveform, per-trace variation comes
// from the time shift delta and the weight jitter.
constexpr double kHarmonicPhases[3] = {0.0, 1.1, 2.6};

struct TraceDraw {
    double calib_offset;
    double amplitude;  ///< per-trace pattern amplitude
    double delta;      ///< per-trace time shift [samples]
    double harmonic_w[3];
    double sub_weight;
    double sub_delta;
    struct Burst {
        Eigen::Index start;
        Eigen::Index width;
        double height;
    };
    std::vector<Burst> bursts;
};

// All per-trace randomness except the sample noise, drawn in a fixed order.
TraceDraw draw_trace_parameters(const VictimModel &m, std::mt19937_64 &rng,
                                Eigen::Index raw_len) {
    std::uniform_real_distribution<double> u11(-1.0, 1.0);
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    std::normal_distribution<double> gauss(0.0, 1.0);

    TraceDraw d;
    d.calib_offset = m.calib_offset_sigma * gauss(rng);

    const double quant_gain = std::pow(m.quant_amplitude_gain,
                                       m.config.quantization - 4);
    d.amplitude = m.base_amplitude * quant_gain *
                  (1.0 + m.amplitude_jitter * u11(rng));

    const double period = m.effective_period();
    d.delta = m.phase_jitter * period * u11(rng);
    for (int k = 0; k < 3; ++k)
        d.harmonic_w[k] = kHarmonicWeights[k] * (1.0 + 0.10 * u11(rng));

    // Sub-harmonic weight varies strongly between inputs; some traces carry
    // a weak quantization signature, which is what makes quantization the
    // harder label.
    d.sub_weight = m.subharmonic_weight * (0.4 + 1.2 * u01(rng));
    const double sub_period = period * m.config.quantization / 4.0;
    d.sub_delta = m.phase_jitter * sub_period * u11(rng);

    std::poisson_distribution<int> burst_count(m.cpu_burst_rate);
    const int n_bursts = m.cpu_burst_rate > 0 ? burst_count(rng) : 0;
    std::uniform_int_distribution<Eigen::Index> pos(0, raw_len - 1);
    std::uniform_int_distribution<Eigen::Index> width(16, 128);
    std::uniform_real_distribution<double> height(0.1 * m.base_amplitude,
                                                  0.4 * m.base_amplitude);
    for (int b = 0; b < n_bursts; ++b) {
        TraceDraw::Burst burst;
        burst.start = pos(rng);
        burst.width = width(rng);
        burst.height = height(rng) * (u01(rng) < 0.5 ? -1.0 : 1.0);
        d.bursts.push_back(burst);
    }
    return d;
}

} // namespace

LabeledTrace generate_trace(const VictimModel &model, std::uint64_t input_id) {
    model.validate();

    const Eigen::Index loading = model.effective_loading();
    const Eigen::Index raw_len = loading + model.post_len_samples;
    const double period = model.effective_period();
    const double sub_period = period * model.config.quantization / 4.0;

    std::mt19937_64 rng(derive_seed(
        model.rng_seed, static_cast<std::uint64_t>(model.config.folding),
        static_cast<std::uint64_t>(model.config.quantization), input_id));
    const TraceDraw d = draw_trace_parameters(model, rng, raw_len);

    Eigen::VectorXd x(raw_len);
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (Eigen::Index t = 0; t < raw_len; ++t) {
        // While the dataflow loads, fewer stages toggle simultaneously, so
        // the superposed activity is weaker than in the loaded state.
        double envelope = 1.0;
        if (t < loading)
            envelope = 0.15 + 0.85 * static_cast<double>(t) /
                                  static_cast<double>(loading);

        double pattern = 0.0;
        const double u = cycle_frac(static_cast<double>(t) + d.delta, period);
        for (int k = 0; k < 3; ++k)
            pattern += d.harmonic_w[k] *
                       std::sin(kTwoPi * (k + 1) * u + kHarmonicPhases[k]);
        const double us =
            cycle_frac(static_cast<double>(t) + d.sub_delta, sub_period);
        pattern += d.sub_weight * std::sin(kTwoPi * us);

        double v = envelope * d.amplitude * pattern + d.calib_offset;
        if (model.noise_sigma > 0)
            v += model.noise_sigma * gauss(rng);
        x[t] = v;
    }

    for (const auto &b : d.bursts) {
        const Eigen::Index end = std::min<Eigen::Index>(b.start + b.width, raw_len);
        x.segment(b.start, end - b.start).array() += b.height;
    }

    // Quantize to sensor storage precision (traces persist as f32).
    for (Eigen::Index t = 0; t < raw_len; ++t)
        x[t] = static_cast<double>(static_cast<float>(x[t]));

    LabeledTrace lt;
    lt.trace.samples = std::move(x);
    lt.trace.sensor_freq_hz = model.sensor_freq_hz;
    lt.trace.raw_len = raw_len;
    lt.label = model.config;
    lt.input_id = input_id;
    return lt;
}

TraceDataset generate_dataset(const std::vector<VictimModel> &models,
                              std::size_t n_traces, double split_ratio,
                              unsigned n_threads) {
    if (models.empty())
        throw std::invalid_argument("no victim models given");
    if (n_traces == 0)
        throw std::invalid_argument("n_traces must be positive");
    if (!(split_ratio >= 0.0 && split_ratio <= 1.0))
        throw std::invalid_argument("split ratio must lie in [0, 1]");

    std::set<int> foldings, quants;
    std::set<std::pair<int, int>> seen;
    for (const auto &m : models) {
        m.validate();
        if (!seen.insert({m.config.folding, m.config.quantization}).second)
            throw std::invalid_argument("duplicate config among victim models");
        foldings.insert(m.config.folding);
        quants.insert(m.config.quantization);
    }
    ConfigSpace space(std::vector<int>(foldings.begin(), foldings.end()),
                      std::vector<int>(quants.begin(), quants.end()));
    if (space.size() != models.size())
        throw std::invalid_argument(
            "victim models must cover the full folding x quantization grid");

    // Order models by their position in the space so the dataset layout does
    // not depend on the order the caller listed them in.
    std::vector<const VictimModel *> by_index(models.size(), nullptr);
    for (const auto &m : models)
        by_index[space.index_of(m.config)] = &m;

    TraceDataset ds;
    ds.config_space = space;
    ds.traces.resize(models.size() * n_traces);
    ds.split.resize(ds.traces.size());

    const auto n_train = static_cast<std::size_t>(
        std::llround(split_ratio * static_cast<double>(n_traces)));

    parallel_for(
        ds.traces.size(),
        [&](std::size_t j) {
            const std::size_t cfg = j / n_traces;
            const std::size_t i = j % n_traces;
            ds.traces[j] = generate_trace(*by_index[cfg],
                                          static_cast<std::uint64_t>(j));
            ds.split[j] = i < n_train ? Split::Training : Split::Test;
        },
        n_threads);

    return ds;
}

} // namespace scatk
