// SPDX-License-Identifier: Apache-2.0
#include "trajedit/scheduler.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <cmath>

#include "trajedit/rng.hpp"

namespace trajedit {

void NoiseSchedule::validate() const {
    if (levels.size() < 2) {
        throw InvalidSchedule("schedule needs at least one step");
    }
    if (levels.front() > kTMax || levels.back() < 0.0) {
        throw InvalidSchedule("schedule levels must lie in [0, t_max]");
    }
    for (std::size_t i = 1; i < levels.size(); ++i) {
        if (!(levels[i] < levels[i - 1])) {
            throw InvalidSchedule("schedule levels must be strictly decreasing");
        }
    }
}

NoiseSchedule NoiseSchedule::linear(int steps, double t_max) {
    if (steps < 1) {
        throw InvalidSchedule("schedule needs at least one step");
    }
    NoiseSchedule s;
    s.levels.reserve(steps + 1);
    for (int i = 0; i <= steps; ++i) {
        s.levels.push_back(t_max * static_cast<double>(steps - i) / steps);
    }
    return s;
}

void SegmentPlan::validate() const {
    if (current_frames < 1 || history_frames < 0 || history_lead < 0 || base_frames < 1 ||
        !std::isfinite(guidance)) {
        throw InvalidConfig("segment plan: T >= 1, T* >= 0, delta_t >= 0, w finite");
    }
}

std::vector<SegmentRange> plan_segments(int total_frames, const SegmentPlan& plan) {
    plan.validate();
    if (total_frames < 1) {
        throw InvalidConfig("plan_segments: total_frames must be >= 1");
    }
    std::vector<SegmentRange> out;
    SegmentRange base;
    base.current_begin = 0;
    base.current_end = std::min(total_frames, plan.base_frames);
    out.push_back(base);

    int generated = base.current_end;
    while (generated < total_frames) {
        SegmentRange seg;
        seg.history_end = generated;
        seg.history_begin = std::max(0, generated - plan.history_frames);
        seg.current_begin = generated;
        seg.current_end = std::min(total_frames, generated + plan.current_frames);
        out.push_back(seg);
        generated = seg.current_end;
    }
    return out;
}

LatentBlock LatentBlock::zeros(int frames, int channels, double noise_level) {
    LatentBlock b;
    b.frames = frames;
    b.channels = channels;
    b.values.assign(static_cast<std::size_t>(frames) * channels, 0.0);
    b.noise_level = noise_level;
    return b;
}

LatentBlock ZeroDenoiser::flow(const LatentBlock&, const LatentBlock& current,
                               const Conditioning&) const {
    return LatentBlock::zeros(current.frames, current.channels, current.noise_level);
}

LatentBlock LinearDenoiser::flow(const LatentBlock& history, const LatentBlock& current,
                                 const Conditioning&) const {
    double mean = 0.0;
    if (!history.values.empty()) {
        for (double v : history.values) {
            mean += v;
        }
        mean /= static_cast<double>(history.values.size());
    }
    LatentBlock out = current;
    for (double& v : out.values) {
        v = mean + v;
    }
    return out;
}

LatentBlock GaussianToyDenoiser::flow(const LatentBlock&, const LatentBlock& current,
                                      const Conditioning&) const {
    const double sigma = noise_sigma(current.noise_level);
    if (!(sigma > 0.0)) {
        throw InvalidLevel("gaussian-toy denoiser evaluated at level 0");
    }
    LatentBlock out = current;
    for (double& v : out.values) {
        v = (v - mu_) / sigma;
    }
    return out;
}

std::unique_ptr<Denoiser> make_denoiser(const std::string& name,
                                        const std::vector<double>& params) {
    if (name == "zero") {
        return std::make_unique<ZeroDenoiser>();
    }
    if (name == "linear") {
        return std::make_unique<LinearDenoiser>();
    }
    if (name == "gaussian-toy") {
        return std::make_unique<GaussianToyDenoiser>(params.empty() ? 0.0 : params[0]);
    }
    throw InvalidConfig("unknown denoiser stub: " + name);
}

LatentBlock recorrupt(const LatentBlock& clean, double target_level, std::uint64_t seed) {
    if (!(target_level >= 0.0 && target_level <= kTMax)) {
        throw InvalidLevel("recorrupt: target level outside [0, t_max]");
    }
    if (clean.noise_level != 0.0) {
        throw InvalidLevel("recorrupt: input block is not clean");
    }
    if (target_level == 0.0) {
        return clean;
    }
    const double sigma = noise_sigma(target_level);
    LatentBlock out = clean;
    out.noise_level = target_level;
    Rng rng(seed);
    for (double& v : out.values) {
        v = (1.0 - sigma) * v + sigma * rng.normal();
    }
    return out;
}

LatentBlock guided_flow(const Denoiser& denoiser, const LatentBlock& current,
                        const LatentBlock& history_ahead, const LatentBlock& history_same,
                        double w, const Conditioning& cond) {
    if (!history_ahead.same_shape(history_same)) {
        throw ShapeMismatch("guided_flow: history blocks differ in shape");
    }
    if (!history_ahead.empty() && history_ahead.channels != current.channels) {
        throw ShapeMismatch("guided_flow: history/current channel mismatch");
    }
    LatentBlock v_ahead = denoiser.flow(history_ahead, current, cond);
    if (!v_ahead.same_shape(current)) {
        throw ShapeMismatch("guided_flow: denoiser output shape mismatch");
    }
    if (w == 1.0) {
        return v_ahead;
    }
    const LatentBlock v_same = denoiser.flow(history_same, current, cond);
    LatentBlock out = v_ahead;
    for (std::size_t i = 0; i < out.values.size(); ++i) {
        out.values[i] = w * v_ahead.values[i] + (1.0 - w) * v_same.values[i];
    }
    return out;
}

namespace {

std::uint64_t level_seed(std::uint64_t seed, int segment_index, double level) {
    return derive_seed(seed, "recorrupt", static_cast<std::uint64_t>(segment_index),
                       std::bit_cast<std::uint64_t>(level));
}

}  // namespace

LatentBlock denoise_segment(const Denoiser& denoiser, LatentBlock current_init,
                            const LatentBlock& history_clean, const NoiseSchedule& schedule,
                            const SegmentPlan& plan, const Conditioning& cond, std::uint64_t seed,
                            int segment_index, std::vector<StepTrace>* trace) {
    schedule.validate();
    plan.validate();
    if (std::abs(current_init.noise_level - schedule.levels.front()) > 1e-9) {
        throw InvalidLevel("denoise_segment: current block not at the schedule's first level");
    }
    if (!history_clean.empty() && history_clean.noise_level != 0.0) {
        throw InvalidLevel("denoise_segment: history block is not clean");
    }

    const int last = schedule.steps();
    LatentBlock current = std::move(current_init);

    for (int i = 0; i < last; ++i) {
        const double level = schedule.levels[i];
        const double next_level = schedule.levels[i + 1];
        LatentBlock v;
        StepTrace record;
        record.segment = segment_index;
        record.step = i;
        record.current_level = level;
        record.w = plan.guidance;

        if (history_clean.empty()) {
            v = denoiser.flow(history_clean, current, cond);
            record.denoiser_evals = 1;
        } else {
            const int ahead_index = std::min(last, i + plan.history_lead);
            // History lead rule, counted from the clean end of the schedule:
            // clean-index(history) = max(0, clean-index(current) - delta_t).
            assert(last - ahead_index == std::max(0, (last - i) - plan.history_lead));
            const double ahead_level = schedule.levels[ahead_index];
            const LatentBlock hist_ahead =
                recorrupt(history_clean, ahead_level, level_seed(seed, segment_index, ahead_level));
            record.history_level = ahead_level;
            if (plan.guidance == 1.0) {
                v = guided_flow(denoiser, current, hist_ahead, hist_ahead, 1.0, cond);
                record.denoiser_evals = 1;
            } else {
                const LatentBlock hist_same =
                    recorrupt(history_clean, level, level_seed(seed, segment_index, level));
                v = guided_flow(denoiser, current, hist_ahead, hist_same, plan.guidance, cond);
                record.denoiser_evals = 2;
            }
        }

        const double dsigma = noise_sigma(next_level) - noise_sigma(level);
        for (std::size_t j = 0; j < current.values.size(); ++j) {
            current.values[j] += dsigma * v.values[j];
        }
        current.noise_level = next_level;
        if (trace != nullptr) {
            trace->push_back(record);
        }
    }
    return current;
}

AutoregressiveResult run_autoregressive(const Denoiser& denoiser, int total_frames, int channels,
                                        const SegmentPlan& plan, const NoiseSchedule& schedule,
                                        const Conditioning& cond, std::uint64_t seed) {
    schedule.validate();
    if (channels < 1) {
        throw InvalidConfig("run_autoregressive: channels must be >= 1");
    }
    AutoregressiveResult result;
    result.plan = plan_segments(total_frames, plan);
    result.full = LatentBlock::zeros(total_frames, channels, 0.0);

    for (std::size_t k = 0; k < result.plan.size(); ++k) {
        const SegmentRange& seg = result.plan[k];

        LatentBlock init = LatentBlock::zeros(seg.current_size(), channels, schedule.levels.front());
        Rng rng(derive_seed(seed, "segment-init", k));
        for (double& v : init.values) {
            v = rng.normal();
        }

        LatentBlock history = LatentBlock::zeros(seg.history_size(), channels, 0.0);
        for (int f = seg.history_begin; f < seg.history_end; ++f) {
            for (int c = 0; c < channels; ++c) {
                history.at(f - seg.history_begin, c) = result.full.at(f, c);
            }
        }

        const LatentBlock clean = denoise_segment(denoiser, std::move(init), history, schedule,
                                                  plan, cond, seed, static_cast<int>(k),
                                                  &result.trace);
        for (int f = seg.current_begin; f < seg.current_end; ++f) {
            for (int c = 0; c < channels; ++c) {
                result.full.at(f, c) = clean.at(f - seg.current_begin, c);
            }
        }
    }
    return result;
}

std::pair<double, double> training_noise_pair(std::uint64_t seed) {
    Rng rng(derive_seed(seed, "training-noise-pair"));
    const double a = rng.uniform() * kTMax;
    const double b = rng.uniform() * kTMax;
    return {std::min(a, b), std::max(a, b)};
}

}  // namespace trajedit
