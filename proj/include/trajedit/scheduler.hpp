// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "trajedit/errors.hpp"

namespace trajedit {

/// Upper end of the noise-level range; level t corresponds to sigma = t / kTMax.
inline constexpr double kTMax = 1000.0;

inline double noise_sigma(double level) { return level / kTMax; }

/// Strictly decreasing noise levels shared by every segment of a generation
/// run. levels.front() <= kTMax, levels.back() >= 0; steps() counts the Euler
/// transitions between consecutive levels.
struct NoiseSchedule {
    std::vector<double> levels;

    int steps() const { return static_cast<int>(levels.size()) - 1; }

    /// Throws InvalidSchedule unless there is at least one step and the level
    /// sequence is strictly decreasing inside [0, kTMax].
    void validate() const;

    /// Linear ramp from t_max down to 0 inclusive (steps + 1 levels).
    static NoiseSchedule linear(int steps, double t_max = kTMax);
};

/// Segmentation parameters of the autoregressive run. The base segment is
/// generated without history; each later segment of `current_frames` frames is
/// guided by the last `history_frames` frames generated so far, with history
/// kept `history_lead` schedule steps closer to clean.
struct SegmentPlan {
    int current_frames = 20;   // T
    int history_frames = 21;   // T*
    int history_lead = 1;      // delta_t, in schedule-index steps
    double guidance = 2.0;     // w
    int base_frames = 41;

    void validate() const;
};

/// Half-open frame ranges of one segment. The base segment has an empty
/// history range.
struct SegmentRange {
    int history_begin = 0;
    int history_end = 0;
    int current_begin = 0;
    int current_end = 0;

    bool has_history() const { return history_end > history_begin; }
    int history_size() const { return history_end - history_begin; }
    int current_size() const { return current_end - current_begin; }
};

/// Splits [0, total_frames) into the base segment [0, base_frames) followed by
/// non-overlapping current segments of plan.current_frames frames (last one may
/// be shorter). total_frames below base_frames yields a single short base
/// segment. The current ranges tile [0, total_frames) exhaustively.
std::vector<SegmentRange> plan_segments(int total_frames, const SegmentPlan& plan);

/// F frames of D abstract latent channels sharing one noise level.
struct LatentBlock {
    int frames = 0;
    int channels = 0;
    std::vector<double> values;  // frames * channels, row-major
    double noise_level = 0.0;

    static LatentBlock zeros(int frames, int channels, double noise_level = 0.0);

    double& at(int frame, int channel) { return values[static_cast<std::size_t>(frame) * channels + channel]; }
    double at(int frame, int channel) const { return values[static_cast<std::size_t>(frame) * channels + channel]; }

    bool empty() const { return frames == 0; }
    bool same_shape(const LatentBlock& o) const { return frames == o.frames && channels == o.channels; }
};

/// Opaque conditioning handle threaded through to the denoiser.
struct Conditioning {
    std::string tag;
    std::vector<double> params;
};

/// Single-step flow predictor. `history` may be empty for the base segment.
/// Implementations must be deterministic in their inputs and return a block
/// shaped like `current`.
class Denoiser {
public:
    virtual ~Denoiser() = default;
    virtual LatentBlock flow(const LatentBlock& history, const LatentBlock& current,
                             const Conditioning& cond) const = 0;
};

/// flow = 0: the identity sampler.
class ZeroDenoiser final : public Denoiser {
public:
    LatentBlock flow(const LatentBlock&, const LatentBlock& current,
                     const Conditioning&) const override;
};

/// flow[f][c] = mean(history values) + current[f][c]; mean of an empty
/// history is 0.
class LinearDenoiser final : public Denoiser {
public:
    LatentBlock flow(const LatentBlock& history, const LatentBlock& current,
                     const Conditioning&) const override;
};

/// Probability-flow field of a point-mass target: v = (x - mu) / sigma(level).
/// The Euler sampler integrates this field exactly, so a full run lands on mu
/// in closed form; intermediate states satisfy x_i = mu + (x_0 - mu) *
/// sigma_i / sigma_0.
class GaussianToyDenoiser final : public Denoiser {
public:
    explicit GaussianToyDenoiser(double target_mean) : mu_(target_mean) {}
    LatentBlock flow(const LatentBlock&, const LatentBlock& current,
                     const Conditioning&) const override;
    double target_mean() const { return mu_; }

private:
    double mu_;
};

/// Decorator counting evaluations of the wrapped denoiser.
class CountingDenoiser final : public Denoiser {
public:
    explicit CountingDenoiser(const Denoiser& inner) : inner_(inner) {}
    LatentBlock flow(const LatentBlock& history, const LatentBlock& current,
                     const Conditioning& cond) const override {
        ++count_;
        return inner_.flow(history, current, cond);
    }
    int count() const { return count_; }
    void reset() { count_ = 0; }

private:
    const Denoiser& inner_;
    mutable int count_ = 0;
};

/// Stub registry for CLI runs: "zero", "linear", "gaussian-toy" (params[0] =
/// target mean, default 0). Throws InvalidConfig for unknown names.
std::unique_ptr<Denoiser> make_denoiser(const std::string& name,
                                        const std::vector<double>& params = {});

/// Flow-matching corruption x_t = (1 - sigma)*x_0 + sigma*eps with eps drawn
/// from `seed`. Requires a clean input (level 0) and a target level in
/// [0, kTMax]; level 0 returns the input unchanged, level kTMax pure noise.
LatentBlock recorrupt(const LatentBlock& clean, double target_level, std::uint64_t seed);

/// Classifier-free-guided flow: w * v(history_ahead) + (1 - w) * v(history_same).
/// With w == 1 the second evaluation is skipped. Throws ShapeMismatch when the
/// history blocks disagree in shape or channel counts differ from `current`.
LatentBlock guided_flow(const Denoiser& denoiser, const LatentBlock& current,
                        const LatentBlock& history_ahead, const LatentBlock& history_same,
                        double w, const Conditioning& cond = {});

/// Per-step record of one denoising iteration. history_level is -1 for
/// segments generated without history.
struct StepTrace {
    int segment = 0;
    int step = 0;
    double current_level = 0.0;
    double history_level = -1.0;
    double w = 1.0;
    int denoiser_evals = 0;
};

/// Runs the full schedule on one segment. At each step the clean history is
/// re-corrupted to the level `plan.history_lead` schedule indices closer to
/// clean than the current level (clamped at level 0) for the guided branch
/// and to the current level for the plain branch; the guided flow advances
/// the current block by one Euler step. Noise seeds derive from
/// (seed, segment_index, target level) so equal levels re-corrupt identically.
LatentBlock denoise_segment(const Denoiser& denoiser, LatentBlock current_init,
                            const LatentBlock& history_clean, const NoiseSchedule& schedule,
                            const SegmentPlan& plan, const Conditioning& cond, std::uint64_t seed,
                            int segment_index = 0, std::vector<StepTrace>* trace = nullptr);

struct AutoregressiveResult {
    std::vector<SegmentRange> plan;
    LatentBlock full;  // total_frames x channels, level 0
    std::vector<StepTrace> trace;
};

/// Generates total_frames latents segment by segment: the base segment from
/// pure noise without history, then each current segment guided by the last
/// history_frames already-generated frames.
AutoregressiveResult run_autoregressive(const Denoiser& denoiser, int total_frames, int channels,
                                        const SegmentPlan& plan, const NoiseSchedule& schedule,
                                        const Conditioning& cond, std::uint64_t seed);

/// Two uniform noise levels on [0, kTMax] sorted so t1 <= t2 (history gets the
/// cleaner one during training). Deterministic in the seed.
std::pair<double, double> training_noise_pair(std::uint64_t seed);

}  // namespace trajedit
