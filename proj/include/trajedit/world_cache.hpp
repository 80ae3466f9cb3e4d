// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "trajedit/camera.hpp"
#include "trajedit/frame.hpp"
#include "trajedit/similarity.hpp"

namespace trajedit {

/// Growable colored point cloud of static scene content in one global
/// coordinate frame. Points are only ever appended, never moved or removed;
/// parallel arrays carry color and (frame index, generation round) provenance.
/// Round 0 marks points from the source video, rounds >= 1 progressive updates.
class WorldCache {
public:
    std::size_t size() const { return positions_.size(); }
    bool empty() const { return positions_.empty(); }

    void append(const Eigen::Vector3d& position, const std::array<std::uint8_t, 3>& color,
                std::int32_t frame_index, std::int32_t round);

    const std::vector<Eigen::Vector3d>& positions() const { return positions_; }
    const std::vector<std::array<std::uint8_t, 3>>& colors() const { return colors_; }
    const std::vector<std::int32_t>& frame_indices() const { return frame_indices_; }
    const std::vector<std::int32_t>& rounds() const { return rounds_; }

    void reserve(std::size_t n);

private:
    std::vector<Eigen::Vector3d> positions_;
    std::vector<std::array<std::uint8_t, 3>> colors_;
    std::vector<std::int32_t> frame_indices_;
    std::vector<std::int32_t> rounds_;
};

struct CacheBuildConfig {
    int sample_count = 5;       // L frames sampled out of N
    int visibility_dilation = 1;  // pixels, dilation of the coverage mask before gap detection
};

/// Uniform frame sampling: indices round(k*(N-1)/(L-1)) for k = 0..L-1.
/// L = 1 takes frame 0. Requires 1 <= count <= total.
std::vector<int> uniform_sample_indices(int total, int count);

/// Square-window morphological dilation by `radius` pixels. radius 0 copies.
BinaryMask dilate_mask(const BinaryMask& mask, int radius);

/// Z-buffered nearest-pixel splat of every cache point into the given view.
WarpResult render_cache(const WorldCache& cache, const CameraPose& pose);

/// Visibility-gated incremental fusion: processes the sampled frames in
/// temporal order; for each, renders the current cache into that frame's
/// pose, dilates the coverage mask, and appends the world-transformed static
/// (non-dynamic, point-valid) pixels that fall outside the dilated mask.
/// Throws EmptyInput for zero frames and InvalidConfig for a bad config.
WorldCache build_cache(const std::vector<FrameBundle>& frames,
                       const std::vector<CameraPose>& poses, const CacheBuildConfig& config);

/// Progressive merge of newly generated anchor frames. Fits a similarity from
/// the estimated frame to the cache frame over the given correspondences,
/// re-expresses the anchors in cache coordinates and appends their static
/// points under the same visibility gap rule as build_cache, tagged with
/// `round`. When `fitted` is non-null the recovered alignment is written there.
WorldCache update_cache(const WorldCache& cache, const std::vector<FrameBundle>& anchors,
                        const std::vector<CameraPose>& anchor_poses_estimated,
                        const std::vector<Eigen::Vector3d>& correspondence_src,
                        const std::vector<Eigen::Vector3d>& correspondence_dst,
                        std::int32_t round, int visibility_dilation = 1,
                        SimilarityTransform* fitted = nullptr);

struct CacheStats {
    std::size_t count = 0;
    std::optional<Eigen::Vector3d> bbox_min;
    std::optional<Eigen::Vector3d> bbox_max;
    std::map<std::int32_t, std::size_t> per_round;
};

CacheStats cache_stats(const WorldCache& cache);

}  // namespace trajedit
