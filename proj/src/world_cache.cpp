// SPDX-License-Identifier: Apache-2.0
#include "trajedit/world_cache.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "trajedit/warp.hpp"

namespace trajedit {

void WorldCache::append(const Eigen::Vector3d& position, const std::array<std::uint8_t, 3>& color,
                        std::int32_t frame_index, std::int32_t round) {
    if (!position.allFinite()) {
        throw DataError("WorldCache::append: non-finite point");
    }
    positions_.push_back(position);
    colors_.push_back(color);
    frame_indices_.push_back(frame_index);
    rounds_.push_back(round);
}

void WorldCache::reserve(std::size_t n) {
    positions_.reserve(n);
    colors_.reserve(n);
    frame_indices_.reserve(n);
    rounds_.reserve(n);
}

std::vector<int> uniform_sample_indices(int total, int count) {
    if (total < 1) {
        throw EmptyInput("uniform_sample_indices: no frames");
    }
    if (count < 1 || count > total) {
        throw InvalidConfig("uniform_sample_indices: sample count must be in [1, N]");
    }
    std::vector<int> indices;
    indices.reserve(count);
    if (count == 1) {
        indices.push_back(0);
        return indices;
    }
    for (int k = 0; k < count; ++k) {
        indices.push_back(static_cast<int>(
            std::llround(static_cast<double>(k) * (total - 1) / (count - 1))));
    }
    return indices;
}

BinaryMask dilate_mask(const BinaryMask& mask, int radius) {
    if (radius < 0) {
        throw InvalidConfig("dilate_mask: negative radius");
    }
    if (radius == 0) {
        return mask;
    }
    const int w = mask.width();
    const int h = mask.height();
    // Separable: horizontal max then vertical max.
    BinaryMask horiz(w, h, 1, 0);
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            std::uint8_t v = 0;
            const int x0 = std::max(0, x - radius);
            const int x1 = std::min(w - 1, x + radius);
            for (int i = x0; i <= x1 && !v; ++i) {
                v = mask.at(y, i);
            }
            horiz.at(y, x) = v ? 1 : 0;
        }
    }
    BinaryMask out(w, h, 1, 0);
    for (int y = 0; y < h; ++y) {
        const int y0 = std::max(0, y - radius);
        const int y1 = std::min(h - 1, y + radius);
        for (int x = 0; x < w; ++x) {
            std::uint8_t v = 0;
            for (int j = y0; j <= y1 && !v; ++j) {
                v = horiz.at(j, x);
            }
            out.at(y, x) = v ? 1 : 0;
        }
    }
    return out;
}

WarpResult render_cache(const WorldCache& cache, const CameraPose& pose) {
    pose.validate();
    const CameraIntrinsics& k = pose.intrinsics;
    WarpResult out = WarpResult::empty(k.width, k.height);
    const Eigen::Matrix3d r = pose.rotation();
    const Eigen::Vector3d t = pose.translation();
    const auto& positions = cache.positions();
    const auto& colors = cache.colors();
    for (std::size_t i = 0; i < positions.size(); ++i) {
        const Projection proj = project_camera_point(r * positions[i] + t, k);
        splat(out, proj, colors[i][0], colors[i][1], colors[i][2]);
    }
    return out;
}

namespace {

/// Appends the static, point-valid pixels of `frame` that fall outside the
/// dilated coverage of the current cache as seen from `render_pose`. Points
/// are transformed to world coordinates with `camera_to_world`, which may
/// include a similarity alignment.
void append_visibility_gaps(WorldCache& cache, const FrameBundle& frame,
                            const CameraPose& render_pose,
                            const std::function<Eigen::Vector3d(const Eigen::Vector3d&)>& to_world,
                            int dilation, std::int32_t frame_index, std::int32_t round) {
    const WarpResult rendered = render_cache(cache, render_pose);
    const BinaryMask covered = dilate_mask(rendered.mask, dilation);
    for (int y = 0; y < frame.height(); ++y) {
        for (int x = 0; x < frame.width(); ++x) {
            if (covered.at(y, x) || frame.dynamic_mask.at(y, x) || !frame.point_valid.at(y, x)) {
                continue;
            }
            const Eigen::Vector3d p_cam(frame.points.at(y, x, 0), frame.points.at(y, x, 1),
                                        frame.points.at(y, x, 2));
            cache.append(to_world(p_cam),
                         {frame.rgb.at(y, x, 0), frame.rgb.at(y, x, 1), frame.rgb.at(y, x, 2)},
                         frame_index, round);
        }
    }
}

}  // namespace

WorldCache build_cache(const std::vector<FrameBundle>& frames,
                       const std::vector<CameraPose>& poses, const CacheBuildConfig& config) {
    if (frames.empty()) {
        throw EmptyInput("build_cache: no frames");
    }
    if (frames.size() != poses.size()) {
        throw ResolutionMismatch("build_cache: frame/pose count mismatch");
    }
    if (config.visibility_dilation < 0) {
        throw InvalidConfig("build_cache: negative dilation");
    }
    const std::vector<int> sampled =
        uniform_sample_indices(static_cast<int>(frames.size()), config.sample_count);

    WorldCache cache;
    for (int idx : sampled) {
        const FrameBundle& frame = frames[idx];
        const CameraPose& pose = poses[idx];
        frame.validate();
        pose.validate();
        append_visibility_gaps(
            cache, frame, pose,
            [&pose](const Eigen::Vector3d& p_cam) { return pose.camera_to_world_point(p_cam); },
            config.visibility_dilation, idx, /*round=*/0);
    }
    return cache;
}

WorldCache update_cache(const WorldCache& cache, const std::vector<FrameBundle>& anchors,
                        const std::vector<CameraPose>& anchor_poses_estimated,
                        const std::vector<Eigen::Vector3d>& correspondence_src,
                        const std::vector<Eigen::Vector3d>& correspondence_dst,
                        std::int32_t round, int visibility_dilation, SimilarityTransform* fitted) {
    if (anchors.size() != anchor_poses_estimated.size()) {
        throw ResolutionMismatch("update_cache: anchor/pose count mismatch");
    }
    if (visibility_dilation < 0) {
        throw InvalidConfig("update_cache: negative dilation");
    }
    const SimilarityTransform align = umeyama_fit(correspondence_src, correspondence_dst);
    if (fitted != nullptr) {
        *fitted = align;
    }

    WorldCache grown = cache;
    for (std::size_t i = 0; i < anchors.size(); ++i) {
        const FrameBundle& frame = anchors[i];
        frame.validate();
        anchor_poses_estimated[i].validate();
        const CameraPose render_pose = transform_pose_by_similarity(anchor_poses_estimated[i], align);
        const CameraPose& est_pose = anchor_poses_estimated[i];
        append_visibility_gaps(
            grown, frame, render_pose,
            [&est_pose, &align](const Eigen::Vector3d& p_cam) {
                return align.apply(est_pose.camera_to_world_point(p_cam));
            },
            visibility_dilation, static_cast<std::int32_t>(i), round);
    }
    return grown;
}

CacheStats cache_stats(const WorldCache& cache) {
    CacheStats stats;
    stats.count = cache.size();
    for (std::size_t i = 0; i < cache.size(); ++i) {
        const Eigen::Vector3d& p = cache.positions()[i];
        if (!stats.bbox_min) {
            stats.bbox_min = p;
            stats.bbox_max = p;
        } else {
            stats.bbox_min = stats.bbox_min->cwiseMin(p);
            stats.bbox_max = stats.bbox_max->cwiseMax(p);
        }
        ++stats.per_round[cache.rounds()[i]];
    }
    return stats;
}

}  // namespace trajedit
