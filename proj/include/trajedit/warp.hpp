// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "trajedit/camera.hpp"
#include "trajedit/frame.hpp"

namespace trajedit {

/// Nearest-pixel z-buffered splat of one candidate into `out`. The candidate
/// wins its pixel only with strictly smaller depth, so the first writer keeps
/// exact ties. Out-of-frustum candidates are ignored.
inline void splat(WarpResult& out, const Projection& p, std::uint8_t r, std::uint8_t g,
                  std::uint8_t b) {
    if (!p.in_frustum) {
        return;
    }
    const int x = static_cast<int>(p.u);
    const int y = static_cast<int>(p.v);
    if (p.depth < out.depth.at(y, x)) {
        out.depth.at(y, x) = p.depth;
        out.rgb.at(y, x, 0) = r;
        out.rgb.at(y, x, 1) = g;
        out.rgb.at(y, x, 2) = b;
        out.mask.at(y, x) = 1;
    }
}

/// Warps the dynamic, point-valid pixels of `frame` into the target view:
/// each 3D point goes through compose_relative(source, target), is projected
/// with the target intrinsics and splatted to its nearest pixel.
/// Throws ResolutionMismatch if frame size differs from the target intrinsics.
WarpResult warp_dynamic(const FrameBundle& frame, const CameraPose& source_pose,
                        const CameraPose& target_pose);

/// Per-pixel depth-test fusion: where both inputs are valid the nearer one
/// wins and the dynamic branch keeps exact ties; otherwise the valid input is
/// copied. Output mask is the OR of the input masks; uncovered pixels stay
/// black.
CoarseFrame fuse_coarse(const WarpResult& dynamic, const WarpResult& static_render);

}  // namespace trajedit
