// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <limits>

#include "trajedit/image.hpp"

namespace trajedit {

/// One source frame: colors, per-pixel 3D points in the frame's OWN camera
/// coordinate system, a dynamic-object mask and a point-validity mask.
/// points must be finite wherever point_valid is set.
struct FrameBundle {
    ImageU8 rgb;         // H x W x 3
    ImageF points;       // H x W x 3, camera frame
    BinaryMask dynamic_mask;  // nonzero = dynamic
    BinaryMask point_valid;   // nonzero = 3D point available

    int width() const { return rgb.width(); }
    int height() const { return rgb.height(); }

    /// Throws ResolutionMismatch if the four rasters disagree in size.
    void validate() const {
        require_same_size(rgb, points, "frame rgb/points");
        require_same_size(rgb, dynamic_mask, "frame rgb/dynamic_mask");
        require_same_size(rgb, point_valid, "frame rgb/point_valid");
    }
};

/// Target-view raster produced by warping or cache rendering. mask is set
/// exactly where depth is finite; rgb is meaningful only there.
struct WarpResult {
    ImageU8 rgb;   // H x W x 3
    ImageF depth;  // H x W, +inf where empty
    BinaryMask mask;

    int width() const { return rgb.width(); }
    int height() const { return rgb.height(); }

    static WarpResult empty(int width, int height) {
        WarpResult r;
        r.rgb = ImageU8(width, height, 3, 0);
        r.depth = ImageF(width, height, 1, std::numeric_limits<double>::infinity());
        r.mask = BinaryMask(width, height, 1, 0);
        return r;
    }
};

/// Depth-fused combination of a dynamic warp and a static render.
struct CoarseFrame {
    ImageU8 rgb;
    BinaryMask mask;
};

}  // namespace trajedit
