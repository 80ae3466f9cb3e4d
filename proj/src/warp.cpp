// SPDX-License-Identifier: Apache-2.0
#include "trajedit/warp.hpp"

namespace trajedit {

WarpResult warp_dynamic(const FrameBundle& frame, const CameraPose& source_pose,
                        const CameraPose& target_pose) {
    frame.validate();
    source_pose.validate();
    target_pose.validate();
    const CameraIntrinsics& tk = target_pose.intrinsics;
    if (frame.width() != source_pose.intrinsics.width ||
        frame.height() != source_pose.intrinsics.height) {
        throw ResolutionMismatch("warp_dynamic: frame size does not match source intrinsics");
    }
    if (frame.width() != tk.width || frame.height() != tk.height) {
        throw ResolutionMismatch("warp_dynamic: frame size does not match target intrinsics");
    }

    const Eigen::Matrix4d rel = compose_relative(source_pose, target_pose);
    WarpResult out = WarpResult::empty(tk.width, tk.height);

    for (int y = 0; y < frame.height(); ++y) {
        for (int x = 0; x < frame.width(); ++x) {
            if (!frame.dynamic_mask.at(y, x) || !frame.point_valid.at(y, x)) {
                continue;
            }
            const Eigen::Vector3d p_src(frame.points.at(y, x, 0), frame.points.at(y, x, 1),
                                        frame.points.at(y, x, 2));
            const Projection proj = project_camera_point(apply_transform(rel, p_src), tk);
            splat(out, proj, frame.rgb.at(y, x, 0), frame.rgb.at(y, x, 1), frame.rgb.at(y, x, 2));
        }
    }
    return out;
}

CoarseFrame fuse_coarse(const WarpResult& dynamic, const WarpResult& static_render) {
    require_same_size(dynamic.rgb, static_render.rgb, "fuse_coarse");
    const int w = dynamic.width();
    const int h = dynamic.height();

    CoarseFrame out;
    out.rgb = ImageU8(w, h, 3, 0);
    out.mask = BinaryMask(w, h, 1, 0);

    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            const bool d = dynamic.mask.at(y, x) != 0;
            const bool s = static_render.mask.at(y, x) != 0;
            if (!d && !s) {
                continue;
            }
            // Ties go to the dynamic branch.
            const WarpResult& pick =
                (d && s) ? (dynamic.depth.at(y, x) <= static_render.depth.at(y, x) ? dynamic
                                                                                   : static_render)
                         : (d ? dynamic : static_render);
            out.rgb.at(y, x, 0) = pick.rgb.at(y, x, 0);
            out.rgb.at(y, x, 1) = pick.rgb.at(y, x, 1);
            out.rgb.at(y, x, 2) = pick.rgb.at(y, x, 2);
            out.mask.at(y, x) = 1;
        }
    }
    return out;
}

}  // namespace trajedit
