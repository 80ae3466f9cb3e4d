// SPDX-License-Identifier: Apache-2.0
#include "trajedit/plucker.hpp"

namespace trajedit {

PluckerMap plucker_embedding(const CameraPose& pose) {
    pose.validate();
    const CameraIntrinsics& k = pose.intrinsics;
    PluckerMap out;
    out.map = ImageF(k.width, k.height, 6);

    const Eigen::Matrix3d r_inv = pose.rotation().transpose();
    const Eigen::Vector3d origin = pose.camera_center();

    for (int y = 0; y < k.height; ++y) {
        for (int x = 0; x < k.width; ++x) {
            const Eigen::Vector3d dir_cam((x + 0.5 - k.cx) / k.fx, (y + 0.5 - k.cy) / k.fy, 1.0);
            const Eigen::Vector3d d = (r_inv * dir_cam).normalized();
            const Eigen::Vector3d m = origin.cross(d);
            out.map.at(y, x, 0) = m.x();
            out.map.at(y, x, 1) = m.y();
            out.map.at(y, x, 2) = m.z();
            out.map.at(y, x, 3) = d.x();
            out.map.at(y, x, 4) = d.y();
            out.map.at(y, x, 5) = d.z();
        }
    }
    return out;
}

}  // namespace trajedit
