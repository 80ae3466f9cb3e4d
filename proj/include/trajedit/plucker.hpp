// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>

#include "trajedit/camera.hpp"
#include "trajedit/image.hpp"

namespace trajedit {

/// Per-pixel Plucker ray map for one camera pose. Channels 0..2 hold the
/// moment m = o x d, channels 3..5 the unit ray direction d, both in world
/// coordinates. For every pixel dot(m, d) = 0 and |d| = 1.
struct PluckerMap {
    ImageF map;  // H x W x 6

    int width() const { return map.width(); }
    int height() const { return map.height(); }

    Eigen::Vector3d moment(int y, int x) const {
        return {map.at(y, x, 0), map.at(y, x, 1), map.at(y, x, 2)};
    }
    Eigen::Vector3d direction(int y, int x) const {
        return {map.at(y, x, 3), map.at(y, x, 4), map.at(y, x, 5)};
    }
};

/// Rays go through pixel centers (x+0.5, y+0.5); the origin is the camera
/// center in world coordinates.
PluckerMap plucker_embedding(const CameraPose& pose);

}  // namespace trajedit
