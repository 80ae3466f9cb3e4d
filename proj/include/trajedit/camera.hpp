// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>
#include <vector>

#include "trajedit/errors.hpp"

namespace trajedit {

/// Points with camera-frame z at or below this are treated as behind the camera.
inline constexpr double kZNear = 1e-4;

struct CameraIntrinsics {
    double fx = 0.0;
    double fy = 0.0;
    double cx = 0.0;
    double cy = 0.0;
    int width = 0;
    int height = 0;

    /// Throws InvalidPose unless fx,fy > 0, the principal point lies inside the
    /// image and width/height >= 1.
    void validate() const;
};

/// Camera intrinsics plus a world-to-camera rigid transform. `extrinsic` maps
/// world coordinates to camera coordinates; the rotation block must be
/// orthonormal with det +1 (within 1e-9) and the bottom row exactly (0,0,0,1).
struct CameraPose {
    CameraIntrinsics intrinsics;
    Eigen::Matrix4d extrinsic = Eigen::Matrix4d::Identity();

    Eigen::Matrix3d rotation() const { return extrinsic.topLeftCorner<3, 3>(); }
    Eigen::Vector3d translation() const { return extrinsic.topRightCorner<3, 1>(); }

    /// Camera center in world coordinates: -R^T t.
    Eigen::Vector3d camera_center() const { return -rotation().transpose() * translation(); }

    /// Rigid inverse of the extrinsic.
    Eigen::Matrix4d camera_to_world() const;

    Eigen::Vector3d world_to_camera_point(const Eigen::Vector3d& p) const {
        return rotation() * p + translation();
    }
    Eigen::Vector3d camera_to_world_point(const Eigen::Vector3d& p) const {
        return rotation().transpose() * (p - translation());
    }

    void validate() const;
};

struct Projection {
    double u = 0.0;
    double v = 0.0;
    double depth = 0.0;
    bool in_frustum = false;
};

/// Perspective projection of a camera-frame point: u = fx*x/z + cx,
/// v = fy*y/z + cy, depth = z. in_frustum requires z > kZNear and (u, v)
/// inside [0, width) x [0, height). Non-finite points project out of frustum.
Projection project_camera_point(const Eigen::Vector3d& p_cam, const CameraIntrinsics& k);

Projection project_point(const Eigen::Vector3d& p_world, const CameraPose& pose);

std::vector<Projection> project(const std::vector<Eigen::Vector3d>& points, const CameraPose& pose);

/// target.extrinsic * source.extrinsic^{-1}: maps source-camera-frame points
/// to target-camera-frame points.
Eigen::Matrix4d compose_relative(const CameraPose& source, const CameraPose& target);

Eigen::Vector3d apply_transform(const Eigen::Matrix4d& m, const Eigen::Vector3d& p);

/// Camera-frame point at continuous image coordinates (u, v) and depth z.
Eigen::Vector3d unproject_camera(double u, double v, double depth, const CameraIntrinsics& k);

/// World-frame inverse of project_point for continuous (u, v).
Eigen::Vector3d unproject(double u, double v, double depth, const CameraPose& pose);

/// Camera-frame point on the ray through the center of pixel (x, y) at depth z.
inline Eigen::Vector3d pixel_center_point(int x, int y, double depth, const CameraIntrinsics& k) {
    return unproject_camera(x + 0.5, y + 0.5, depth, k);
}

/// Rotation with +z toward `target`, built from an up hint. det +1 always.
Eigen::Matrix3d look_at_rotation(const Eigen::Vector3d& eye, const Eigen::Vector3d& target,
                                 const Eigen::Vector3d& up_hint = Eigen::Vector3d(0, 1, 0));

/// World-to-camera pose for a camera at `eye` looking at `target`.
Eigen::Matrix4d look_at_extrinsic(const Eigen::Vector3d& eye, const Eigen::Vector3d& target,
                                  const Eigen::Vector3d& up_hint = Eigen::Vector3d(0, 1, 0));

}  // namespace trajedit
