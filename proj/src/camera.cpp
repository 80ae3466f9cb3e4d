// SPDX-License-Identifier: Apache-2.0
#include "trajedit/camera.hpp"

#include <cmath>

namespace trajedit {

void CameraIntrinsics::validate() const {
    if (!(fx > 0.0) || !(fy > 0.0)) {
        throw InvalidPose("intrinsics: focal lengths must be positive");
    }
    if (width < 1 || height < 1) {
        throw InvalidPose("intrinsics: image size must be at least 1x1");
    }
    if (!(cx >= 0.0 && cx < width) || !(cy >= 0.0 && cy < height)) {
        throw InvalidPose("intrinsics: principal point outside image");
    }
}

Eigen::Matrix4d CameraPose::camera_to_world() const {
    Eigen::Matrix4d inv = Eigen::Matrix4d::Identity();
    const Eigen::Matrix3d rt = rotation().transpose();
    inv.topLeftCorner<3, 3>() = rt;
    inv.topRightCorner<3, 1>() = -rt * translation();
    return inv;
}

void CameraPose::validate() const {
    intrinsics.validate();
    constexpr double tol = 1e-9;
    const Eigen::Matrix3d r = rotation();
    if ((r * r.transpose() - Eigen::Matrix3d::Identity()).cwiseAbs().maxCoeff() > tol) {
        throw InvalidPose("pose: rotation block is not orthonormal");
    }
    if (std::abs(r.determinant() - 1.0) > tol) {
        throw InvalidPose("pose: rotation determinant is not +1");
    }
    if (extrinsic(3, 0) != 0.0 || extrinsic(3, 1) != 0.0 || extrinsic(3, 2) != 0.0 ||
        extrinsic(3, 3) != 1.0) {
        throw InvalidPose("pose: bottom row must be (0,0,0,1)");
    }
    if (!extrinsic.allFinite()) {
        throw InvalidPose("pose: extrinsic has non-finite entries");
    }
}

Projection project_camera_point(const Eigen::Vector3d& p_cam, const CameraIntrinsics& k) {
    Projection out;
    out.depth = p_cam.z();
    if (!p_cam.allFinite() || p_cam.z() <= kZNear) {
        out.in_frustum = false;
        return out;
    }
    out.u = k.fx * p_cam.x() / p_cam.z() + k.cx;
    out.v = k.fy * p_cam.y() / p_cam.z() + k.cy;
    out.in_frustum = out.u >= 0.0 && out.u < k.width && out.v >= 0.0 && out.v < k.height;
    return out;
}

Projection project_point(const Eigen::Vector3d& p_world, const CameraPose& pose) {
    if (!p_world.allFinite()) {
        Projection out;
        out.in_frustum = false;
        return out;
    }
    return project_camera_point(pose.world_to_camera_point(p_world), pose.intrinsics);
}

std::vector<Projection> project(const std::vector<Eigen::Vector3d>& points, const CameraPose& pose) {
    std::vector<Projection> out;
    out.reserve(points.size());
    for (const auto& p : points) {
        out.push_back(project_point(p, pose));
    }
    return out;
}

Eigen::Matrix4d compose_relative(const CameraPose& source, const CameraPose& target) {
    return target.extrinsic * source.camera_to_world();
}

Eigen::Vector3d apply_transform(const Eigen::Matrix4d& m, const Eigen::Vector3d& p) {
    return m.topLeftCorner<3, 3>() * p + m.topRightCorner<3, 1>();
}

Eigen::Vector3d unproject_camera(double u, double v, double depth, const CameraIntrinsics& k) {
    return {(u - k.cx) / k.fx * depth, (v - k.cy) / k.fy * depth, depth};
}

Eigen::Vector3d unproject(double u, double v, double depth, const CameraPose& pose) {
    return pose.camera_to_world_point(unproject_camera(u, v, depth, pose.intrinsics));
}

Eigen::Matrix3d look_at_rotation(const Eigen::Vector3d& eye, const Eigen::Vector3d& target,
                                 const Eigen::Vector3d& up_hint) {
    Eigen::Vector3d z = (target - eye).normalized();
    Eigen::Vector3d hint = up_hint;
    if (hint.cross(z).norm() < 1e-12) {
        hint = Eigen::Vector3d(1, 0, 0);
    }
    Eigen::Vector3d x = hint.cross(z).normalized();
    Eigen::Vector3d y = z.cross(x);
    Eigen::Matrix3d c2w;
    c2w.col(0) = x;
    c2w.col(1) = y;
    c2w.col(2) = z;
    return c2w.transpose();  // world-to-camera
}

Eigen::Matrix4d look_at_extrinsic(const Eigen::Vector3d& eye, const Eigen::Vector3d& target,
                                  const Eigen::Vector3d& up_hint) {
    Eigen::Matrix4d m = Eigen::Matrix4d::Identity();
    const Eigen::Matrix3d r = look_at_rotation(eye, target, up_hint);
    m.topLeftCorner<3, 3>() = r;
    m.topRightCorner<3, 1>() = -r * eye;
    return m;
}

}  // namespace trajedit
