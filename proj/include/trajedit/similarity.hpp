// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>
#include <vector>

#include "trajedit/camera.hpp"
#include "trajedit/errors.hpp"

namespace trajedit {

/// Similarity transform p -> s * R * p + t with s > 0 and R a proper rotation.
struct SimilarityTransform {
    double scale = 1.0;
    Eigen::Matrix3d rotation = Eigen::Matrix3d::Identity();
    Eigen::Vector3d translation = Eigen::Vector3d::Zero();

    Eigen::Vector3d apply(const Eigen::Vector3d& p) const {
        return scale * (rotation * p) + translation;
    }

    SimilarityTransform inverse() const;

    Eigen::Matrix4d matrix() const;
};

/// Closed-form least-squares similarity fit: finds (s, R, t) minimizing
/// sum |dst_k - (s*R*src_k + t)|^2 (with-scale variant).
/// Throws DegenerateCorrespondences for mismatched lengths, fewer than 3
/// pairs, or a covariance of rank < 2 (collinear or coincident points).
SimilarityTransform umeyama_fit(const std::vector<Eigen::Vector3d>& src,
                                const std::vector<Eigen::Vector3d>& dst);

/// Root-mean-square residual of dst_k vs the transformed src_k.
double alignment_rms(const SimilarityTransform& t, const std::vector<Eigen::Vector3d>& src,
                     const std::vector<Eigen::Vector3d>& dst);

/// Re-expresses a camera pose given in an estimated coordinate frame as a
/// rigid pose in the destination frame of `est_to_world`. Pixel positions of
/// projected points are preserved; depths scale uniformly by 1/scale so the
/// depth ORDER is preserved too.
CameraPose transform_pose_by_similarity(const CameraPose& est_pose,
                                        const SimilarityTransform& est_to_world);

}  // namespace trajedit
