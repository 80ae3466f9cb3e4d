// SPDX-License-Identifier: Apache-2.0
#include "trajedit/similarity.hpp"

#include <cmath>

namespace trajedit {

SimilarityTransform SimilarityTransform::inverse() const {
    SimilarityTransform inv;
    inv.scale = 1.0 / scale;
    inv.rotation = rotation.transpose();
    inv.translation = -inv.scale * (inv.rotation * translation);
    return inv;
}

Eigen::Matrix4d SimilarityTransform::matrix() const {
    Eigen::Matrix4d m = Eigen::Matrix4d::Identity();
    m.topLeftCorner<3, 3>() = scale * rotation;
    m.topRightCorner<3, 1>() = translation;
    return m;
}

SimilarityTransform umeyama_fit(const std::vector<Eigen::Vector3d>& src,
                                const std::vector<Eigen::Vector3d>& dst) {
    if (src.size() != dst.size()) {
        throw DegenerateCorrespondences("umeyama_fit: point lists differ in length");
    }
    const std::size_t n = src.size();
    if (n < 3) {
        throw DegenerateCorrespondences("umeyama_fit: need at least 3 correspondences");
    }

    Eigen::Vector3d mean_src = Eigen::Vector3d::Zero();
    Eigen::Vector3d mean_dst = Eigen::Vector3d::Zero();
    for (std::size_t i = 0; i < n; ++i) {
        mean_src += src[i];
        mean_dst += dst[i];
    }
    mean_src /= static_cast<double>(n);
    mean_dst /= static_cast<double>(n);

    Eigen::Matrix3d cov = Eigen::Matrix3d::Zero();
    double var_src = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const Eigen::Vector3d ds = src[i] - mean_src;
        const Eigen::Vector3d dd = dst[i] - mean_dst;
        cov += dd * ds.transpose();
        var_src += ds.squaredNorm();
    }
    cov /= static_cast<double>(n);
    var_src /= static_cast<double>(n);

    Eigen::JacobiSVD<Eigen::Matrix3d> svd(cov, Eigen::ComputeFullU | Eigen::ComputeFullV);
    const Eigen::Vector3d sv = svd.singularValues();
    if (var_src <= 0.0 || sv(0) <= 0.0 || sv(1) <= 1e-12 * sv(0)) {
        throw DegenerateCorrespondences("umeyama_fit: covariance rank < 2");
    }

    Eigen::Vector3d sign = Eigen::Vector3d::Ones();
    if (svd.matrixU().determinant() * svd.matrixV().determinant() < 0.0) {
        sign(2) = -1.0;
    }

    SimilarityTransform out;
    out.rotation = svd.matrixU() * sign.asDiagonal() * svd.matrixV().transpose();
    out.scale = sv.dot(sign) / var_src;
    if (!(out.scale > 0.0)) {
        throw DegenerateCorrespondences("umeyama_fit: non-positive scale");
    }
    out.translation = mean_dst - out.scale * (out.rotation * mean_src);
    return out;
}

double alignment_rms(const SimilarityTransform& t, const std::vector<Eigen::Vector3d>& src,
                     const std::vector<Eigen::Vector3d>& dst) {
    if (src.size() != dst.size() || src.empty()) {
        throw DegenerateCorrespondences("alignment_rms: invalid point lists");
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < src.size(); ++i) {
        sum += (dst[i] - t.apply(src[i])).squaredNorm();
    }
    return std::sqrt(sum / static_cast<double>(src.size()));
}

CameraPose transform_pose_by_similarity(const CameraPose& est_pose,
                                        const SimilarityTransform& est_to_world) {
    // For a world point q, the new pose must see q exactly where the old
    // pose saw S^{-1}(q). Dropping the uniform 1/s factor keeps the
    // extrinsic rigid and leaves pixel positions and depth order unchanged.
    const Eigen::Matrix3d r_e = est_pose.rotation();
    const Eigen::Vector3d t_e = est_pose.translation();
    const Eigen::Matrix3d r_new = r_e * est_to_world.rotation.transpose();

    CameraPose out = est_pose;
    out.extrinsic = Eigen::Matrix4d::Identity();
    out.extrinsic.topLeftCorner<3, 3>() = r_new;
    out.extrinsic.topRightCorner<3, 1>() = est_to_world.scale * t_e - r_new * est_to_world.translation;
    return out;
}

}  // namespace trajedit
