// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "trajedit/image.hpp"

namespace trajedit {

/// |a AND b| / |a OR b|. Two empty masks give 1.0.
double mask_iou(const BinaryMask& a, const BinaryMask& b);

/// 10*log10(255^2 / MSE) over all channels; +inf for identical images.
double psnr(const ImageU8& reference, const ImageU8& candidate);

/// PSNR restricted to pixels where `mask` is set (all channels of those
/// pixels). An empty selection gives +inf.
double psnr_masked(const ImageU8& reference, const ImageU8& candidate, const BinaryMask& mask);

}  // namespace trajedit
