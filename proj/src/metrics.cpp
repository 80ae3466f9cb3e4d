// SPDX-License-Identifier: Apache-2.0
#include "trajedit/metrics.hpp"

#include <cmath>
#include <limits>

namespace trajedit {

double mask_iou(const BinaryMask& a, const BinaryMask& b) {
    require_same_size(a, b, "mask_iou");
    std::size_t inter = 0;
    std::size_t uni = 0;
    for (int y = 0; y < a.height(); ++y) {
        for (int x = 0; x < a.width(); ++x) {
            const bool va = a.at(y, x) != 0;
            const bool vb = b.at(y, x) != 0;
            inter += (va && vb) ? 1 : 0;
            uni += (va || vb) ? 1 : 0;
        }
    }
    if (uni == 0) {
        return 1.0;
    }
    return static_cast<double>(inter) / static_cast<double>(uni);
}

namespace {

double psnr_from_sums(double squared_error, std::size_t samples) {
    if (samples == 0 || squared_error == 0.0) {
        return std::numeric_limits<double>::infinity();
    }
    const double mse = squared_error / static_cast<double>(samples);
    return 10.0 * std::log10(255.0 * 255.0 / mse);
}

}  // namespace

double psnr(const ImageU8& reference, const ImageU8& candidate) {
    require_same_size(reference, candidate, "psnr");
    double err = 0.0;
    std::size_t n = 0;
    for (int y = 0; y < reference.height(); ++y) {
        for (int x = 0; x < reference.width(); ++x) {
            for (int c = 0; c < reference.channels(); ++c) {
                const double d = static_cast<double>(reference.at(y, x, c)) -
                                 static_cast<double>(candidate.at(y, x, c));
                err += d * d;
                ++n;
            }
        }
    }
    return psnr_from_sums(err, n);
}

double psnr_masked(const ImageU8& reference, const ImageU8& candidate, const BinaryMask& mask) {
    require_same_size(reference, candidate, "psnr_masked");
    require_same_size(reference, mask, "psnr_masked mask");
    double err = 0.0;
    std::size_t n = 0;
    for (int y = 0; y < reference.height(); ++y) {
        for (int x = 0; x < reference.width(); ++x) {
            if (!mask.at(y, x)) {
                continue;
            }
            for (int c = 0; c < reference.channels(); ++c) {
                const double d = static_cast<double>(reference.at(y, x, c)) -
                                 static_cast<double>(candidate.at(y, x, c));
                err += d * d;
                ++n;
            }
        }
    }
    return psnr_from_sums(err, n);
}

}  // namespace trajedit
