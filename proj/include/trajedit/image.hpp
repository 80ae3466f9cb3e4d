// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "trajedit/errors.hpp"

namespace trajedit {

/// Dense row-major H x W x C raster. Pixel (x, y) covers the unit square
/// [x, x+1) x [y, y+1); continuous pixel centers sit at (x+0.5, y+0.5).
template <typename T>
class Image {
public:
    Image() = default;
    Image(int width, int height, int channels, T fill = T{})
        : width_(width),
          height_(height),
          channels_(channels),
          data_(static_cast<std::size_t>(width) * height * channels, fill) {}

    int width() const { return width_; }
    int height() const { return height_; }
    int channels() const { return channels_; }
    bool empty() const { return data_.empty(); }
    std::size_t pixel_count() const { return static_cast<std::size_t>(width_) * height_; }

    T& at(int y, int x, int c = 0) { return data_[index(y, x, c)]; }
    const T& at(int y, int x, int c = 0) const { return data_[index(y, x, c)]; }

    std::vector<T>& data() { return data_; }
    const std::vector<T>& data() const { return data_; }

    bool same_size(const Image& o) const { return width_ == o.width_ && height_ == o.height_; }

private:
    std::size_t index(int y, int x, int c) const {
        return (static_cast<std::size_t>(y) * width_ + x) * channels_ + c;
    }

    int width_ = 0;
    int height_ = 0;
    int channels_ = 0;
    std::vector<T> data_;
};

using ImageU8 = Image<std::uint8_t>;
using ImageU16 = Image<std::uint16_t>;
using ImageF = Image<double>;

/// Single-channel boolean raster; nonzero = set.
using BinaryMask = Image<std::uint8_t>;

template <typename A, typename B>
void require_same_size(const Image<A>& a, const Image<B>& b, const std::string& what) {
    if (a.width() != b.width() || a.height() != b.height()) {
        throw ResolutionMismatch(what + ": " + std::to_string(a.width()) + "x" +
                                 std::to_string(a.height()) + " vs " + std::to_string(b.width()) +
                                 "x" + std::to_string(b.height()));
    }
}

}  // namespace trajedit
