// Copyright (c) 2026 The diffcam authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace diffcam {

/// Bad input data or violated precondition; the CLI maps this to exit code 2.
struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Numerical degeneracy (rank-deficient fit, no crossing, ...); CLI exit code 3.
struct numeric_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Dense H x W x C image of doubles, row-major, top-left origin, channels
/// interleaved. One internal convention everywhere: row i grows downward,
/// column j grows rightward.
class Image {
  public:
    Image() = default;
    Image(int height, int width, int channels, double fill = 0.0)
        : height_(height), width_(width), channels_(channels),
          data_(static_cast<size_t>(height) * width * channels, fill) {
        if (height <= 0 || width <= 0 || channels <= 0)
            throw input_error("image dimensions must be positive");
    }

    int height() const { return height_; }
    int width() const { return width_; }
    int channels() const { return channels_; }
    size_t size() const { return data_.size(); }

    double& at(int i, int j, int c = 0) {
        return data_[(static_cast<size_t>(i) * width_ + j) * channels_ + c];
    }
    double at(int i, int j, int c = 0) const {
        return data_[(static_cast<size_t>(i) * width_ + j) * channels_ + c];
    }

    double* data() { return data_.data(); }
    const double* data() const { return data_.data(); }
    std::vector<double>& pixels() { return data_; }
    const std::vector<double>& pixels() const { return data_; }

    bool same_shape(const Image& other) const {
        return height_ == other.height_ && width_ == other.width_ &&
               channels_ == other.channels_;
    }

  private:
    int height_ = 0;
    int width_ = 0;
    int channels_ = 0;
    std::vector<double> data_;
};

// Aliases for the pipeline's domain roles. Radiance and energy images carry
// 3 channels (R,G,B); depth maps and blur-diameter maps carry 1.
using RadianceImage = Image;
using DepthMap = Image;
using EnergyImage = Image;
using BlurDiameterMap = Image;
using Cotangent = Image;

/// Per-pixel effective mask. Effective pixels participate in blur energy,
/// metrics, and calibration probes.
class RoiMask {
  public:
    RoiMask() = default;
    RoiMask(int height, int width, bool effective = false)
        : height_(height), width_(width),
          mask_(static_cast<size_t>(height) * width, effective ? 1 : 0) {
        if (height <= 0 || width <= 0)
            throw input_error("mask dimensions must be positive");
    }
    static RoiMask full(int height, int width) { return RoiMask(height, width, true); }

    int height() const { return height_; }
    int width() const { return width_; }
    bool at(int i, int j) const { return mask_[static_cast<size_t>(i) * width_ + j] != 0; }
    void set(int i, int j, bool effective) {
        mask_[static_cast<size_t>(i) * width_ + j] = effective ? 1 : 0;
    }
    size_t count() const {
        size_t n = 0;
        for (uint8_t v : mask_) n += v;
        return n;
    }
    const std::vector<uint8_t>& raw() const { return mask_; }

  private:
    int height_ = 0;
    int width_ = 0;
    std::vector<uint8_t> mask_;
};

/// 16-bit RAW output image, 3 channels interleaved, values in [0, 65535].
class RawImage16 {
  public:
    static constexpr int kMaxValue = 65535;

    RawImage16() = default;
    RawImage16(int height, int width)
        : height_(height), width_(width),
          data_(static_cast<size_t>(height) * width * 3, 0) {
        if (height <= 0 || width <= 0)
            throw input_error("image dimensions must be positive");
    }

    int height() const { return height_; }
    int width() const { return width_; }
    size_t size() const { return data_.size(); }

    uint16_t& at(int i, int j, int c) {
        return data_[(static_cast<size_t>(i) * width_ + j) * 3 + c];
    }
    uint16_t at(int i, int j, int c) const {
        return data_[(static_cast<size_t>(i) * width_ + j) * 3 + c];
    }
    std::vector<uint16_t>& values() { return data_; }
    const std::vector<uint16_t>& values() const { return data_; }

    /// Digital values scaled to [0, 1], for metrics.
    Image to_unit_image() const;

  private:
    int height_ = 0;
    int width_ = 0;
    std::vector<uint16_t> data_;
};

// Image-plane coordinates of a pixel center, measured from the optical
// center in physical units: a = (j - (w-1)/2) * C, b = (i - (h-1)/2) * C.
inline double coord_a(int j, int width, double pixel_size) {
    return (j - (width - 1) * 0.5) * pixel_size;
}
inline double coord_b(int i, int height, double pixel_size) {
    return (i - (height - 1) * 0.5) * pixel_size;
}

/// Throws input_error unless all values are finite and non-negative and the
/// image has 3 channels.
void validate_radiance(const Image& img);

/// Throws input_error unless single-channel with all values finite.
void validate_depth(const Image& img);

void require_same_shape(const Image& a, const Image& b, const std::string& what);

}  // namespace diffcam
