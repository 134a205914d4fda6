// Copyright (c) 2026 The diffcam authors
// SPDX-License-Identifier: Apache-2.0

#include "diffcam/image.hpp"

#include <cmath>

namespace diffcam {

Image RawImage16::to_unit_image() const {
    Image out(height_, width_, 3);
    for (size_t k = 0; k < data_.size(); ++k)
        out.pixels()[k] = data_[k] / 65535.0;
    return out;
}

void validate_radiance(const Image& img) {
    if (img.channels() != 3)
        throw input_error("radiance image must have 3 channels");
    for (double v : img.pixels()) {
        if (!std::isfinite(v))
            throw input_error("non-finite radiance sample");
        if (v < 0.0)
            throw input_error("negative radiance");
    }
}

void validate_depth(const Image& img) {
    if (img.channels() != 1)
        throw input_error("depth map must have a single channel");
    for (double v : img.pixels()) {
        if (!std::isfinite(v))
            throw input_error("non-finite depth sample");
    }
}

void require_same_shape(const Image& a, const Image& b, const std::string& what) {
    if (!a.same_shape(b))
        throw input_error(what + ": shape mismatch (" + std::to_string(a.height()) + "x" +
                          std::to_string(a.width()) + "x" + std::to_string(a.channels()) +
                          " vs " + std::to_string(b.height()) + "x" + std::to_string(b.width()) +
                          "x" + std::to_string(b.channels()) + ")");
}

}  // namespace diffcam
