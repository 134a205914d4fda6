// Copyright (c) 2026 The diffcam authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <limits>
#include <string>

#include "diffcam/image.hpp"

namespace diffcam {

struct MetricReport {
    double psnr = 0.0;  // +inf encoded by psnr_inf
    bool psnr_inf = false;
    double ssim = 0.0;
    size_t effective_pixel_count = 0;
};

/// PSNR over effective pixels only, images in [0, 1]:
///   -10 log10( sum_roi sum_ch (y - yhat)^2 / (3 * |roi|) ).
/// The channel dimension counts toward the effective samples, so a uniform
/// per-channel error maps to the expected MSE. Identical inputs return +inf.
double psnr_effective(const Image& pred, const Image& truth, const RoiMask& roi);

/// Mean structural similarity with the standard 11x11 Gaussian window
/// (sigma 1.5) and constants C1 = 0.01^2, C2 = 0.03^2 on [0, 1] data,
/// computed per channel then averaged. Only windows fully inside the image
/// and centered on an effective pixel participate.
double ssim(const Image& pred, const Image& truth, const RoiMask& roi);

MetricReport compare_images(const Image& pred, const Image& truth, const RoiMask& roi);

/// {"psnr": ..., "inf": ..., "ssim": ..., "effective_pixel_count": ...};
/// psnr is null when infinite.
std::string metric_report_json(const MetricReport& report);

}  // namespace diffcam
