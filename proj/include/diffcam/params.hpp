// Copyright (c) 2026 The diffcam authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <string>

#include "diffcam/image.hpp"

namespace diffcam {

/// User-facing exposure triangle plus lens/sensor geometry. Units: seconds,
/// meters, dimensionless gains.
struct CameraSettings {
    double aperture_number = 1.0;   // N
    double exposure_time = 1.0;     // t [s]
    double iso = 1.0;               // ISO
    double focus_distance = 1.0;    // U [m]
    double focal_length = 0.005;    // f [m]
    double pixel_size = 1.0;        // C [m]
    double sensor_width = 1.0;      // [m]
    double scene_illumination = 1.0;

    void validate() const;
};

enum class CrfKind { Linear, Gamma, Sigmoid };

std::string to_string(CrfKind kind);
CrfKind crf_kind_from_string(const std::string& name);

/// Calibratable sensor model gains. Defaults are the documented neutral
/// values: gains 1, offsets 0, gamma 1, linear response.
struct SensorModelParams {
    double distortion_k1 = 0.0;
    double distortion_k2 = 0.0;
    double distortion_k3 = 0.0;
    double vignetting_gain = 1.0;                       // in [0, 1]
    double defocus_gain = 1.0;
    std::array<double, 3> aggregator_qe_rgb = {1.0, 1.0, 1.0};
    double dark_current = 0.0;                          // energy per second
    CrfKind crf_kind = CrfKind::Linear;
    double crf_a = 1.0;
    std::array<double, 3> crf_b_rgb = {0.0, 0.0, 0.0};
    double crf_gamma = 1.0;
    double noise_gain = 0.0;
    double read_sigma = 0.0;

    void validate() const;
};

/// Per-layer enable switches, in pipeline order. The exposure-ratio fallback
/// rescales output by t/0.256 when both aggregator and crf are off, taking a
/// 256 ms exposure as the brightness baseline.
struct LayerToggles {
    bool distortion = true;
    bool vignetting = true;
    bool defocus = true;
    bool aggregator = true;
    bool noise = true;
    bool crf = true;
    bool exposure_ratio_fallback = false;

    bool fallback_active() const {
        return exposure_ratio_fallback && !aggregator && !crf;
    }
};

// The four ablation presets exposed by the CLI. Distortion stays off in all
// of them; "full" keeps the noise layer (dark current included), the others
// drop it. The last two lean on the 256 ms exposure-ratio fallback.
LayerToggles preset_toggles(const std::string& name);

}  // namespace diffcam
