// Copyright (c) 2026 The diffcam authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <string>
#include <vector>

#include "diffcam/image.hpp"
#include "diffcam/params.hpp"

namespace diffcam {

/// Axis-aligned pixel rectangle, end-exclusive.
struct PatchRegion {
    int row0 = 0, col0 = 0, row1 = 0, col1 = 0;
};

enum class SceneKind { FlatField, SlantEdge, CheckerGrid };

/// Deterministic synthetic calibration target description.
struct SceneSpec {
    SceneKind kind = SceneKind::FlatField;
    int height = 256;
    int width = 256;
    double depth_m = 1.0;       // constant target depth
    double illumination = 1.0;  // scales all reflectances into radiance

    // flat_field
    double level = 1.0;  // uniform reflectance

    // slant_edge: bright on the left, dark on the right, the dividing edge
    // tilted away from vertical by tilt_deg in (0, 45]
    double tilt_deg = 10.0;
    double bright = 1.0;
    double dark = 0.05;

    // checker_grid
    int patch_rows = 4;
    int patch_cols = 6;
    std::vector<std::array<double, 3>> reflectances;  // row-major per patch
};

struct Scene {
    RadianceImage radiance;
    DepthMap depth;
    RoiMask roi;
    std::vector<PatchRegion> probe_regions;  // checker_grid only
};

Scene gen_flat_field(const SceneSpec& spec);

/// Anti-aliased by exact pixel-area coverage of the dividing line, so the
/// unblurred profile is a one-pixel ramp rather than a supersampling
/// approximation.
Scene gen_slant_edge(const SceneSpec& spec);

/// Piecewise-constant reflectance grid. Unspecified patches cycle through a
/// default palette. Each patch contributes three probe values (R, G, B of
/// its region mean).
Scene gen_checker_grid(const SceneSpec& spec);

Scene generate_scene(const SceneSpec& spec);

SceneSpec scene_spec_from_json(const std::string& text);
std::string scene_spec_to_json(const SceneSpec& spec);

/// Mean of a patch region per channel.
std::array<double, 3> probe_mean(const Image& img, const PatchRegion& region);

/// Cartesian sweep of exposure settings over the given lists, varying
/// (t, N, ISO) with everything else taken from base. Iteration order is
/// t-major, then N, then ISO.
std::vector<CameraSettings> sweep_settings(const CameraSettings& base,
                                           const std::vector<double>& exposure_times,
                                           const std::vector<double>& aperture_numbers,
                                           const std::vector<double>& isos);

}  // namespace diffcam
