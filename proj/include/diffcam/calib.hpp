// Copyright (c) 2026 The diffcam authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "diffcam/image.hpp"
#include "diffcam/params.hpp"

namespace diffcam {

struct RegressionResult {
    std::vector<double> coefficients;
    double residual_sum_squares = 0.0;
    size_t sample_count = 0;
    bool degenerate = false;  // rank-deficient design; undetermined coefficients are 0
    std::string note;
};

/// Least squares slope of y = m x through the origin: m = sum(xy) / sum(x^2).
double zero_intercept_regress(std::span<const double> xs, std::span<const double> ys,
                              RegressionResult* fit = nullptr);

// --- Vignetting --------------------------------------------------------------

struct VignettingCalibration {
    double gain = 0.0;  // clamped into [0, 1]
    RegressionResult fit;
};

/// Recovers the falloff gain from flat-field digital-value images. The stack
/// is averaged, the unvignetted reference is the mean over a central disc of
/// radius 5% of min(h, w), and (1 - y/x) is regressed on (1 - cos^4 theta)
/// with zero intercept.
VignettingCalibration calibrate_vignetting(const std::vector<Image>& flat_fields,
                                           const CameraSettings& settings);

// --- Defocus blur ------------------------------------------------------------

/// Averaged, normalized, 50%-aligned edge profile. Positions are millimeters
/// on the target plane with the 50% crossing at zero.
struct StepResponse {
    std::vector<double> positions_mm;
    std::vector<double> values;
};

struct ScanGeometry {
    double mm_per_pixel = 1.0;
};

/// Object-plane footprint of one pixel for a target at depth d:
/// C * (d - f) / f, in millimeters.
ScanGeometry scan_geometry_for(const CameraSettings& settings, double depth_m);

struct DroppingLength {
    double length_mm = 0.0;
    StepResponse response;
};

/// The 90%-to-10% transition distance of a horizontal edge profile. Rows are
/// min/max normalized, aligned at their 50% crossing, averaged, and the two
/// crossings are located with linear interpolation between samples.
DroppingLength dropping_length(const Image& edge_image, const ScanGeometry& geometry);

struct DefocusCondition {
    double depth_m = 0.0;
    double focus_m = 0.0;
};

/// Renders a synthetic edge image at the given defocus gain and condition.
using EdgeRenderFn = std::function<Image(double defocus_gain, const DefocusCondition&)>;

struct DefocusCalibration {
    double gain = 1.0;
    int iterations = 0;
    std::vector<double> history;  // gain after each update
};

/// Iterative ratio fit: starting from G = 1, each round multiplies G by the
/// mean of real/synthetic dropping-length ratios over all conditions. Runs
/// max_iterations rounds (default 3) with an early stop once the relative
/// change falls below rel_tol.
DefocusCalibration calibrate_defocus(const std::vector<DefocusCondition>& conditions,
                                     const EdgeRenderFn& render,
                                     const std::vector<double>& real_lengths_mm,
                                     const ScanGeometry* geometry = nullptr,
                                     int max_iterations = 3, double rel_tol = 0.01);

// --- Exposure ----------------------------------------------------------------

struct ExposureProbe {
    double aperture_number = 1.0;
    double exposure_time = 1.0;
    double iso = 1.0;
    int channel = 0;  // 0 = R, 1 = G, 2 = B
    double real_dv = 0.0;
    double synth_dv = 0.0;
    double radiance = 0.0;  // probe radiance R
    double k = 1.0;         // dataset constant K
};

struct ExposureCalibration {
    std::array<double, 3> aggregator_qe = {0, 0, 0};
    double dark_current = 0.0;
    std::array<double, 3> bias = {0, 0, 0};
    std::array<RegressionResult, 3> fits;
};

/// Per-channel regression of real DV on [ISO*t*K*R/N^2, ISO*t, 1]; the probe
/// synth_dv fields are re-rendered from the fitted linear model after each
/// of up to `rounds` passes. The shared dark current is the mean of the
/// per-channel estimates.
ExposureCalibration calibrate_exposure(std::vector<ExposureProbe>& probes, int rounds = 3);

// --- Noise -------------------------------------------------------------------

struct NoiseCalibSample {
    double mean_dv = 0.0;
    double var_dv = 0.0;
    double iso = 1.0;
    double bias = 0.0;
};

struct NoiseCalibration {
    double noise_gain = 0.0;
    double read_sigma = 0.0;
    bool clamped = false;  // a negative fitted slope or intercept was clamped to 0
    RegressionResult fit;
};

/// Regresses V[I]/ISO^2 on (E[I]-b)/ISO; the slope is G_noise^2 and the
/// intercept read_sigma^2. Needs at least two samples with distinct means.
NoiseCalibration calibrate_noise(const std::vector<NoiseCalibSample>& samples);

// --- Gamma -------------------------------------------------------------------

enum class ExposureFactor { ExposureTime, Iso, Aperture };

/// One probe's digital values along a sweep where consecutive steps double
/// the exposure through a single factor.
struct GammaSweep {
    ExposureFactor factor = ExposureFactor::ExposureTime;
    int channel = 0;
    std::vector<double> dvs;
};

struct GammaEstimate {
    double gamma = 0.0;       // grand mean rounded to one decimal
    double mean_slope = 0.0;  // unrounded
    size_t slope_count = 0;
};

/// Slope statistics of log2(DV) per doubling step. Saturated probes
/// (DV > 95% of full scale) are dropped, aperture sweeps are excluded from
/// the average, slopes are histogrammed at 0.05 width over [0, 3), the first
/// bin is discarded, and the two most frequent bins are averaged per
/// (factor, channel) group before the grand mean.
GammaEstimate estimate_gamma(const std::vector<GammaSweep>& sweeps);

}  // namespace diffcam
