// Copyright (c) 2026 The diffcam authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "diffcam/image.hpp"
#include "diffcam/params.hpp"

namespace diffcam {

/// Horizontal field of view in radians: 2 * atan(sensor_width / (2 f)).
double compute_fov(const CameraSettings& settings);

/// Radial polynomial lens distortion. Each output pixel gathers from the
/// input at radius r * (1 + k1 r^2 + k2 r^4 + k3 r^6) in image-plane
/// coordinates normalized by the focal length, with bilinear interpolation;
/// taps outside the grid contribute zero.
Image distort(const Image& img, const CameraSettings& settings,
              const SensorModelParams& params);

/// cos^4 falloff: y = x * (1 - G * (1 - cos^4 theta)), where theta is the
/// ray angle of the pixel's own grid coordinates. Never brightens.
Image vignette(const Image& img, const CameraSettings& settings,
               const SensorModelParams& params);

/// Thin-lens circle-of-confusion diameter per pixel, in pixel units:
/// D = G * f^2 * |d - U| / (N * C * d * (U - f)).
/// When a mask is given, diameters are computed (and depth validated) only
/// for effective pixels; others are 0. Depth <= f inside the mask is an
/// error since the thin-lens term degenerates.
BlurDiameterMap blur_diameters(const DepthMap& depth, const CameraSettings& settings,
                               const SensorModelParams& params,
                               const RoiMask* roi = nullptr);

/// Sparse spatially-varying Gaussian scatter operator over pixel space.
/// Row s holds the weights source pixel s contributes to its window of
/// target pixels; rows sum to 1 (after border clipping and renormalization).
/// The transpose shares the same storage, which is exactly the backward pass.
class BlurWeightMatrix {
  public:
    BlurWeightMatrix() = default;

    int height() const { return height_; }
    int width() const { return width_; }
    int64_t pixel_count() const { return static_cast<int64_t>(height_) * width_; }
    size_t nonzeros() const { return csr_weights_.size(); }

    /// y_t = sum_s w_{s->t} x_s per channel, evaluated as a deterministic
    /// gather over the target-keyed layout.
    Image apply(const Image& img) const;

    /// xbar_s = sum_t w_{s->t} ybar_t per channel (the adjoint).
    Image apply_transpose(const Image& img) const;

    double row_sum(int64_t source) const;
    int64_t row_nonzeros(int64_t source) const;

    /// Dense (pixels x pixels) copy, entry [t][s] = w_{s->t}. Test-sized
    /// images only.
    std::vector<std::vector<double>> to_dense() const;

    friend BlurWeightMatrix build_blur_weights(const BlurDiameterMap&, bool);

  private:
    int height_ = 0;
    int width_ = 0;
    // source-keyed rows (scatter form)
    std::vector<int64_t> csr_offsets_;
    std::vector<uint32_t> csr_targets_;
    std::vector<double> csr_weights_;
    // target-keyed columns (gather form), built by a stable counting sort
    std::vector<int64_t> csc_offsets_;
    std::vector<uint32_t> csc_sources_;
    std::vector<double> csc_weights_;
};

/// Builds the blur operator from a diameter map. Sources with D < 1 px pass
/// through unchanged. Otherwise the kernel is a Gaussian with sigma = D/6
/// over a square window of half-width round(D/2), clipped at the borders.
/// With renormalize (the default) each row is rescaled to sum to 1; the raw
/// mode keeps the continuous normalizer 1/(2 pi sigma^2) and loses the
/// truncated tail mass.
BlurWeightMatrix build_blur_weights(const BlurDiameterMap& diam, bool renormalize = true);

/// y = W x. Dimension mismatch is an error.
Image apply_blur(const Image& img, const BlurWeightMatrix& weights);

/// Irradiance to accumulated energy: y = qe_ch * x * L_scene * C^2/N^2 * t.
EnergyImage aggregate(const Image& img, const CameraSettings& settings,
                      const SensorModelParams& params);

/// Poisson-Gaussian sensor noise with dark current:
///   mu = x + D_dark * t,
///   Y  = mu + N(0, G_noise^2 * max(mu, 0)) + N(0, read_sigma^2).
/// Samples are keyed on (seed, pixel, channel) so any thread count yields
/// the same image.
EnergyImage add_noise(const EnergyImage& img, const CameraSettings& settings,
                      const SensorModelParams& params, uint64_t seed);

/// Continuous (pre-quantization) digital values for the configured response
/// curve. Linear: a*ISO*x + b. Gamma: (a*ISO*x)^gamma. Sigmoid:
/// 65535 / (1 + exp(-a*log2(ISO*x) - b)). Nonpositive arguments of log/pow
/// are clamped to kCrfEpsilon.
Image crf_continuous(const EnergyImage& img, const CameraSettings& settings,
                     const SensorModelParams& params);

inline constexpr double kCrfEpsilon = 1e-12;

/// Clamp to [0, 65535], then round half to even.
RawImage16 quantize16(const Image& dv);

/// crf_continuous followed by quantize16.
RawImage16 apply_crf(const EnergyImage& img, const CameraSettings& settings,
                     const SensorModelParams& params);

enum class Precision { Float32, Float64 };

/// Everything the backward pass needs from a forward run.
struct ForwardState {
    CameraSettings settings;
    SensorModelParams params;
    LayerToggles toggles;
    bool has_roi = false;
    RoiMask roi;
    std::shared_ptr<const BlurWeightMatrix> blur;  // set when defocus ran
    EnergyImage crf_input;                         // set when crf ran
    Image continuous_dv;                           // pre-quantization output
};

struct RenderResult {
    RawImage16 raw;
    Image continuous_dv;
    std::shared_ptr<ForwardState> state;  // null unless keep_state
};

/// Full forward model in layer order distortion -> vignetting -> defocus ->
/// aggregator -> noise -> CRF. Non-effective pixels are zeroed ahead of the
/// blur stage whenever a mask is supplied. With aggregator and crf both off
/// and the fallback toggle on, output is scaled by exposure_time / 0.256 s.
/// Float32 precision rounds each layer's output through float storage.
RenderResult run_pipeline(const RadianceImage& radiance, const DepthMap* depth,
                          const RoiMask* roi, const CameraSettings& settings,
                          const SensorModelParams& params, const LayerToggles& toggles,
                          uint64_t seed, Precision precision = Precision::Float64,
                          bool keep_state = false);

}  // namespace diffcam
