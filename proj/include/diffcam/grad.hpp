// Copyright (c) 2026 The diffcam authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "diffcam/pipeline.hpp"

namespace diffcam {

// Reverse-mode vector-Jacobian products with respect to the input radiance.
// Each vjp_* takes the cotangent of a layer's output and returns the
// cotangent of its input. Gradients are defined on the continuous
// (pre-quantization) output; rounding backpropagates straight-through.

Cotangent vjp_distort(const Cotangent& cot, const CameraSettings& settings,
                      const SensorModelParams& params);

Cotangent vjp_vignette(const Cotangent& cot, const CameraSettings& settings,
                       const SensorModelParams& params);

Cotangent vjp_blur(const Cotangent& cot, const BlurWeightMatrix& weights);

Cotangent vjp_aggregate(const Cotangent& cot, const CameraSettings& settings,
                        const SensorModelParams& params);

/// Needs the forward input (gamma and sigmoid derivatives depend on it).
Cotangent vjp_crf(const Cotangent& cot, const EnergyImage& forward_input,
                  const CameraSettings& settings, const SensorModelParams& params);

/// Composes the enabled layers' VJPs in reverse order. The noise layer is a
/// fixed additive sample, so its gradient passes through unchanged; values
/// quantization clamped out of [0, 65535] get zero gradient.
Cotangent vjp_pipeline(const Cotangent& cot, const ForwardState& state);

struct GradCheckRecord {
    std::string layer;
    int trials = 0;
    double max_rel_err = 0.0;
    bool pass = false;
};

/// Central-difference check of each named layer's VJP on random inputs,
/// with per-element step h = 1e-6 * max(1, |x|) at 64-bit. Layer names:
/// distort, vignette, blur, aggregate, crf_linear, crf_gamma, crf_sigmoid,
/// pipeline. An empty selector checks all of them.
std::vector<GradCheckRecord> gradcheck(const std::vector<std::string>& layers,
                                       int trials, double tolerance,
                                       uint64_t seed = 2024);

std::vector<std::string> gradcheck_layer_names();

/// One JSON record per layer: {layer, trials, max_rel_err, pass}.
std::string gradcheck_report_json(const std::vector<GradCheckRecord>& records);

}  // namespace diffcam
