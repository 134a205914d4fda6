// Copyright (c) 2026 The diffcam authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <utility>

#include "diffcam/image.hpp"
#include "diffcam/params.hpp"

namespace diffcam {

// --- PFM float images -------------------------------------------------------
//
// "PF" files are 3-channel radiance, "Pf" single-channel depth (or masks).
// PFM scanlines are stored bottom-up; load/save flip so that memory is always
// top-left row-major. The scale field's sign selects byte order (negative =
// little endian), its magnitude multiplies the samples.

/// Loads a PFM file; returns a 3-channel image for "PF" and a 1-channel image
/// for "Pf". Color files are validated as radiance (finite, >= 0), grayscale
/// files only for finiteness.
Image load_pfm(const std::string& path);

/// Writes a PFM file; channels() selects the "PF"/"Pf" header. Samples are
/// written bit-exactly as float32 with scale -1 (+1 when big_endian).
void save_pfm(const Image& img, const std::string& path, bool big_endian = false);

/// Mask round-trip through single-channel PFM: effective pixels are 1.0,
/// everything else 0.0; on load a sample > 0.5 is effective.
RoiMask load_roi(const std::string& path);
void save_roi(const RoiMask& roi, const std::string& path);

// --- 16-bit RAW container ----------------------------------------------------
//
// Layout: ASCII header "P6-16\n<width> <height>\n65535\n" followed by
// height*width*3 big-endian uint16 samples, row-major from the top-left,
// channels interleaved R,G,B.

void save_raw16(const RawImage16& img, const std::string& path);
RawImage16 load_raw16(const std::string& path);

/// True if the file starts with the RAW16 magic.
bool is_raw16_file(const std::string& path);

// --- Parameter files ---------------------------------------------------------
//
// Flat JSON object with one key per field; unknown keys are rejected, missing
// keys take the neutral defaults. Invariants are checked on load and the
// offending key is named in the error.

std::pair<CameraSettings, SensorModelParams> load_params(const std::string& path);
void save_params(const CameraSettings& settings, const SensorModelParams& params,
                 const std::string& path);

std::string params_to_json(const CameraSettings& settings, const SensorModelParams& params);
std::pair<CameraSettings, SensorModelParams> params_from_json(const std::string& text);

}  // namespace diffcam
