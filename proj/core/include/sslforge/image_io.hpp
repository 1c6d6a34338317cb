// SPDX-FileCopyrightText: 2026 sslforge contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <vector>

#include "sslforge/image.hpp"

namespace sslforge {

/// Decode a PNG or JPEG file (sniffed by magic bytes) into 8-bit RGB.
/// Grayscale sources expand to three channels; alpha is dropped.
/// Throws IoError when the file cannot be opened, DecodeError when the
/// content is corrupt or an unsupported format.
ImageBuffer load_image(const std::filesystem::path& path);

/// Encode as 8-bit RGB PNG with no ancillary time/metadata chunks, so equal
/// buffers always produce identical file bytes. Throws IoError.
void save_image(const ImageBuffer& img, const std::filesystem::path& path);

/// In-memory PNG encode with the same deterministic settings as save_image.
std::vector<std::uint8_t> encode_png(const ImageBuffer& img);

}  // namespace sslforge
