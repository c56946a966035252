#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "blade/core/image.hpp"

namespace blade {

// PNG-backed image IO. All readers throw DataError when a file is missing or
// fails to decode.

// 8-bit PNG -> SRGB (3ch) or GRAY (1ch) float image in [0,1].
ImageBuffer read_image_png(const std::string& path);

// SRGB/GRAY float image in [0,1] -> 8-bit PNG.
void write_image_png(const std::string& path, const ImageBuffer& img);

// Mask convention: single-channel 8-bit PNG, 0 = background, 255 = foreground.
BinaryMask read_mask_png(const std::string& path);
void write_mask_png(const std::string& path, const BinaryMask& mask);

// Label maps: single-channel 16-bit PNG.
void write_label_png(const std::string& path, const std::vector<int32_t>& labels,
                     int h, int w);
std::vector<int32_t> read_label_png(const std::string& path, int& h, int& w);

std::vector<uint8_t> read_file_bytes(const std::string& path);
void write_file_bytes(const std::string& path, const std::vector<uint8_t>& bytes);

}  // namespace blade
