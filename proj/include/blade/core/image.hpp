#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "blade/core/error.hpp"

namespace blade {

enum class ColorSpace { SRGB, LAB, GRAY };

// H x W x C float image, row-major, channel-interleaved.
// SRGB values live in [0,1]; LAB carries L in [0,100], a/b around [-128,127];
// GRAY is single-channel with no fixed range (also used for probability maps).
struct ImageBuffer {
    int h = 0;
    int w = 0;
    int c = 0;
    ColorSpace space = ColorSpace::SRGB;
    std::string source_id;
    std::vector<float> data;

    ImageBuffer() = default;
    ImageBuffer(int height, int width, int channels, ColorSpace cs,
                std::string id = {})
        : h(height), w(width), c(channels), space(cs), source_id(std::move(id)),
          data(size_t(height) * width * channels, 0.0f) {
        if (height < 1 || width < 1 || (channels != 1 && channels != 3))
            throw ConfigError("ImageBuffer: invalid shape " + std::to_string(height) +
                              "x" + std::to_string(width) + "x" + std::to_string(channels));
        if (cs == ColorSpace::GRAY && channels != 1)
            throw ConfigError("ImageBuffer: GRAY images are single-channel");
    }

    bool empty() const { return data.empty(); }
    size_t pixel_count() const { return size_t(h) * w; }

    float& at(int row, int col, int ch = 0) {
        return data[(size_t(row) * w + col) * c + ch];
    }
    float at(int row, int col, int ch = 0) const {
        return data[(size_t(row) * w + col) * c + ch];
    }

    bool same_shape(const ImageBuffer& other) const {
        return h == other.h && w == other.w && c == other.c;
    }
};

// H x W boolean mask; 1 marks foreground (blade) pixels.
struct BinaryMask {
    int h = 0;
    int w = 0;
    std::vector<uint8_t> bits;

    BinaryMask() = default;
    BinaryMask(int height, int width, bool fill = false)
        : h(height), w(width), bits(size_t(height) * width, fill ? 1 : 0) {}

    bool empty() const { return bits.empty(); }

    uint8_t& at(int row, int col) { return bits[size_t(row) * w + col]; }
    uint8_t at(int row, int col) const { return bits[size_t(row) * w + col]; }

    bool same_shape(const BinaryMask& other) const {
        return h == other.h && w == other.w;
    }

    size_t count() const {
        size_t n = 0;
        for (uint8_t b : bits) n += (b != 0);
        return n;
    }

    bool operator==(const BinaryMask& other) const {
        if (!same_shape(other)) return false;
        for (size_t i = 0; i < bits.size(); ++i)
            if ((bits[i] != 0) != (other.bits[i] != 0)) return false;
        return true;
    }
};

// Pixel-aligned box, inclusive-exclusive: x in [x0,x1), y in [y0,y1).
struct BoundingBox {
    int x0 = 0, y0 = 0, x1 = 0, y1 = 0;

    int width() const { return x1 - x0; }
    int height() const { return y1 - y0; }
    long long area() const { return (long long)width() * height(); }

    bool valid_within(int img_w, int img_h) const {
        return 0 <= x0 && x0 < x1 && x1 <= img_w && 0 <= y0 && y0 < y1 && y1 <= img_h;
    }

    BoundingBox expanded(int margin, int img_w, int img_h) const {
        BoundingBox b;
        b.x0 = x0 - margin < 0 ? 0 : x0 - margin;
        b.y0 = y0 - margin < 0 ? 0 : y0 - margin;
        b.x1 = x1 + margin > img_w ? img_w : x1 + margin;
        b.y1 = y1 + margin > img_h ? img_h : y1 + margin;
        return b;
    }

    bool operator==(const BoundingBox& o) const {
        return x0 == o.x0 && y0 == o.y0 && x1 == o.x1 && y1 == o.y1;
    }
};

double box_iou(const BoundingBox& a, const BoundingBox& b);

// Tight bounding box around the mask's foreground. Empty mask -> zero box.
BoundingBox tight_bbox(const BinaryMask& mask);

}  // namespace blade
