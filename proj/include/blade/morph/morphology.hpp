#pragma once

#include <cstdint>
#include <vector>

#include "blade/core/image.hpp"

namespace blade::morph {

// Flat binary structuring element with an anchor. The anchor bit must be set.
struct StructuringElement {
    int h = 0;
    int w = 0;
    int anchor_r = 0;
    int anchor_c = 0;
    std::vector<uint8_t> bits;

    uint8_t at(int r, int c) const { return bits[size_t(r) * w + c]; }

    // Axis-aligned box of ones, anchored at the center cell.
    static StructuringElement box(int height, int width);
    // Disk of the given radius (includes cells with dx^2+dy^2 <= r^2).
    static StructuringElement disk(int radius);

    // 180-degree rotation about the anchor.
    StructuringElement reflected() const;

    void validate() const;
};

// Erosion with background (false) padding: output true at z iff the element
// translated to z fits entirely inside the foreground.
BinaryMask erode(const BinaryMask& m, const StructuringElement& s);

// Dilation: output true at z iff the reflected element at z hits the foreground.
BinaryMask dilate(const BinaryMask& m, const StructuringElement& s);

// Opening: erosion followed by dilation with the same element.
BinaryMask open(const BinaryMask& m, const StructuringElement& s);

}  // namespace blade::morph
