#pragma once

#include <vector>

#include "blade/core/image.hpp"

namespace blade {

enum class Connectivity { Four = 4, Eight = 8 };

// bits[i,j] = raw[i,j] >= t. raw must be single-channel; t must lie in (0,1).
BinaryMask threshold_mask(const ImageBuffer& raw, double t);

struct ConnectedComponent {
    BinaryMask mask;  // full-frame mask of this component only
    BoundingBox box;
    int area = 0;
};

// Components of the foreground, sorted by area descending (stable on ties).
std::vector<ConnectedComponent> connected_components(
    const BinaryMask& mask, Connectivity conn = Connectivity::Eight);

// Intersection over union of two equal-shape masks; IoU(empty, empty) = 1.
double mask_iou(const BinaryMask& a, const BinaryMask& b);

// Fills background regions not reachable from the frame border (4-connected).
BinaryMask fill_holes(const BinaryMask& mask);

}  // namespace blade
