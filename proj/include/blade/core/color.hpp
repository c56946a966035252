#pragma once

#include "blade/core/image.hpp"

namespace blade {

// sRGB (D65) <-> CIELAB conversions, done per pixel in double precision.
// L is in [0,100], a/b roughly in [-128,127].
void srgb_to_lab_pixel(double r, double g, double b, double& L, double& A, double& B);
void lab_to_srgb_pixel(double L, double A, double B, double& r, double& g, double& b);

// 3-channel SRGB image -> LAB image of the same shape.
// Throws ConfigError on any other color space.
ImageBuffer rgb_to_lab(const ImageBuffer& img);

// Inverse conversion; out-of-gamut values are clamped to [0,1].
ImageBuffer lab_to_rgb(const ImageBuffer& img);

// Rec.601 luma of an SRGB image (or a copy of a GRAY one). Result is GRAY.
ImageBuffer to_gray(const ImageBuffer& img);

}  // namespace blade
