#include "blade/core/color.hpp"

#include <cmath>

namespace blade {

namespace {

// D65 reference white.
constexpr double kXn = 0.95047;
constexpr double kYn = 1.0;
constexpr double kZn = 1.08883;

double srgb_linearize(double c) {
    return c <= 0.04045 ? c / 12.92 : std::pow((c + 0.055) / 1.055, 2.4);
}

double srgb_delinearize(double c) {
    return c <= 0.0031308 ? 12.92 * c : 1.055 * std::pow(c, 1.0 / 2.4) - 0.055;
}

double lab_f(double t) {
    constexpr double delta3 = (6.0 / 29.0) * (6.0 / 29.0) * (6.0 / 29.0);
    constexpr double scale = (29.0 / 6.0) * (29.0 / 6.0) / 3.0;
    return t > delta3 ? std::cbrt(t) : scale * t + 4.0 / 29.0;
}

double lab_f_inv(double t) {
    constexpr double delta = 6.0 / 29.0;
    return t > delta ? t * t * t : 3.0 * delta * delta * (t - 4.0 / 29.0);
}

double clamp01(double v) { return v < 0.0 ? 0.0 : (v > 1.0 ? 1.0 : v); }

}  // namespace

void srgb_to_lab_pixel(double r, double g, double b, double& L, double& A, double& B) {
    double rl = srgb_linearize(r);
    double gl = srgb_linearize(g);
    double bl = srgb_linearize(b);
    double x = 0.4124564 * rl + 0.3575761 * gl + 0.1804375 * bl;
    double y = 0.2126729 * rl + 0.7151522 * gl + 0.0721750 * bl;
    double z = 0.0193339 * rl + 0.1191920 * gl + 0.9503041 * bl;
    double fx = lab_f(x / kXn);
    double fy = lab_f(y / kYn);
    double fz = lab_f(z / kZn);
    L = 116.0 * fy - 16.0;
    A = 500.0 * (fx - fy);
    B = 200.0 * (fy - fz);
}

void lab_to_srgb_pixel(double L, double A, double B, double& r, double& g, double& b) {
    double fy = (L + 16.0) / 116.0;
    double fx = fy + A / 500.0;
    double fz = fy - B / 200.0;
    double x = kXn * lab_f_inv(fx);
    double y = kYn * lab_f_inv(fy);
    double z = kZn * lab_f_inv(fz);
    double rl = 3.2404542 * x - 1.5371385 * y - 0.4985314 * z;
    double gl = -0.9692660 * x + 1.8760108 * y + 0.0415560 * z;
    double bl = 0.0556434 * x - 0.2040259 * y + 1.0572252 * z;
    r = clamp01(srgb_delinearize(rl));
    g = clamp01(srgb_delinearize(gl));
    b = clamp01(srgb_delinearize(bl));
}

ImageBuffer rgb_to_lab(const ImageBuffer& img) {
    if (img.space != ColorSpace::SRGB || img.c != 3)
        throw ConfigError("rgb_to_lab: input must be 3-channel SRGB");
    ImageBuffer out(img.h, img.w, 3, ColorSpace::LAB, img.source_id);
    for (int y = 0; y < img.h; ++y) {
        for (int x = 0; x < img.w; ++x) {
            double L, A, B;
            srgb_to_lab_pixel(img.at(y, x, 0), img.at(y, x, 1), img.at(y, x, 2), L, A, B);
            out.at(y, x, 0) = float(L);
            out.at(y, x, 1) = float(A);
            out.at(y, x, 2) = float(B);
        }
    }
    return out;
}

ImageBuffer lab_to_rgb(const ImageBuffer& img) {
    if (img.space != ColorSpace::LAB || img.c != 3)
        throw ConfigError("lab_to_rgb: input must be 3-channel LAB");
    ImageBuffer out(img.h, img.w, 3, ColorSpace::SRGB, img.source_id);
    for (int y = 0; y < img.h; ++y) {
        for (int x = 0; x < img.w; ++x) {
            double r, g, b;
            lab_to_srgb_pixel(img.at(y, x, 0), img.at(y, x, 1), img.at(y, x, 2), r, g, b);
            out.at(y, x, 0) = float(r);
            out.at(y, x, 1) = float(g);
            out.at(y, x, 2) = float(b);
        }
    }
    return out;
}

ImageBuffer to_gray(const ImageBuffer& img) {
    if (img.space == ColorSpace::GRAY) return img;
    if (img.space != ColorSpace::SRGB || img.c != 3)
        throw ConfigError("to_gray: input must be SRGB or GRAY");
    ImageBuffer out(img.h, img.w, 1, ColorSpace::GRAY, img.source_id);
    for (int y = 0; y < img.h; ++y)
        for (int x = 0; x < img.w; ++x)
            out.at(y, x) = float(0.299 * img.at(y, x, 0) + 0.587 * img.at(y, x, 1) +
                                 0.114 * img.at(y, x, 2));
    return out;
}

}  // namespace blade
