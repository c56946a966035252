#include "blade/core/io.hpp"

#include <opencv2/core.hpp>
#include <opencv2/imgcodecs.hpp>

#include <cmath>
#include <fstream>

#include "blade/core/error.hpp"

namespace blade {

namespace {

uint8_t to_u8(float v) {
    float s = v * 255.0f + 0.5f;
    if (s < 0.0f) s = 0.0f;
    if (s > 255.0f) s = 255.0f;
    return uint8_t(s);
}

}  // namespace

ImageBuffer read_image_png(const std::string& path) {
    cv::Mat m = cv::imread(path, cv::IMREAD_UNCHANGED);
    if (m.empty()) throw DataError("failed to read image: " + path);
    if (m.depth() != CV_8U) throw DataError("expected 8-bit image: " + path);

    std::string stem = path;
    auto slash = stem.find_last_of('/');
    if (slash != std::string::npos) stem = stem.substr(slash + 1);
    auto dot = stem.find_last_of('.');
    if (dot != std::string::npos) stem = stem.substr(0, dot);

    if (m.channels() == 1) {
        ImageBuffer img(m.rows, m.cols, 1, ColorSpace::GRAY, stem);
        for (int y = 0; y < m.rows; ++y)
            for (int x = 0; x < m.cols; ++x)
                img.at(y, x) = m.at<uint8_t>(y, x) / 255.0f;
        return img;
    }
    if (m.channels() != 3 && m.channels() != 4)
        throw DataError("unsupported channel count: " + path);
    const int ch = m.channels();
    ImageBuffer img(m.rows, m.cols, 3, ColorSpace::SRGB, stem);
    for (int y = 0; y < m.rows; ++y) {
        const uint8_t* row = m.ptr<uint8_t>(y);
        for (int x = 0; x < m.cols; ++x) {
            img.at(y, x, 0) = row[x * ch + 2] / 255.0f;  // BGR(A) -> RGB
            img.at(y, x, 1) = row[x * ch + 1] / 255.0f;
            img.at(y, x, 2) = row[x * ch + 0] / 255.0f;
        }
    }
    return img;
}

void write_image_png(const std::string& path, const ImageBuffer& img) {
    if (img.space == ColorSpace::LAB)
        throw ConfigError("write_image_png: convert LAB to SRGB first");
    cv::Mat m;
    if (img.c == 1) {
        m = cv::Mat(img.h, img.w, CV_8UC1);
        for (int y = 0; y < img.h; ++y)
            for (int x = 0; x < img.w; ++x)
                m.at<uint8_t>(y, x) = to_u8(img.at(y, x));
    } else {
        m = cv::Mat(img.h, img.w, CV_8UC3);
        for (int y = 0; y < img.h; ++y) {
            cv::Vec3b* row = m.ptr<cv::Vec3b>(y);
            for (int x = 0; x < img.w; ++x) {
                row[x][0] = to_u8(img.at(y, x, 2));
                row[x][1] = to_u8(img.at(y, x, 1));
                row[x][2] = to_u8(img.at(y, x, 0));
            }
        }
    }
    if (!cv::imwrite(path, m)) throw DataError("failed to write image: " + path);
}

BinaryMask read_mask_png(const std::string& path) {
    cv::Mat m = cv::imread(path, cv::IMREAD_GRAYSCALE);
    if (m.empty()) throw DataError("failed to read mask: " + path);
    BinaryMask mask(m.rows, m.cols);
    for (int y = 0; y < m.rows; ++y)
        for (int x = 0; x < m.cols; ++x)
            mask.at(y, x) = m.at<uint8_t>(y, x) >= 128 ? 1 : 0;
    return mask;
}

void write_mask_png(const std::string& path, const BinaryMask& mask) {
    cv::Mat m(mask.h, mask.w, CV_8UC1);
    for (int y = 0; y < mask.h; ++y)
        for (int x = 0; x < mask.w; ++x)
            m.at<uint8_t>(y, x) = mask.at(y, x) ? 255 : 0;
    if (!cv::imwrite(path, m)) throw DataError("failed to write mask: " + path);
}

void write_label_png(const std::string& path, const std::vector<int32_t>& labels,
                     int h, int w) {
    if (labels.size() != size_t(h) * w)
        throw ShapeError("write_label_png: label buffer does not match shape");
    cv::Mat m(h, w, CV_16UC1);
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            int32_t v = labels[size_t(y) * w + x];
            if (v < 0 || v > 65535)
                throw DataError("write_label_png: label out of 16-bit range");
            m.at<uint16_t>(y, x) = uint16_t(v);
        }
    }
    if (!cv::imwrite(path, m)) throw DataError("failed to write labels: " + path);
}

std::vector<int32_t> read_label_png(const std::string& path, int& h, int& w) {
    cv::Mat m = cv::imread(path, cv::IMREAD_UNCHANGED);
    if (m.empty()) throw DataError("failed to read labels: " + path);
    if (m.type() != CV_16UC1) throw DataError("expected 16-bit labels: " + path);
    h = m.rows;
    w = m.cols;
    std::vector<int32_t> labels(size_t(h) * w);
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x)
            labels[size_t(y) * w + x] = m.at<uint16_t>(y, x);
    return labels;
}

std::vector<uint8_t> read_file_bytes(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw DataError("failed to open: " + path);
    return std::vector<uint8_t>(std::istreambuf_iterator<char>(f),
                                std::istreambuf_iterator<char>());
}

void write_file_bytes(const std::string& path, const std::vector<uint8_t>& bytes) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw DataError("failed to open for write: " + path);
    f.write(reinterpret_cast<const char*>(bytes.data()), std::streamsize(bytes.size()));
}

}  // namespace blade
