#include "blade/core/mask_ops.hpp"

#include <algorithm>
#include <limits>

namespace blade {

BoundingBox tight_bbox(const BinaryMask& mask) {
    BoundingBox b;
    int min_x = std::numeric_limits<int>::max(), min_y = min_x;
    int max_x = -1, max_y = -1;
    for (int y = 0; y < mask.h; ++y) {
        for (int x = 0; x < mask.w; ++x) {
            if (!mask.at(y, x)) continue;
            min_x = std::min(min_x, x);
            min_y = std::min(min_y, y);
            max_x = std::max(max_x, x);
            max_y = std::max(max_y, y);
        }
    }
    if (max_x < 0) return b;
    b.x0 = min_x;
    b.y0 = min_y;
    b.x1 = max_x + 1;
    b.y1 = max_y + 1;
    return b;
}

double box_iou(const BoundingBox& a, const BoundingBox& b) {
    long long ix0 = std::max(a.x0, b.x0), iy0 = std::max(a.y0, b.y0);
    long long ix1 = std::min(a.x1, b.x1), iy1 = std::min(a.y1, b.y1);
    long long iw = ix1 - ix0, ih = iy1 - iy0;
    long long inter = (iw > 0 && ih > 0) ? iw * ih : 0;
    long long uni = a.area() + b.area() - inter;
    if (uni == 0) return 1.0;
    return double(inter) / double(uni);
}

BinaryMask threshold_mask(const ImageBuffer& raw, double t) {
    if (raw.c != 1) throw ShapeError("threshold_mask: raw map must be single-channel");
    if (!(t > 0.0 && t < 1.0))
        throw ConfigError("threshold_mask: threshold must lie in (0,1)");
    BinaryMask out(raw.h, raw.w);
    for (int y = 0; y < raw.h; ++y)
        for (int x = 0; x < raw.w; ++x)
            out.at(y, x) = raw.at(y, x) >= float(t) ? 1 : 0;
    return out;
}

std::vector<ConnectedComponent> connected_components(const BinaryMask& mask,
                                                     Connectivity conn) {
    const int h = mask.h, w = mask.w;
    std::vector<int32_t> label(size_t(h) * w, -1);
    std::vector<ConnectedComponent> comps;
    std::vector<int> stack;

    const int dx8[] = {1, -1, 0, 0, 1, 1, -1, -1};
    const int dy8[] = {0, 0, 1, -1, 1, -1, 1, -1};
    const int n_dirs = conn == Connectivity::Four ? 4 : 8;

    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            if (!mask.at(y, x) || label[size_t(y) * w + x] >= 0) continue;
            int32_t id = int32_t(comps.size());
            ConnectedComponent cc;
            cc.mask = BinaryMask(h, w);
            int min_x = x, max_x = x, min_y = y, max_y = y;
            stack.push_back(y * w + x);
            label[size_t(y) * w + x] = id;
            while (!stack.empty()) {
                int p = stack.back();
                stack.pop_back();
                int py = p / w, px = p % w;
                cc.mask.bits[p] = 1;
                ++cc.area;
                min_x = std::min(min_x, px);
                max_x = std::max(max_x, px);
                min_y = std::min(min_y, py);
                max_y = std::max(max_y, py);
                for (int d = 0; d < n_dirs; ++d) {
                    int nx = px + dx8[d], ny = py + dy8[d];
                    if (nx < 0 || ny < 0 || nx >= w || ny >= h) continue;
                    size_t q = size_t(ny) * w + nx;
                    if (!mask.bits[q] || label[q] >= 0) continue;
                    label[q] = id;
                    stack.push_back(int(q));
                }
            }
            cc.box = BoundingBox{min_x, min_y, max_x + 1, max_y + 1};
            comps.push_back(std::move(cc));
        }
    }
    std::stable_sort(comps.begin(), comps.end(),
                     [](const ConnectedComponent& a, const ConnectedComponent& b) {
                         return a.area > b.area;
                     });
    return comps;
}

double mask_iou(const BinaryMask& a, const BinaryMask& b) {
    if (!a.same_shape(b)) throw ShapeError("mask_iou: shape mismatch");
    size_t inter = 0, uni = 0;
    for (size_t i = 0; i < a.bits.size(); ++i) {
        bool pa = a.bits[i] != 0, pb = b.bits[i] != 0;
        inter += (pa && pb);
        uni += (pa || pb);
    }
    if (uni == 0) return 1.0;
    return double(inter) / double(uni);
}

BinaryMask fill_holes(const BinaryMask& mask) {
    const int h = mask.h, w = mask.w;
    // Flood the background from the border; anything unreached is a hole.
    std::vector<uint8_t> outside(size_t(h) * w, 0);
    std::vector<int> stack;
    auto push = [&](int y, int x) {
        size_t q = size_t(y) * w + x;
        if (!mask.bits[q] && !outside[q]) {
            outside[q] = 1;
            stack.push_back(int(q));
        }
    };
    for (int x = 0; x < w; ++x) {
        push(0, x);
        push(h - 1, x);
    }
    for (int y = 0; y < h; ++y) {
        push(y, 0);
        push(y, w - 1);
    }
    while (!stack.empty()) {
        int p = stack.back();
        stack.pop_back();
        int py = p / w, px = p % w;
        if (px > 0) push(py, px - 1);
        if (px < w - 1) push(py, px + 1);
        if (py > 0) push(py - 1, px);
        if (py < h - 1) push(py + 1, px);
    }
    BinaryMask out(h, w);
    for (size_t i = 0; i < out.bits.size(); ++i)
        out.bits[i] = (mask.bits[i] || !outside[i]) ? 1 : 0;
    return out;
}

}  // namespace blade
