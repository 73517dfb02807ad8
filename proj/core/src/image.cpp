#include "uvtex/image.hpp"

#include <algorithm>
#include <cmath>

namespace uvtex {

BilinearTap bilinear_tap(int width, int height, double x, double y) {
    const double gx = x - 0.5;
    const double gy = y - 0.5;
    double fx0 = std::floor(gx);
    double fy0 = std::floor(gy);
    double tx = gx - fx0;
    double ty = gy - fy0;

    int x0 = static_cast<int>(fx0);
    int y0 = static_cast<int>(fy0);
    int x1 = x0 + 1;
    int y1 = y0 + 1;

    // Clamp-to-edge: out-of-range taps collapse onto the boundary centers.
    if (x0 < 0) { x0 = 0; if (x1 < 0) x1 = 0; tx = (x1 == x0) ? 0.0 : tx; }
    if (y0 < 0) { y0 = 0; if (y1 < 0) y1 = 0; ty = (y1 == y0) ? 0.0 : ty; }
    if (x1 > width - 1) { x1 = width - 1; if (x0 > width - 1) { x0 = width - 1; tx = 0.0; } }
    if (y1 > height - 1) { y1 = height - 1; if (y0 > height - 1) { y0 = height - 1; ty = 0.0; } }
    tx = std::clamp(tx, 0.0, 1.0);
    ty = std::clamp(ty, 0.0, 1.0);

    BilinearTap t;
    t.x0 = x0; t.x1 = x1; t.y0 = y0; t.y1 = y1;
    t.w00 = (1.0 - ty) * (1.0 - tx);
    t.w01 = (1.0 - ty) * tx;
    t.w10 = ty * (1.0 - tx);
    t.w11 = ty * tx;
    return t;
}

std::array<double, 3> bilinear_sample(const Image& image, double x, double y) {
    const BilinearTap t = bilinear_tap(image.width, image.height, x, y);
    std::array<double, 3> out{};
    for (int c = 0; c < 3; ++c) {
        out[c] = t.w00 * image.at(t.x0, t.y0, c) + t.w01 * image.at(t.x1, t.y0, c) +
                 t.w10 * image.at(t.x0, t.y1, c) + t.w11 * image.at(t.x1, t.y1, c);
    }
    return out;
}

bool all_finite(const Image& image) {
    return std::all_of(image.data.begin(), image.data.end(),
                       [](float v) { return std::isfinite(v); });
}

} // namespace uvtex
