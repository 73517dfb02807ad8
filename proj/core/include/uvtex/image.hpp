#pragma once

#include <array>
#include <cstddef>
#include <vector>

namespace uvtex {

// RGB raster with float32 storage. Values are nominally in [0, 1] but
// intermediate math may leave that range; clamping happens only on PNG
// export. Pixel centers sit at (x + 0.5, y + 0.5); row 0 is the top
// scanline.
struct Image {
    int width = 0;
    int height = 0;
    std::vector<float> data; // interleaved RGB, row-major

    Image() = default;
    Image(int w, int h, float fill = 0.0f)
        : width(w), height(h), data(static_cast<std::size_t>(w) * h * 3, fill) {}

    float& at(int x, int y, int c) {
        return data[(static_cast<std::size_t>(y) * width + x) * 3 + c];
    }
    float at(int x, int y, int c) const {
        return data[(static_cast<std::size_t>(y) * width + x) * 3 + c];
    }

    std::size_t pixel_count() const { return static_cast<std::size_t>(width) * height; }
};

// Bilinear interpolation of the 4 nearest pixel centers, clamp-to-edge
// addressing. Coordinates are in pixels; (0.5, 0.5) is the first center.
std::array<double, 3> bilinear_sample(const Image& image, double x, double y);

// Weight/index footprint of one bilinear tap, shared by the forward sample
// and its adjoint scatter.
struct BilinearTap {
    int x0, x1, y0, y1;
    double w00, w01, w10, w11; // (y, x) order: w01 pairs with (y0, x1)
};
BilinearTap bilinear_tap(int width, int height, double x, double y);

bool all_finite(const Image& image);

} // namespace uvtex
