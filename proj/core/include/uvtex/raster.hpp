#pragma once

#include <limits>
#include <vector>

#include "uvtex/camera.hpp"
#include "uvtex/mesh.hpp"

namespace uvtex {

// 2D barycentric coordinates via signed twice-areas:
//   w0 = (x2-x1)(y-y1) - (y2-y1)(x-x1)   (opposite corner 0)
//   w1 = (x0-x2)(y-y2) - (y0-y2)(x-x2)
//   w2 = (x1-x0)(y-y0) - (y1-y0)(x-x0)
//   area = (x1-x0)(y2-y0) - (y1-y0)(x2-x0),  b_i = w_i / area
// Degenerate triangles (area == 0) report valid = false.
struct Barycentric {
    double b0 = 0, b1 = 0, b2 = 0;
    bool valid = false;
    bool inside() const { return valid && b0 >= 0.0 && b1 >= 0.0 && b2 >= 0.0; }
};

Barycentric barycentric_2d(double x0, double y0, double x1, double y1, double x2, double y2,
                           double px, double py);

struct DepthBuffer {
    static constexpr int kNone = -1;

    int width = 0;
    int height = 0;
    std::vector<double> depth;    // camera-space z; +inf where empty
    std::vector<int> triangle;    // covering triangle index or kNone

    DepthBuffer() = default;
    DepthBuffer(int w, int h)
        : width(w), height(h),
          depth(static_cast<std::size_t>(w) * h, std::numeric_limits<double>::infinity()),
          triangle(static_cast<std::size_t>(w) * h, kNone) {}

    std::size_t index(int x, int y) const { return static_cast<std::size_t>(y) * width + x; }
};

// Z-buffer over pixel centers. Coverage is inclusive (all barycentrics >= 0
// in the projected 2D triangle); ties in coverage or depth go to the lowest
// triangle index. Triangles with any vertex at or behind the camera plane
// are skipped. Depth is perspective-correct camera-space z:
//   z = 1 / (b0/z0 + b1/z1 + b2/z2).
DepthBuffer rasterize_depth(const Mesh& mesh, const Camera& camera, int width, int height);

// Min/max of the finite depths; (0, 0) when the buffer is empty.
std::pair<double, double> depth_range(const DepthBuffer& buffer);

} // namespace uvtex
