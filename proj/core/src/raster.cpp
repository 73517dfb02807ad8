#include "uvtex/raster.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace uvtex {

Barycentric barycentric_2d(double x0, double y0, double x1, double y1, double x2, double y2,
                           double px, double py) {
    Barycentric b;
    const double area = (x1 - x0) * (y2 - y0) - (y1 - y0) * (x2 - x0);
    if (area == 0.0) return b;
    const double w0 = (x2 - x1) * (py - y1) - (y2 - y1) * (px - x1);
    const double w1 = (x0 - x2) * (py - y2) - (y0 - y2) * (px - x2);
    const double w2 = (x1 - x0) * (py - y0) - (y1 - y0) * (px - x0);
    b.b0 = w0 / area;
    b.b1 = w1 / area;
    b.b2 = w2 / area;
    b.valid = true;
    return b;
}

DepthBuffer rasterize_depth(const Mesh& mesh, const Camera& camera, int width, int height) {
    if (width <= 0 || height <= 0)
        throw std::runtime_error("rasterize_depth: zero-size buffer");

    std::vector<Projection> proj(mesh.vertices.size());
    for (std::size_t i = 0; i < mesh.vertices.size(); ++i)
        proj[i] = project_point(camera, mesh.vertices[i]);

    DepthBuffer buf(width, height);
    for (std::size_t t = 0; t < mesh.triangles.size(); ++t) {
        const auto& tri = mesh.triangles[t];
        const Projection& p0 = proj[tri[0]];
        const Projection& p1 = proj[tri[1]];
        const Projection& p2 = proj[tri[2]];
        if (!p0.in_front || !p1.in_front || !p2.in_front) continue;

        const double min_x = std::min({p0.u, p1.u, p2.u});
        const double max_x = std::max({p0.u, p1.u, p2.u});
        const double min_y = std::min({p0.v, p1.v, p2.v});
        const double max_y = std::max({p0.v, p1.v, p2.v});
        const int x_begin = std::max(0, static_cast<int>(std::floor(min_x - 0.5)));
        const int x_end = std::min(width - 1, static_cast<int>(std::ceil(max_x)));
        const int y_begin = std::max(0, static_cast<int>(std::floor(min_y - 0.5)));
        const int y_end = std::min(height - 1, static_cast<int>(std::ceil(max_y)));

        for (int y = y_begin; y <= y_end; ++y) {
            for (int x = x_begin; x <= x_end; ++x) {
                const Barycentric b = barycentric_2d(p0.u, p0.v, p1.u, p1.v, p2.u, p2.v,
                                                     x + 0.5, y + 0.5);
                if (!b.inside()) continue;
                const double z =
                    1.0 / (b.b0 / p0.depth + b.b1 / p1.depth + b.b2 / p2.depth);
                const std::size_t i = buf.index(x, y);
                if (z < buf.depth[i]) { // strict: equal depth keeps the earlier index
                    buf.depth[i] = z;
                    buf.triangle[i] = static_cast<int>(t);
                }
            }
        }
    }
    return buf;
}

std::pair<double, double> depth_range(const DepthBuffer& buffer) {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < buffer.depth.size(); ++i) {
        if (buffer.triangle[i] == DepthBuffer::kNone) continue;
        lo = std::min(lo, buffer.depth[i]);
        hi = std::max(hi, buffer.depth[i]);
    }
    if (!(hi >= lo)) return {0.0, 0.0};
    return {lo, hi};
}

} // namespace uvtex
