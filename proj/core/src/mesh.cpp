#include "uvtex/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "uvtex/raster.hpp"

namespace uvtex {

Bbox mesh_bbox(const Mesh& mesh) {
    if (mesh.vertices.empty()) throw std::runtime_error("mesh_bbox: empty mesh");
    Bbox b{mesh.vertices.front(), mesh.vertices.front()};
    for (const auto& v : mesh.vertices) {
        b.min = b.min.cwiseMin(v);
        b.max = b.max.cwiseMax(v);
    }
    return b;
}

void validate_mesh(const Mesh& mesh) {
    if (mesh.triangles.empty()) throw std::runtime_error("mesh: triangle list is empty");
    if (mesh.uv_corners.size() != mesh.triangles.size())
        throw std::runtime_error("mesh: uv_corners/triangles size mismatch");
    const int n = static_cast<int>(mesh.vertices.size());
    for (const auto& v : mesh.vertices)
        if (!v.allFinite()) throw std::runtime_error("mesh: non-finite vertex");
    for (std::size_t t = 0; t < mesh.triangles.size(); ++t) {
        for (int k = 0; k < 3; ++k) {
            const int idx = mesh.triangles[t][k];
            if (idx < 0 || idx >= n)
                throw std::runtime_error("mesh: vertex index out of range in triangle " +
                                         std::to_string(t));
            const Eigen::Vector2d& uv = mesh.uv_corners[t][k];
            if (!(uv.x() >= 0.0 && uv.x() <= 1.0 && uv.y() >= 0.0 && uv.y() <= 1.0))
                throw std::runtime_error("mesh: UV outside [0,1]^2 in triangle " +
                                         std::to_string(t));
        }
    }
    if (!mesh.normals.empty()) {
        if (mesh.normals.size() != mesh.vertices.size())
            throw std::runtime_error("mesh: normals/vertices size mismatch");
        for (const auto& nrm : mesh.normals)
            if (std::abs(nrm.norm() - 1.0) > 1e-6)
                throw std::runtime_error("mesh: stored normal is not unit length");
    }
}

int count_uv_overlaps(const Mesh& mesh, int resolution) {
    if (resolution <= 0) throw std::runtime_error("count_uv_overlaps: resolution must be > 0");
    // A texel center strictly interior to two triangles marks a genuine chart
    // overlap; centers on shared edges are settled by tie-break and ignored.
    constexpr double kInterior = 1e-9;
    int overlaps = 0;
    std::vector<int> owner(static_cast<std::size_t>(resolution) * resolution, -1);
    for (std::size_t t = 0; t < mesh.triangles.size(); ++t) {
        const auto& uv = mesh.uv_corners[t];
        const double xs[3] = {uv[0].x() * resolution, uv[1].x() * resolution,
                              uv[2].x() * resolution};
        const double ys[3] = {uv[0].y() * resolution, uv[1].y() * resolution,
                              uv[2].y() * resolution};
        int min_x = std::max(0, static_cast<int>(std::floor(std::min({xs[0], xs[1], xs[2]}))));
        int max_x = std::min(resolution - 1,
                             static_cast<int>(std::ceil(std::max({xs[0], xs[1], xs[2]}))));
        int min_y = std::max(0, static_cast<int>(std::floor(std::min({ys[0], ys[1], ys[2]}))));
        int max_y = std::min(resolution - 1,
                             static_cast<int>(std::ceil(std::max({ys[0], ys[1], ys[2]}))));
        for (int y = min_y; y <= max_y; ++y) {
            for (int x = min_x; x <= max_x; ++x) {
                const Barycentric b =
                    barycentric_2d(xs[0], ys[0], xs[1], ys[1], xs[2], ys[2], x + 0.5, y + 0.5);
                if (!b.valid || b.b0 <= kInterior || b.b1 <= kInterior || b.b2 <= kInterior)
                    continue;
                int& o = owner[static_cast<std::size_t>(y) * resolution + x];
                if (o >= 0 && o != static_cast<int>(t))
                    ++overlaps;
                else
                    o = static_cast<int>(t);
            }
        }
    }
    return overlaps;
}

std::vector<std::array<int, 2>> mesh_edges(const Mesh& mesh) {
    std::vector<std::array<int, 2>> edges;
    edges.reserve(mesh.triangles.size() * 3);
    for (const auto& t : mesh.triangles) {
        for (int k = 0; k < 3; ++k) {
            int a = t[k], b = t[(k + 1) % 3];
            if (a > b) std::swap(a, b);
            if (a != b) edges.push_back({a, b});
        }
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return edges;
}

bool edge_graph_connected(const Mesh& mesh) {
    const int n = static_cast<int>(mesh.vertices.size());
    if (n == 0) return false;
    std::vector<std::vector<int>> adj(n);
    for (const auto& e : mesh_edges(mesh)) {
        adj[e[0]].push_back(e[1]);
        adj[e[1]].push_back(e[0]);
    }
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int visited = 1;
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (int u : adj[v]) {
            if (!seen[u]) {
                seen[u] = 1;
                ++visited;
                stack.push_back(u);
            }
        }
    }
    return visited == n;
}

Eigen::Vector3d triangle_normal(const Mesh& mesh, int tri) {
    const auto& t = mesh.triangles[tri];
    const Eigen::Vector3d n = (mesh.vertices[t[1]] - mesh.vertices[t[0]])
                                  .cross(mesh.vertices[t[2]] - mesh.vertices[t[0]]);
    const double len = n.norm();
    return len > 0 ? Eigen::Vector3d(n / len) : Eigen::Vector3d::Zero();
}

std::vector<Eigen::Vector3d> vertex_normals(const Mesh& mesh) {
    std::vector<Eigen::Vector3d> normals(mesh.vertices.size(), Eigen::Vector3d::Zero());
    for (const auto& t : mesh.triangles) {
        // cross product length is twice the area, which provides the weighting
        const Eigen::Vector3d n = (mesh.vertices[t[1]] - mesh.vertices[t[0]])
                                      .cross(mesh.vertices[t[2]] - mesh.vertices[t[0]]);
        for (int k = 0; k < 3; ++k) normals[t[k]] += n;
    }
    for (auto& n : normals) {
        const double len = n.norm();
        if (len > 0) n /= len;
    }
    return normals;
}

} // namespace uvtex
