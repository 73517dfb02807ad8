#pragma once

#include <Eigen/Core>

#include <array>
#include <string>
#include <vector>

namespace uvtex {

// Triangle mesh with per-corner UV coordinates (face-varying, so chart seams
// need no vertex duplication). Triangles index into `vertices`; UV corners
// are stored per triangle in corner order.
struct Mesh {
    std::vector<Eigen::Vector3d> vertices;
    std::vector<std::array<int, 3>> triangles;
    std::vector<std::array<Eigen::Vector2d, 3>> uv_corners;
    std::vector<Eigen::Vector3d> normals; // per-vertex, optional (may be empty)

    std::size_t vertex_count() const { return vertices.size(); }
    std::size_t triangle_count() const { return triangles.size(); }
};

struct Bbox {
    Eigen::Vector3d min;
    Eigen::Vector3d max;
    Eigen::Vector3d center() const { return 0.5 * (min + max); }
    double diagonal() const { return (max - min).norm(); }
};

Bbox mesh_bbox(const Mesh& mesh);

// Throws on violated invariants: empty triangle list, out-of-range indices,
// UVs outside [0,1]^2, non-finite vertices, non-unit stored normals.
void validate_mesh(const Mesh& mesh);

// Counts texels of an S x S grid whose center lies strictly inside more than
// one UV triangle. Non-zero means the chart layout overlaps; callers report
// it as a warning, since projection still resolves each texel by tie-break.
int count_uv_overlaps(const Mesh& mesh, int resolution);

// Unique undirected edges (i < j), sorted lexicographically.
std::vector<std::array<int, 2>> mesh_edges(const Mesh& mesh);

bool edge_graph_connected(const Mesh& mesh);

// Area-weighted vertex normals of the current vertex positions.
std::vector<Eigen::Vector3d> vertex_normals(const Mesh& mesh);

Eigen::Vector3d triangle_normal(const Mesh& mesh, int tri);

} // namespace uvtex
