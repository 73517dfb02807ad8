#include "uvtex/obj_io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace uvtex {

namespace {

[[noreturn]] void parse_fail(const std::string& path, int line, const std::string& what) {
    throw std::runtime_error(path + ":" + std::to_string(line) + ": " + what);
}

// OBJ indices are 1-based; negative values are relative to the current count.
int resolve_index(long raw, std::size_t count, const std::string& path, int line) {
    if (raw == 0) parse_fail(path, line, "index 0 (OBJ indices are 1-based)");
    long idx = raw > 0 ? raw - 1 : static_cast<long>(count) + raw;
    if (idx < 0 || idx >= static_cast<long>(count))
        parse_fail(path, line, "index " + std::to_string(raw) + " out of range");
    return static_cast<int>(idx);
}

struct FaceCorner {
    int v = -1;
    int vt = -1;
    int vn = -1;
};

FaceCorner parse_corner(const std::string& token, std::size_t nv, std::size_t nvt,
                        std::size_t nvn, const std::string& path, int line) {
    FaceCorner c;
    long idx[3] = {0, 0, 0};
    bool present[3] = {false, false, false};
    int field = 0;
    std::size_t pos = 0;
    while (pos <= token.size() && field < 3) {
        const std::size_t next = token.find('/', pos);
        const std::string part =
            token.substr(pos, (next == std::string::npos ? token.size() : next) - pos);
        if (!part.empty()) {
            try {
                idx[field] = std::stol(part);
            } catch (const std::exception&) {
                parse_fail(path, line, "malformed face index '" + part + "'");
            }
            present[field] = true;
        }
        if (next == std::string::npos) break;
        pos = next + 1;
        ++field;
    }
    if (!present[0]) parse_fail(path, line, "face corner missing vertex index");
    if (!present[1]) parse_fail(path, line, "mesh lacks UV parameterization");
    c.v = resolve_index(idx[0], nv, path, line);
    c.vt = resolve_index(idx[1], nvt, path, line);
    if (present[2]) c.vn = resolve_index(idx[2], nvn, path, line);
    return c;
}

} // namespace

Mesh load_obj(const std::string& path, ObjLoadReport* report) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("load_obj: cannot open " + path);

    std::vector<Eigen::Vector3d> positions;
    std::vector<Eigen::Vector2d> texcoords;
    std::vector<Eigen::Vector3d> file_normals;
    Mesh mesh;
    bool any_normals = false;

    std::string line_text;
    int line = 0;
    while (std::getline(in, line_text)) {
        ++line;
        std::istringstream ss(line_text);
        std::string tag;
        if (!(ss >> tag) || tag.empty() || tag[0] == '#') continue;
        if (tag == "v") {
            Eigen::Vector3d p;
            if (!(ss >> p.x() >> p.y() >> p.z())) parse_fail(path, line, "malformed vertex");
            positions.push_back(p);
        } else if (tag == "vt") {
            Eigen::Vector2d t;
            if (!(ss >> t.x() >> t.y())) parse_fail(path, line, "malformed texcoord");
            texcoords.push_back(t);
        } else if (tag == "vn") {
            Eigen::Vector3d n;
            if (!(ss >> n.x() >> n.y() >> n.z())) parse_fail(path, line, "malformed normal");
            file_normals.push_back(n);
        } else if (tag == "f") {
            std::vector<FaceCorner> corners;
            std::string token;
            while (ss >> token)
                corners.push_back(parse_corner(token, positions.size(), texcoords.size(),
                                               file_normals.size(), path, line));
            if (corners.size() < 3) parse_fail(path, line, "face with fewer than 3 corners");
            for (std::size_t k = 2; k < corners.size(); ++k) {
                const FaceCorner tri[3] = {corners[0], corners[k - 1], corners[k]};
                std::array<int, 3> vidx;
                std::array<Eigen::Vector2d, 3> uvs;
                for (int j = 0; j < 3; ++j) {
                    vidx[j] = tri[j].v; // mesh vertices keep file order
                    uvs[j] = texcoords[tri[j].vt];
                    if (tri[j].vn >= 0) any_normals = true;
                }
                mesh.triangles.push_back(vidx);
                mesh.uv_corners.push_back(uvs);
            }
        }
        // other tags (o, g, s, usemtl, ...) are ignored
    }
    if (mesh.triangles.empty()) throw std::runtime_error("load_obj: no faces in " + path);

    mesh.vertices = std::move(positions);
    if (any_normals && file_normals.size() == mesh.vertices.size()) {
        // per-vertex normals only when the file pairs them 1:1 with vertices
        mesh.normals.resize(file_normals.size());
        for (std::size_t i = 0; i < file_normals.size(); ++i) {
            const double len = file_normals[i].norm();
            mesh.normals[i] =
                len > 0 ? Eigen::Vector3d(file_normals[i] / len) : Eigen::Vector3d(0, 0, 1);
        }
    }

    validate_mesh(mesh);
    const int overlaps = count_uv_overlaps(mesh, 256);
    if (report) report->uv_overlap_texels = overlaps;
    if (overlaps > 0)
        std::cerr << "load_obj: warning: UV charts overlap on " << overlaps
                  << " texel(s) at 256x256 in " << path << "\n";
    return mesh;
}

void save_obj(const std::string& path, const Mesh& mesh) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("save_obj: cannot open " + path);
    char buf[256];
    for (const auto& v : mesh.vertices) {
        std::snprintf(buf, sizeof(buf), "v %.17g %.17g %.17g\n", v.x(), v.y(), v.z());
        out << buf;
    }
    const bool has_normals = !mesh.normals.empty();
    for (const auto& n : mesh.normals) {
        std::snprintf(buf, sizeof(buf), "vn %.17g %.17g %.17g\n", n.x(), n.y(), n.z());
        out << buf;
    }
    // Texcoords are face-varying: deduplicate exact values to keep files small.
    std::map<std::pair<double, double>, int> uv_index;
    std::vector<std::array<int, 3>> face_uv(mesh.triangles.size());
    std::vector<Eigen::Vector2d> uv_list;
    for (std::size_t t = 0; t < mesh.triangles.size(); ++t) {
        for (int k = 0; k < 3; ++k) {
            const Eigen::Vector2d& uv = mesh.uv_corners[t][k];
            auto [it, inserted] =
                uv_index.try_emplace({uv.x(), uv.y()}, static_cast<int>(uv_list.size()));
            if (inserted) uv_list.push_back(uv);
            face_uv[t][k] = it->second;
        }
    }
    for (const auto& uv : uv_list) {
        std::snprintf(buf, sizeof(buf), "vt %.17g %.17g\n", uv.x(), uv.y());
        out << buf;
    }
    for (std::size_t t = 0; t < mesh.triangles.size(); ++t) {
        const auto& tri = mesh.triangles[t];
        out << "f";
        for (int k = 0; k < 3; ++k) {
            out << ' ' << tri[k] + 1 << '/' << face_uv[t][k] + 1;
            if (has_normals) out << '/' << tri[k] + 1;
        }
        out << '\n';
    }
    if (!out) throw std::runtime_error("save_obj: write failed for " + path);
}

} // namespace uvtex
