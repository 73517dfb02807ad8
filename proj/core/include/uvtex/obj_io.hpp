#pragma once

#include <string>

#include "uvtex/mesh.hpp"

namespace uvtex {

// ASCII OBJ loader for `v`, `vt`, `vn` and `f v/vt` or `f v/vt/vn` faces.
// Polygon faces are fan-triangulated. Faces without `vt` indices are
// rejected ("mesh lacks UV parameterization"); out-of-range indices raise a
// parse error carrying the line number. UV chart overlap is checked at
// texel-center resolution and reported through `uv_overlap_warning` (the
// mesh is still returned).
struct ObjLoadReport {
    int uv_overlap_texels = 0;
};

Mesh load_obj(const std::string& path, ObjLoadReport* report = nullptr);

void save_obj(const std::string& path, const Mesh& mesh);

} // namespace uvtex
