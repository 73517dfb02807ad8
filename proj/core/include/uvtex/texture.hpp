#pragma once

#include <array>
#include <string>
#include <vector>

#include "uvtex/png_io.hpp"

namespace uvtex {

// Square RGB texel grid with a per-texel validity weight in [0, 1]
// (1 = observed). RGB is float32 and may leave [0, 1] between stages;
// clamping happens only on PNG export. Texel (ix, iy) has UV center
// ((ix + 0.5)/S, (iy + 0.5)/S), v growing with the row index.
struct TextureMap {
    int size = 0;
    std::vector<float> rgb;  // interleaved, row-major
    std::vector<float> mask;

    TextureMap() = default;
    explicit TextureMap(int s, float fill = 0.0f, float mask_fill = 0.0f)
        : size(s), rgb(static_cast<std::size_t>(s) * s * 3, fill),
          mask(static_cast<std::size_t>(s) * s, mask_fill) {}

    std::size_t texel_count() const { return static_cast<std::size_t>(size) * size; }
    std::size_t index(int x, int y) const { return static_cast<std::size_t>(y) * size + x; }

    float& at(int x, int y, int c) { return rgb[index(x, y) * 3 + c]; }
    float at(int x, int y, int c) const { return rgb[index(x, y) * 3 + c]; }
    float& mask_at(int x, int y) { return mask[index(x, y)]; }
    float mask_at(int x, int y) const { return mask[index(x, y)]; }
    bool valid_at(std::size_t i) const { return mask[i] >= 0.5f; }
};

// Serialized as a PNG pair: `<name>.png` (RGB) plus `<name>.mask.png`
// (grayscale, 255 = valid). `path` names the RGB file.
std::string mask_path_for(const std::string& rgb_path);
void save_texture(const std::string& path, const TextureMap& texture,
                  PngDepth depth = PngDepth::bits16);
TextureMap load_texture(const std::string& path);

std::array<double, 3> bilinear_sample_texture(const TextureMap& texture, double u, double v);

// Binary 4-neighborhood erosion of the validity mask, `rounds` times.
void erode_mask(TextureMap& texture, int rounds);

} // namespace uvtex
