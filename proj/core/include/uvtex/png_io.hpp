#pragma once

#include <string>
#include <vector>

#include "uvtex/image.hpp"

namespace uvtex {

enum class PngDepth { bits8, bits16 };

// Grayscale raster, same conventions as Image.
struct GrayImage {
    int width = 0;
    int height = 0;
    std::vector<float> data;

    GrayImage() = default;
    GrayImage(int w, int h, float fill = 0.0f)
        : width(w), height(h), data(static_cast<std::size_t>(w) * h, fill) {}

    float& at(int x, int y) { return data[static_cast<std::size_t>(y) * width + x]; }
    float at(int x, int y) const { return data[static_cast<std::size_t>(y) * width + x]; }
};

// Decodes 8- or 16-bit PNG in any color type; values are scaled to [0, 1].
// Gray is replicated across the three channels, alpha is dropped.
Image read_png(const std::string& path);
GrayImage read_png_gray(const std::string& path);

// Values are clamped to [0, 1] and quantized on export.
void write_png(const std::string& path, const Image& image, PngDepth depth = PngDepth::bits8);
void write_png_gray(const std::string& path, const GrayImage& image,
                    PngDepth depth = PngDepth::bits8);

} // namespace uvtex
