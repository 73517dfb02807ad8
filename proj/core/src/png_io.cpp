#include "uvtex/png_io.hpp"

#include <png.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <memory>
#include <stdexcept>

namespace uvtex {

namespace {

struct FileCloser {
    void operator()(std::FILE* f) const {
        if (f) std::fclose(f);
    }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

[[noreturn]] void fail(const std::string& path, const char* what) {
    throw std::runtime_error("png: " + std::string(what) + ": " + path);
}

// Decoded rows, always expanded to 16-bit RGBA-or-less layout chosen below.
struct Decoded {
    int width = 0;
    int height = 0;
    int channels = 0; // after transforms: 1 (gray) or 3 (rgb)
    double scale = 0; // 255 or 65535
    std::vector<std::uint16_t> pixels;
};

Decoded decode(const std::string& path) {
    FilePtr fp(std::fopen(path.c_str(), "rb"));
    if (!fp) fail(path, "cannot open");

    png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    if (!png) fail(path, "read struct alloc failed");
    png_infop info = png_create_info_struct(png);
    if (!info) {
        png_destroy_read_struct(&png, nullptr, nullptr);
        fail(path, "info struct alloc failed");
    }
    if (setjmp(png_jmpbuf(png))) {
        png_destroy_read_struct(&png, &info, nullptr);
        fail(path, "decode error");
    }

    png_init_io(png, fp.get());
    png_read_info(png, info);

    const png_uint_32 w = png_get_image_width(png, info);
    const png_uint_32 h = png_get_image_height(png, info);
    const int bit_depth = png_get_bit_depth(png, info);
    const int color_type = png_get_color_type(png, info);

    if (color_type == PNG_COLOR_TYPE_PALETTE) png_set_palette_to_rgb(png);
    if (color_type == PNG_COLOR_TYPE_GRAY && bit_depth < 8) png_set_expand_gray_1_2_4_to_8(png);
    if (png_get_valid(png, info, PNG_INFO_tRNS)) png_set_tRNS_to_alpha(png);
    png_set_strip_alpha(png);
    if (bit_depth == 16) png_set_swap(png); // stored big-endian; we read LE u16
    png_read_update_info(png, info);

    const int channels = png_get_channels(png, info);
    const int out_depth = png_get_bit_depth(png, info);
    if (channels != 1 && channels != 3) {
        png_destroy_read_struct(&png, &info, nullptr);
        fail(path, "unsupported channel layout");
    }

    Decoded d;
    d.width = static_cast<int>(w);
    d.height = static_cast<int>(h);
    d.channels = channels;
    d.scale = (out_depth == 16) ? 65535.0 : 255.0;
    d.pixels.resize(static_cast<std::size_t>(w) * h * channels);

    std::vector<png_bytep> rows(h);
    std::vector<std::uint8_t> raw;
    if (out_depth == 16) {
        for (png_uint_32 y = 0; y < h; ++y)
            rows[y] = reinterpret_cast<png_bytep>(d.pixels.data() +
                                                  static_cast<std::size_t>(y) * w * channels);
    } else {
        raw.resize(static_cast<std::size_t>(w) * h * channels);
        for (png_uint_32 y = 0; y < h; ++y)
            rows[y] = raw.data() + static_cast<std::size_t>(y) * w * channels;
    }
    png_read_image(png, rows.data());
    png_read_end(png, nullptr);
    png_destroy_read_struct(&png, &info, nullptr);

    if (out_depth != 16)
        for (std::size_t i = 0; i < raw.size(); ++i) d.pixels[i] = raw[i];
    return d;
}

void encode(const std::string& path, int width, int height, int channels, PngDepth depth,
            const float* values) {
    if (width <= 0 || height <= 0) fail(path, "empty image");
    FilePtr fp(std::fopen(path.c_str(), "wb"));
    if (!fp) fail(path, "cannot open for writing");

    png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    if (!png) fail(path, "write struct alloc failed");
    png_infop info = png_create_info_struct(png);
    if (!info) {
        png_destroy_write_struct(&png, nullptr);
        fail(path, "info struct alloc failed");
    }
    if (setjmp(png_jmpbuf(png))) {
        png_destroy_write_struct(&png, &info);
        fail(path, "encode error");
    }

    const bool wide = depth == PngDepth::bits16;
    const double scale = wide ? 65535.0 : 255.0;
    const int color = channels == 1 ? PNG_COLOR_TYPE_GRAY : PNG_COLOR_TYPE_RGB;

    png_init_io(png, fp.get());
    png_set_IHDR(png, info, width, height, wide ? 16 : 8, color, PNG_INTERLACE_NONE,
                 PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
    png_write_info(png, info);

    const std::size_t row_values = static_cast<std::size_t>(width) * channels;
    std::vector<std::uint8_t> row8(wide ? 0 : row_values);
    std::vector<std::uint16_t> row16(wide ? row_values : 0);
    for (int y = 0; y < height; ++y) {
        const float* src = values + static_cast<std::size_t>(y) * row_values;
        for (std::size_t i = 0; i < row_values; ++i) {
            const double v = std::clamp(static_cast<double>(src[i]), 0.0, 1.0);
            const auto q = static_cast<std::uint32_t>(std::lround(v * scale));
            if (wide)
                row16[i] = static_cast<std::uint16_t>(q);
            else
                row8[i] = static_cast<std::uint8_t>(q);
        }
        if (wide) {
            // png expects big-endian 16-bit samples
            std::vector<std::uint8_t> be(row_values * 2);
            for (std::size_t i = 0; i < row_values; ++i) {
                be[2 * i] = static_cast<std::uint8_t>(row16[i] >> 8);
                be[2 * i + 1] = static_cast<std::uint8_t>(row16[i] & 0xff);
            }
            png_write_row(png, be.data());
        } else {
            png_write_row(png, row8.data());
        }
    }
    png_write_end(png, nullptr);
    png_destroy_write_struct(&png, &info);
}

} // namespace

Image read_png(const std::string& path) {
    const Decoded d = decode(path);
    Image img(d.width, d.height);
    const double inv = 1.0 / d.scale;
    for (int y = 0; y < d.height; ++y) {
        for (int x = 0; x < d.width; ++x) {
            const std::size_t p = static_cast<std::size_t>(y) * d.width + x;
            for (int c = 0; c < 3; ++c) {
                const std::size_t src = d.channels == 1 ? p : p * 3 + c;
                img.at(x, y, c) = static_cast<float>(d.pixels[src] * inv);
            }
        }
    }
    return img;
}

GrayImage read_png_gray(const std::string& path) {
    const Decoded d = decode(path);
    GrayImage img(d.width, d.height);
    const double inv = 1.0 / d.scale;
    for (int y = 0; y < d.height; ++y) {
        for (int x = 0; x < d.width; ++x) {
            const std::size_t p = static_cast<std::size_t>(y) * d.width + x;
            double v = 0;
            if (d.channels == 1) {
                v = d.pixels[p] * inv;
            } else {
                // rec. 601 luma for the odd case of a color mask
                v = (0.299 * d.pixels[p * 3] + 0.587 * d.pixels[p * 3 + 1] +
                     0.114 * d.pixels[p * 3 + 2]) *
                    inv;
            }
            img.at(x, y) = static_cast<float>(v);
        }
    }
    return img;
}

void write_png(const std::string& path, const Image& image, PngDepth depth) {
    encode(path, image.width, image.height, 3, depth, image.data.data());
}

void write_png_gray(const std::string& path, const GrayImage& image, PngDepth depth) {
    encode(path, image.width, image.height, 1, depth, image.data.data());
}

} // namespace uvtex
