// Copyright 2026 The segscope Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "segscope/png_io.hpp"

#include <png.h>

#include <csetjmp>
#include <cstring>
#include <fstream>
#include <string>

#include <fmt/format.h>

namespace segscope {

namespace {

struct ErrorSink {
    char message[256] = {};
};

void on_png_error(png_structp png, png_const_charp msg) {
    auto* sink = static_cast<ErrorSink*>(png_get_error_ptr(png));
    if (sink != nullptr) std::snprintf(sink->message, sizeof(sink->message), "%s", msg);
    longjmp(png_jmpbuf(png), 1);
}

void on_png_warning(png_structp, png_const_charp) {}

struct MemoryReader {
    const std::uint8_t* data;
    std::size_t size;
    std::size_t offset;
};

void read_from_memory(png_structp png, png_bytep out, png_size_t length) {
    auto* reader = static_cast<MemoryReader*>(png_get_io_ptr(png));
    if (reader->offset + length > reader->size) png_error(png, "unexpected end of PNG data");
    std::memcpy(out, reader->data + reader->offset, length);
    reader->offset += length;
}

void write_to_vector(png_structp png, png_bytep data, png_size_t length) {
    auto* out = static_cast<std::vector<std::uint8_t>*>(png_get_io_ptr(png));
    out->insert(out->end(), data, data + length);
}

void flush_noop(png_structp) {}

enum class Target { Gray8, Rgb8, HeaderOnly };

struct Decoded {
    PngHeader header;
    std::vector<std::uint8_t> samples;
};

// All libpng interaction happens in this frame so longjmp never crosses C++
// destructors.
bool decode_png(std::span<const std::uint8_t> bytes, Target target, Decoded& out, ErrorSink& sink) {
    if (bytes.size() < 8 || png_sig_cmp(bytes.data(), 0, 8) != 0) {
        std::snprintf(sink.message, sizeof(sink.message), "not a PNG file");
        return false;
    }
    png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, &sink, on_png_error, on_png_warning);
    if (png == nullptr) return false;
    png_infop info = png_create_info_struct(png);
    if (info == nullptr) {
        png_destroy_read_struct(&png, nullptr, nullptr);
        return false;
    }
    MemoryReader reader{bytes.data(), bytes.size(), 0};
    std::vector<png_bytep> rows;

    if (setjmp(png_jmpbuf(png))) {
        png_destroy_read_struct(&png, &info, nullptr);
        return false;
    }

    png_set_read_fn(png, &reader, read_from_memory);
    png_read_info(png, info);

    const int color_type = png_get_color_type(png, info);
    out.header.width = static_cast<int>(png_get_image_width(png, info));
    out.header.height = static_cast<int>(png_get_image_height(png, info));
    out.header.bit_depth = png_get_bit_depth(png, info);
    out.header.channels = png_get_channels(png, info);
    out.header.palette = color_type == PNG_COLOR_TYPE_PALETTE;

    if (target == Target::HeaderOnly) {
        png_destroy_read_struct(&png, &info, nullptr);
        return true;
    }

    if (target == Target::Gray8) {
        if (color_type != PNG_COLOR_TYPE_GRAY || out.header.bit_depth != 8) {
            std::snprintf(sink.message, sizeof(sink.message),
                          "label maps must be 8-bit single-channel PNG (color type %d, depth %d)",
                          color_type, out.header.bit_depth);
            png_destroy_read_struct(&png, &info, nullptr);
            return false;
        }
    } else {
        if (out.header.bit_depth == 16) png_set_strip_16(png);
        if (color_type == PNG_COLOR_TYPE_PALETTE) png_set_palette_to_rgb(png);
        if (color_type == PNG_COLOR_TYPE_GRAY && out.header.bit_depth < 8)
            png_set_expand_gray_1_2_4_to_8(png);
        if (color_type == PNG_COLOR_TYPE_GRAY || color_type == PNG_COLOR_TYPE_GRAY_ALPHA)
            png_set_gray_to_rgb(png);
        if (color_type & PNG_COLOR_MASK_ALPHA) png_set_strip_alpha(png);
        if (png_get_valid(png, info, PNG_INFO_tRNS)) png_set_strip_alpha(png);
    }
    png_set_interlace_handling(png);
    png_read_update_info(png, info);

    const std::size_t stride = png_get_rowbytes(png, info);
    const std::size_t channels = target == Target::Gray8 ? 1 : 3;
    if (stride != channels * static_cast<std::size_t>(out.header.width)) {
        std::snprintf(sink.message, sizeof(sink.message), "unexpected row layout");
        png_destroy_read_struct(&png, &info, nullptr);
        return false;
    }
    out.samples.resize(stride * static_cast<std::size_t>(out.header.height));
    rows.resize(static_cast<std::size_t>(out.header.height));
    for (std::size_t y = 0; y < rows.size(); ++y) rows[y] = out.samples.data() + y * stride;
    png_read_image(png, rows.data());
    png_read_end(png, nullptr);
    png_destroy_read_struct(&png, &info, nullptr);
    return true;
}

bool encode(const std::uint8_t* samples, int width, int height, int color_type, int channels,
            std::vector<std::uint8_t>& out, ErrorSink& sink) {
    png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, &sink, on_png_error, on_png_warning);
    if (png == nullptr) return false;
    png_infop info = png_create_info_struct(png);
    if (info == nullptr) {
        png_destroy_write_struct(&png, nullptr);
        return false;
    }
    std::vector<png_bytep> rows(static_cast<std::size_t>(height));
    const std::size_t stride = static_cast<std::size_t>(width) * channels;
    for (std::size_t y = 0; y < rows.size(); ++y)
        rows[y] = const_cast<png_bytep>(samples + y * stride);

    if (setjmp(png_jmpbuf(png))) {
        png_destroy_write_struct(&png, &info);
        return false;
    }
    png_set_write_fn(png, &out, write_to_vector, flush_noop);
    png_set_compression_level(png, 6);
    png_set_IHDR(png, info, static_cast<png_uint_32>(width), static_cast<png_uint_32>(height), 8,
                 color_type, PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
    png_write_info(png, info);
    png_write_image(png, rows.data());
    png_write_end(png, nullptr);
    png_destroy_write_struct(&png, &info);
    return true;
}

Decoded decode_or_throw(std::span<const std::uint8_t> bytes, Target target, const std::string& what) {
    Decoded decoded;
    ErrorSink sink;
    if (!decode_png(bytes, target, decoded, sink))
        throw Error(ErrorKind::Decode, fmt::format("{}: {}", what, sink.message));
    return decoded;
}

LabelMap to_label_map(Decoded decoded, const std::string& what) {
    const auto width = static_cast<std::size_t>(decoded.header.width);
    for (std::size_t i = 0; i < decoded.samples.size(); ++i) {
        const std::uint8_t v = decoded.samples[i];
        if (!CategoryId::is_valid(v)) {
            throw Error(ErrorKind::InvalidLabel,
                        fmt::format("{}: invalid label {} at ({}, {})", what, v, i % width, i / width));
        }
    }
    return LabelMap(decoded.header.width, decoded.header.height, std::move(decoded.samples));
}

RgbImage to_rgb(const Decoded& decoded) {
    std::vector<Rgb> pixels(decoded.samples.size() / 3);
    for (std::size_t i = 0; i < pixels.size(); ++i)
        pixels[i] = Rgb{decoded.samples[3 * i], decoded.samples[3 * i + 1], decoded.samples[3 * i + 2]};
    return RgbImage(decoded.header.width, decoded.header.height, std::move(pixels));
}

}  // namespace

std::vector<std::uint8_t> read_file_bytes(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::MissingFile, fmt::format("cannot open {}", path.string()));
    return std::vector<std::uint8_t>(std::istreambuf_iterator<char>(in), {});
}

void write_file_bytes(const std::filesystem::path& path, std::span<const std::uint8_t> bytes) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorKind::Io, fmt::format("cannot write {}", path.string()));
    out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw Error(ErrorKind::Io, fmt::format("short write to {}", path.string()));
}

PngHeader read_png_header(const std::filesystem::path& path) {
    // IHDR sits right after the signature; 64 bytes cover it.
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::MissingFile, fmt::format("cannot open {}", path.string()));
    std::vector<std::uint8_t> head(64);
    in.read(reinterpret_cast<char*>(head.data()), static_cast<std::streamsize>(head.size()));
    head.resize(static_cast<std::size_t>(in.gcount()));
    return decode_or_throw(head, Target::HeaderOnly, path.string()).header;
}

LabelMap decode_label_map_png(std::span<const std::uint8_t> bytes) {
    return to_label_map(decode_or_throw(bytes, Target::Gray8, "label map"), "label map");
}

LabelMap load_label_map(const std::filesystem::path& path) {
    const auto bytes = read_file_bytes(path);
    return to_label_map(decode_or_throw(bytes, Target::Gray8, path.string()), path.string());
}

RgbImage decode_rgb_png(std::span<const std::uint8_t> bytes) {
    return to_rgb(decode_or_throw(bytes, Target::Rgb8, "rgb image"));
}

RgbImage load_rgb_image(const std::filesystem::path& path) {
    const auto bytes = read_file_bytes(path);
    return to_rgb(decode_or_throw(bytes, Target::Rgb8, path.string()));
}

std::vector<std::uint8_t> encode_png(const LabelMap& map) {
    std::vector<std::uint8_t> out;
    ErrorSink sink;
    if (!encode(map.raw().data(), map.width(), map.height(), PNG_COLOR_TYPE_GRAY, 1, out, sink))
        throw Error(ErrorKind::Io, fmt::format("PNG encode failed: {}", sink.message));
    return out;
}

std::vector<std::uint8_t> encode_png(const RgbImage& image) {
    static_assert(sizeof(Rgb) == 3, "Rgb must be tightly packed");
    std::vector<std::uint8_t> out;
    ErrorSink sink;
    const auto* samples = reinterpret_cast<const std::uint8_t*>(image.pixels().data());
    if (!encode(samples, image.width(), image.height(), PNG_COLOR_TYPE_RGB, 3, out, sink))
        throw Error(ErrorKind::Io, fmt::format("PNG encode failed: {}", sink.message));
    return out;
}

void write_label_map(const LabelMap& map, const std::filesystem::path& path) {
    write_file_bytes(path, encode_png(map));
}

void write_rgb_image(const RgbImage& image, const std::filesystem::path& path) {
    write_file_bytes(path, encode_png(image));
}

}  // namespace segscope
