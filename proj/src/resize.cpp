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

#include "segscope/resize.hpp"

#include <cmath>
#include <vector>

#include <fmt/format.h>

namespace segscope {

namespace {

void check_target(int width, int height) {
    if (width < 1 || height < 1)
        throw Error(ErrorKind::InvalidParameter, fmt::format("resize target {}x{} must be positive", width, height));
}

std::vector<std::size_t> nearest_taps(int src, int dst) {
    std::vector<std::size_t> taps(static_cast<std::size_t>(dst));
    for (int i = 0; i < dst; ++i) {
        const auto num = (2 * static_cast<std::int64_t>(i) + 1) * src;
        taps[static_cast<std::size_t>(i)] = static_cast<std::size_t>(num / (2 * static_cast<std::int64_t>(dst)));
    }
    return taps;
}

struct LinearTap {
    std::size_t lo;
    std::size_t hi;
    double frac;
};

std::vector<LinearTap> linear_taps(int src, int dst) {
    std::vector<LinearTap> taps(static_cast<std::size_t>(dst));
    const double scale = static_cast<double>(src) / dst;
    for (int i = 0; i < dst; ++i) {
        double pos = (i + 0.5) * scale - 0.5;
        pos = std::clamp(pos, 0.0, static_cast<double>(src - 1));
        const auto lo = static_cast<std::size_t>(std::floor(pos));
        const std::size_t hi = std::min(lo + 1, static_cast<std::size_t>(src - 1));
        taps[static_cast<std::size_t>(i)] = {lo, hi, pos - static_cast<double>(lo)};
    }
    return taps;
}

}  // namespace

LabelMap resize_label_map(const LabelMap& map, int width, int height) {
    check_target(width, height);
    if (map.width() == width && map.height() == height) return map;
    if (map.pixel_count() == 0)
        throw Error(ErrorKind::InvalidParameter, "cannot resize an empty label map");

    const auto xs = nearest_taps(map.width(), width);
    const auto ys = nearest_taps(map.height(), height);
    const auto src = map.raw();
    const auto src_w = static_cast<std::size_t>(map.width());

    std::vector<std::uint8_t> out(static_cast<std::size_t>(width) * static_cast<std::size_t>(height));
    std::size_t k = 0;
    for (std::size_t sy : ys) {
        const std::uint8_t* row = src.data() + sy * src_w;
        for (std::size_t sx : xs) out[k++] = row[sx];
    }
    return LabelMap(width, height, std::move(out));
}

RgbImage resize_rgb(const RgbImage& image, int width, int height) {
    check_target(width, height);
    if (image.width() == width && image.height() == height) return image;
    if (image.pixel_count() == 0)
        throw Error(ErrorKind::InvalidParameter, "cannot resize an empty image");

    const auto xs = linear_taps(image.width(), width);
    const auto ys = linear_taps(image.height(), height);
    const auto src = image.pixels();
    const auto src_w = static_cast<std::size_t>(image.width());

    auto lerp = [](double a, double b, double t) { return a + (b - a) * t; };
    auto channel = [](double v) {
        return static_cast<std::uint8_t>(std::clamp(std::floor(v + 0.5), 0.0, 255.0));
    };

    std::vector<Rgb> out(static_cast<std::size_t>(width) * static_cast<std::size_t>(height));
    std::size_t k = 0;
    for (const auto& ty : ys) {
        const Rgb* r0 = src.data() + ty.lo * src_w;
        const Rgb* r1 = src.data() + ty.hi * src_w;
        for (const auto& tx : xs) {
            const Rgb a = r0[tx.lo], b = r0[tx.hi], c = r1[tx.lo], d = r1[tx.hi];
            auto mix = [&](std::uint8_t Rgb::*ch) {
                const double top = lerp(a.*ch, b.*ch, tx.frac);
                const double bottom = lerp(c.*ch, d.*ch, tx.frac);
                return channel(lerp(top, bottom, ty.frac));
            };
            out[k++] = Rgb{mix(&Rgb::r), mix(&Rgb::g), mix(&Rgb::b)};
        }
    }
    return RgbImage(width, height, std::move(out));
}

}  // namespace segscope
