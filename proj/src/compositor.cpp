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

#include "segscope/compositor.hpp"

#include <array>
#include <cmath>

#include <fmt/format.h>

namespace segscope {

namespace {

std::uint8_t round_channel(double v) {
    return static_cast<std::uint8_t>(std::clamp(std::floor(v + 0.5), 0.0, 255.0));
}

}  // namespace

RgbImage superimpose(const RgbImage& image, const WeightField& weights, const CompositeParams& params) {
    return superimpose(image, weights, params, Colormap::from_id(params.colormap()));
}

RgbImage superimpose(const RgbImage& image, const WeightField& weights, const CompositeParams& params,
                     const Colormap& colormap) {
    if (image.width() != weights.width() || image.height() != weights.height())
        throw Error(ErrorKind::DimensionMismatch,
                    fmt::format("image is {}x{} but weight field is {}x{}", image.width(), image.height(),
                                weights.width(), weights.height()));

    const double a1 = params.alpha1();
    const double a2 = params.alpha2();

    // Both layers only take 256 distinct values per channel, so the blend is
    // two table lookups and an add per channel.
    std::array<double, 256> image_term{};
    for (int v = 0; v < 256; ++v) image_term[static_cast<std::size_t>(v)] = v * a1 * (1.0 - a2);
    std::array<std::array<double, 3>, 256> weight_term{};
    for (int idx = 0; idx < 256; ++idx) {
        const Rgb c = colormap.kind() == ColormapKind::Sequential
                          ? colormap.lut()[static_cast<std::size_t>(idx)]
                          : colormap.bin_color(std::min(idx, colormap.bins() - 1));
        weight_term[static_cast<std::size_t>(idx)] = {c.r * a2, c.g * a2, c.b * a2};
    }

    const auto src = image.pixels();
    const auto w = weights.weights();
    std::vector<Rgb> out(src.size());
    for (std::size_t i = 0; i < src.size(); ++i) {
        const auto& wt = weight_term[static_cast<std::size_t>(colormap.index_of(w[i]))];
        out[i] = Rgb{round_channel(wt[0] + image_term[src[i].r]), round_channel(wt[1] + image_term[src[i].g]),
                     round_channel(wt[2] + image_term[src[i].b])};
    }
    return RgbImage(image.width(), image.height(), std::move(out));
}

double weight_at(const WeightField& weights, int x, int y) { return weights.at(x, y); }

CategoryAtPoint category_at(const LabelMap& map, const CategoryTable& categories, int x, int y) {
    const CategoryId id = map.at(x, y);
    return CategoryAtPoint{id, categories.name_of(id)};
}

RgbImage render_mask_rgb(const LabelMap& map, const CategoryTable& categories, const CategorySet& selected) {
    std::array<Rgb, 256> palette{};
    for (const auto& entry : categories.evaluable()) {
        if (selected.contains(entry.id)) palette[entry.id.value()] = entry.color;
    }
    const auto labels = map.raw();
    std::vector<Rgb> out(labels.size());
    std::transform(labels.begin(), labels.end(), out.begin(), [&](std::uint8_t v) { return palette[v]; });
    return RgbImage(map.width(), map.height(), std::move(out));
}

}  // namespace segscope
