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

#include "segscope/colormap.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>
#include <fmt/ranges.h>

#include "colormap_data.hpp"

namespace segscope {

namespace {

// Resamples a base map at bins evenly spaced positions over [0,1], the same
// way a listed or continuous map is discretized into N colors.
std::vector<Rgb> sample_bins(std::span<const Rgb> base, int bins) {
    std::vector<Rgb> colors(static_cast<std::size_t>(bins));
    const auto n = static_cast<double>(base.size());
    for (int k = 0; k < bins; ++k) {
        const double pos = static_cast<double>(k) / (bins - 1);
        const auto idx = std::min(static_cast<std::size_t>(pos * n), base.size() - 1);
        colors[static_cast<std::size_t>(k)] = base[idx];
    }
    return colors;
}

}  // namespace

std::vector<std::string> Colormap::names() { return {"turbo", "rainbow", "paired", "nipy_spectral"}; }

Colormap Colormap::by_name(std::string_view name, int bins) {
    Colormap cm;
    cm.name_ = std::string(name);
    if (name == "turbo" || name == "rainbow") {
        cm.kind_ = ColormapKind::Sequential;
        cm.bins_ = 256;
        cm.lut_ = name == "turbo" ? detail::kTurboLut : detail::kRainbowLut;
        return cm;
    }
    if (name == "paired" || name == "nipy_spectral") {
        if (bins < 2 || bins > 256)
            throw Error(ErrorKind::InvalidParameter, fmt::format("bins {} outside [2, 256]", bins));
        cm.kind_ = ColormapKind::Categorical;
        cm.bins_ = bins;
        cm.bin_colors_ = name == "paired" ? sample_bins(detail::kPairedColors, bins)
                                          : sample_bins(detail::kNipySpectralLut, bins);
        for (int i = 0; i < 256; ++i) cm.lut_[static_cast<std::size_t>(i)] = cm.bin_colors_[static_cast<std::size_t>(i * bins / 256)];
        return cm;
    }
    throw Error(ErrorKind::UnknownName,
                fmt::format("unknown colormap '{}' (valid: {})", name, fmt::join(names(), ", ")));
}

int Colormap::index_of(double weight) const noexcept {
    const double w = std::isnan(weight) ? 0.0 : std::clamp(weight, 0.0, 1.0);
    if (kind_ == ColormapKind::Sequential) return static_cast<int>(std::floor(w * 255.0 + 0.5));
    int bin = static_cast<int>(std::floor(w * bins_));
    // w * bins can land one ulp short of (or past) an integer; snap so that
    // the double nearest k / bins always starts bin k.
    if (bin < bins_ - 1 && w >= static_cast<double>(bin + 1) / bins_) ++bin;
    if (bin > 0 && w < static_cast<double>(bin) / bins_) --bin;
    return std::min(bin, bins_ - 1);
}

Rgb Colormap::apply(double weight) const noexcept {
    const int idx = index_of(weight);
    if (kind_ == ColormapKind::Sequential) return lut_[static_cast<std::size_t>(idx)];
    return bin_colors_[static_cast<std::size_t>(idx)];
}

Rgb Colormap::bin_color(int bin) const {
    if (kind_ != ColormapKind::Categorical || bin < 0 || bin >= bins_)
        throw Error(ErrorKind::OutOfBounds, fmt::format("colormap '{}' has no bin {}", name_, bin));
    return bin_colors_[static_cast<std::size_t>(bin)];
}

}  // namespace segscope
