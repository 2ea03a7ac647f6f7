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

#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "segscope/core.hpp"

namespace segscope {

enum class ColormapKind { Sequential, Categorical };

/// 256-entry color lookup table mapping a weight in [0,1] to a color.
///
/// Sequential maps read lut[round(w * 255)]. Categorical maps split [0,1]
/// into `bins` equal bins and read the color of bin floor(w * bins), with
/// w = 1 falling into the last bin; their lut is piecewise constant over
/// equal-width index ranges.
///
/// Shipped maps: "turbo" and "rainbow" (sequential), "paired" and
/// "nipy_spectral" (categorical, default 8 bins).
class Colormap {
public:
    static constexpr int kDefaultBins = 8;

    /// Throws Error(UnknownName) listing the valid names.
    static Colormap by_name(std::string_view name, int bins = kDefaultBins);
    static Colormap from_id(const ColormapId& id) { return by_name(id.name, id.bins); }
    static std::vector<std::string> names();

    const std::string& name() const noexcept { return name_; }
    ColormapKind kind() const noexcept { return kind_; }
    /// Bin count for categorical maps, 256 for sequential ones.
    int bins() const noexcept { return bins_; }
    const std::array<Rgb, 256>& lut() const noexcept { return lut_; }

    /// Bin (categorical) or lut index (sequential) for a weight. Weights
    /// outside [0,1] are clamped.
    int index_of(double weight) const noexcept;
    Rgb apply(double weight) const noexcept;
    /// Color of bin k of a categorical map.
    Rgb bin_color(int bin) const;

private:
    Colormap() = default;

    std::string name_;
    ColormapKind kind_ = ColormapKind::Sequential;
    int bins_ = 256;
    std::array<Rgb, 256> lut_{};
    std::vector<Rgb> bin_colors_;
};

inline Rgb colormap_apply(const Colormap& colormap, double weight) { return colormap.apply(weight); }

}  // namespace segscope
