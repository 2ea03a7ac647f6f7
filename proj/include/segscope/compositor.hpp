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

#include <string>

#include "segscope/colormap.hpp"
#include "segscope/core.hpp"

namespace segscope {

/// Draws the image with opacity alpha1 over an opaque black backdrop, then
/// the colormapped weights with opacity alpha2 on top:
///
///   out = colormap(w) * alpha2 + image * alpha1 * (1 - alpha2)
///
/// per channel, rounded half-up. Each output pixel depends only on the input
/// pixel and weight at the same position.
RgbImage superimpose(const RgbImage& image, const WeightField& weights, const CompositeParams& params);
RgbImage superimpose(const RgbImage& image, const WeightField& weights, const CompositeParams& params,
                     const Colormap& colormap);

/// Hover readout: the stored weight at (x, y). Throws OutOfBounds.
double weight_at(const WeightField& weights, int x, int y);

struct CategoryAtPoint {
    CategoryId id;
    std::string name;
};

/// Hover readout over a mask: the label of the pixel itself, never blended.
CategoryAtPoint category_at(const LabelMap& map, const CategoryTable& categories, int x, int y);

/// Selected categories in palette colors; everything else (including ignore)
/// black.
RgbImage render_mask_rgb(const LabelMap& map, const CategoryTable& categories, const CategorySet& selected);

}  // namespace segscope
