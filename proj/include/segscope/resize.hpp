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

#include "segscope/core.hpp"

namespace segscope {

/// Nearest-neighbour with pixel-center alignment: destination column x reads
/// source column floor((x + 0.5) * src_w / dst_w). Never invents labels.
LabelMap resize_label_map(const LabelMap& map, int width, int height);

/// Bilinear with pixel-center alignment and edge clamping; channels are
/// rounded half-up. Same-size resizes return the input unchanged.
RgbImage resize_rgb(const RgbImage& image, int width, int height);

inline LabelMap resize_label_map(const LabelMap& map, Resolution r) {
    return resize_label_map(map, r.width, r.height);
}

}  // namespace segscope
