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

#include "segscope/core.hpp"

namespace segscope::detail {

extern const std::array<Rgb, 256> kTurboLut;
extern const std::array<Rgb, 256> kRainbowLut;
extern const std::array<Rgb, 12> kPairedColors;
extern const std::array<Rgb, 256> kNipySpectralLut;

}  // namespace segscope::detail
