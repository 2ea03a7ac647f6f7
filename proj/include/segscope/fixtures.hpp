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

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "segscope/core.hpp"
#include "segscope/manifest.hpp"

namespace segscope {

struct Rect {
    int x = 0;
    int y = 0;
    int width = 0;
    int height = 0;

    std::uint64_t area() const noexcept {
        return static_cast<std::uint64_t>(width) * static_cast<std::uint64_t>(height);
    }
    friend bool operator==(const Rect&, const Rect&) = default;
};

/// Analytic IoU of two axis-aligned rectangles, in percent.
double rect_iou_percent(const Rect& a, const Rect& b);

/// Ground truth for one synthetic object. A false-positive object has no
/// given rectangle; every other object has both.
struct FixtureObject {
    CategoryId category;
    std::optional<Rect> given;
    std::optional<Rect> pred;
};

struct FixtureImage {
    std::string image_id;
    /// Prediction identical to the given mask.
    bool perfect = false;
    std::vector<FixtureObject> objects;
};

struct FixtureTruth {
    std::uint64_t seed = 0;
    int width = 0;
    int height = 0;
    std::vector<FixtureImage> images;
};

struct FixtureOptions {
    int width = 256;
    int height = 128;
};

inline constexpr const char* kFixtureManifestFile = "manifest.json";
inline constexpr const char* kFixtureTruthFile = "fixture_truth.json";

/// In every imperfect fixture image the IoU of this category grows linearly
/// with its pixel area (plus small noise); the other trend category shrinks.
/// The perfect image contains neither.
inline const CategoryId kRisingTrendCategory{13};   // car
inline const CategoryId kFallingTrendCategory{14};  // truck

/// Writes a synthetic dataset to out_dir:
///   images/<id>.png  given/<id>.png  pred/<id>.png
///   weights/<category>/<id>.wgt  manifest.json  fixture_truth.json
///
/// Each image is split into a 4x2 grid; each present category owns one cell
/// and one rectangle in it, on an ignore background. The prediction shifts
/// every rectangle by a seeded offset that keeps it inside its cell, so
/// rectangles never overlap and every IoU is rect_iou_percent of the pair.
/// Some predictions add a false-positive rectangle in a free cell. The first
/// image is a perfect prediction. Weight fields are Gaussian bumps centred on
/// each rectangle. Output is a pure function of (seed, n_images, options).
DatasetManifest generate_fixtures(std::uint64_t seed, int n_images, const std::filesystem::path& out_dir,
                                  const CategoryTable& categories, const FixtureOptions& options = {});

FixtureTruth load_fixture_truth(const std::filesystem::path& path);

}  // namespace segscope
