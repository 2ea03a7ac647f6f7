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
#include <bitset>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "segscope/error.hpp"

namespace segscope {

struct Rgb {
    std::uint8_t r = 0;
    std::uint8_t g = 0;
    std::uint8_t b = 0;

    friend bool operator==(const Rgb&, const Rgb&) = default;
};

/// A semantic class in trainId numbering: 0..18 are evaluable, 255 is ignore.
class CategoryId {
public:
    static constexpr int kEvaluableCount = 19;
    static constexpr std::uint8_t kIgnoreValue = 255;

    /// Throws Error(InvalidLabel) for anything outside {0..18, 255}.
    explicit CategoryId(int value);

    static constexpr CategoryId ignore() noexcept { return CategoryId(Unchecked{}, kIgnoreValue); }
    static constexpr bool is_valid(int value) noexcept {
        return (value >= 0 && value < kEvaluableCount) || value == kIgnoreValue;
    }

    constexpr std::uint8_t value() const noexcept { return value_; }
    constexpr bool is_ignore() const noexcept { return value_ == kIgnoreValue; }
    /// Dense index 0..18; only meaningful for evaluable ids.
    constexpr std::size_t index() const noexcept { return value_; }

    friend constexpr auto operator<=>(const CategoryId&, const CategoryId&) = default;

private:
    struct Unchecked {};
    constexpr CategoryId(Unchecked, std::uint8_t value) noexcept : value_(value) {}

    std::uint8_t value_;
};

/// Subset of the 19 evaluable categories.
class CategorySet {
public:
    CategorySet() = default;

    static CategorySet all() {
        CategorySet s;
        s.bits_.set();
        return s;
    }

    void insert(CategoryId id);
    bool contains(CategoryId id) const noexcept {
        return !id.is_ignore() && bits_.test(id.index());
    }
    std::size_t size() const noexcept { return bits_.count(); }
    bool empty() const noexcept { return bits_.none(); }

    CategorySet operator|(const CategorySet& other) const {
        CategorySet s;
        s.bits_ = bits_ | other.bits_;
        return s;
    }
    friend bool operator==(const CategorySet&, const CategorySet&) = default;

private:
    std::bitset<CategoryId::kEvaluableCount> bits_;
};

struct CategoryEntry {
    CategoryId id;
    std::string name;
    Rgb color;
};

/// Names and palette colors for the categories, read from a text config with
/// one `<id>,<name>,<r>,<g>,<b>` record per line.
///
/// The table must hold exactly the 19 evaluable ids; an `ignore` (255) line is
/// optional. Serializing reproduces the parsed text byte for byte when the
/// input is in canonical form (no padding, LF line endings).
class CategoryTable {
public:
    static CategoryTable parse(std::string_view text);
    static CategoryTable load(const std::filesystem::path& path);
    /// The config shipped in data/categories.csv, embedded at build time.
    static const CategoryTable& builtin();

    std::string serialize() const;

    /// Resolves a display name; "ignore" always maps to 255.
    CategoryId by_name(std::string_view name) const;
    const std::string& name_of(CategoryId id) const;
    Rgb color_of(CategoryId id) const;

    /// The 19 evaluable entries ordered by id.
    std::span<const CategoryEntry> evaluable() const noexcept { return evaluable_; }

private:
    std::vector<CategoryEntry> file_order_;
    std::vector<CategoryEntry> evaluable_;
    std::string ignore_name_ = "ignore";
    Rgb ignore_color_{};
    bool trailing_newline_ = true;
};

inline CategoryId category_by_name(const CategoryTable& table, std::string_view name) {
    return table.by_name(name);
}

/// Parses a comma separated list of category names; an empty string is the
/// empty set.
CategorySet parse_category_list(const CategoryTable& table, std::string_view list);

struct Resolution {
    int width = 0;
    int height = 0;

    friend bool operator==(const Resolution&, const Resolution&) = default;
};

/// 512 rows by 1024 columns.
inline constexpr Resolution kWorkingResolution{1024, 512};

/// Per-pixel category raster, row-major, top-left origin.
class LabelMap {
public:
    LabelMap(int width, int height, std::vector<std::uint8_t> labels);
    LabelMap(int width, int height, CategoryId fill);

    int width() const noexcept { return width_; }
    int height() const noexcept { return height_; }
    std::size_t pixel_count() const noexcept { return labels_.size(); }
    bool contains(int x, int y) const noexcept {
        return x >= 0 && y >= 0 && x < width_ && y < height_;
    }

    CategoryId at(int x, int y) const;
    std::span<const std::uint8_t> raw() const noexcept { return labels_; }

    friend bool operator==(const LabelMap&, const LabelMap&) = default;

private:
    int width_;
    int height_;
    std::vector<std::uint8_t> labels_;
};

class RgbImage {
public:
    RgbImage(int width, int height, std::vector<Rgb> pixels);
    RgbImage(int width, int height, Rgb fill);

    int width() const noexcept { return width_; }
    int height() const noexcept { return height_; }
    std::size_t pixel_count() const noexcept { return pixels_.size(); }

    Rgb at(int x, int y) const;
    std::span<const Rgb> pixels() const noexcept { return pixels_; }
    std::span<Rgb> pixels() noexcept { return pixels_; }

    friend bool operator==(const RgbImage&, const RgbImage&) = default;

private:
    int width_;
    int height_;
    std::vector<Rgb> pixels_;
};

/// Saliency weights for one (image, category) pair. Values are clamped to
/// [0,1] on construction; NaN and infinities are rejected.
class WeightField {
public:
    WeightField(int width, int height, std::vector<float> weights);

    int width() const noexcept { return width_; }
    int height() const noexcept { return height_; }
    bool contains(int x, int y) const noexcept {
        return x >= 0 && y >= 0 && x < width_ && y < height_;
    }

    float at(int x, int y) const;
    std::span<const float> weights() const noexcept { return weights_; }

    friend bool operator==(const WeightField&, const WeightField&) = default;

private:
    int width_;
    int height_;
    std::vector<float> weights_;
};

/// One row of the dataset-wide mask table.
struct MaskRecord {
    std::string image_id;
    CategoryId category;
    double iou_percent = 0.0;
    std::uint64_t size_pixels = 0;

    friend bool operator==(const MaskRecord&, const MaskRecord&) = default;
};

/// One row of the per-image occupancy table.
struct OccupancyRecord {
    std::string image_id;
    CategoryId category;
    double given_occupancy_pct = 0.0;
    double pred_occupancy_pct = 0.0;
    double iou_percent = 0.0;

    friend bool operator==(const OccupancyRecord&, const OccupancyRecord&) = default;
};

struct ColormapId {
    std::string name = "turbo";
    /// Bin count for categorical maps, ignored by sequential ones.
    int bins = 8;

    friend bool operator==(const ColormapId&, const ColormapId&) = default;
};

/// Opacities for the image layer (alpha1) and the weight layer (alpha2).
/// The image must stay more opaque than the weights: alpha1 > alpha2.
class CompositeParams {
public:
    static constexpr double kDefaultAlpha1 = 1.0;
    static constexpr double kDefaultAlpha2 = 0.5;

    CompositeParams() : CompositeParams(kDefaultAlpha1, kDefaultAlpha2, ColormapId{}) {}
    /// Throws Error(InvalidParameter) unless 0 < alpha1 <= 1, 0 <= alpha2 <= 1,
    /// alpha1 > alpha2 and bins >= 2.
    CompositeParams(double alpha1, double alpha2, ColormapId colormap);

    double alpha1() const noexcept { return alpha1_; }
    double alpha2() const noexcept { return alpha2_; }
    const ColormapId& colormap() const noexcept { return colormap_; }

private:
    double alpha1_;
    double alpha2_;
    ColormapId colormap_;
};

}  // namespace segscope
