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

#include "segscope/core.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include <fmt/format.h>

#include "builtin_categories.inc"

namespace segscope {

const char* to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::Parse: return "parse";
        case ErrorKind::Io: return "io";
        case ErrorKind::MissingFile: return "missing-file";
        case ErrorKind::Decode: return "decode";
        case ErrorKind::DimensionMismatch: return "dimension-mismatch";
        case ErrorKind::InvalidLabel: return "invalid-label";
        case ErrorKind::BadMagic: return "bad-magic";
        case ErrorKind::TruncatedPayload: return "truncated-payload";
        case ErrorKind::NonFinitePayload: return "non-finite-payload";
        case ErrorKind::UnknownName: return "unknown-name";
        case ErrorKind::NotFound: return "not-found";
        case ErrorKind::OutOfBounds: return "out-of-bounds";
        case ErrorKind::EmptyUnion: return "empty-union";
        case ErrorKind::DegenerateInput: return "degenerate-input";
        case ErrorKind::EmptyInput: return "empty-input";
        case ErrorKind::InvalidParameter: return "invalid-parameter";
        case ErrorKind::ZeroWeightSum: return "zero-weight-sum";
    }
    return "unknown";
}

CategoryId::CategoryId(int value) : value_(static_cast<std::uint8_t>(value)) {
    if (!is_valid(value))
        throw Error(ErrorKind::InvalidLabel, fmt::format("invalid category id {}", value));
}

void CategorySet::insert(CategoryId id) {
    if (id.is_ignore())
        throw Error(ErrorKind::InvalidParameter, "the ignore label cannot be selected");
    bits_.set(id.index());
}

namespace {

int parse_int_field(std::string_view field, int line_no, const char* what) {
    int value = 0;
    const auto* end = field.data() + field.size();
    auto [ptr, ec] = std::from_chars(field.data(), end, value);
    if (ec != std::errc() || ptr != end || field.empty())
        throw Error(ErrorKind::Parse,
                    fmt::format("category config line {}: bad {} '{}'", line_no, what, field));
    return value;
}

std::uint8_t parse_channel(std::string_view field, int line_no) {
    int v = parse_int_field(field, line_no, "color channel");
    if (v < 0 || v > 255)
        throw Error(ErrorKind::Parse,
                    fmt::format("category config line {}: channel {} outside 0-255", line_no, v));
    return static_cast<std::uint8_t>(v);
}

}  // namespace

CategoryTable CategoryTable::parse(std::string_view text) {
    CategoryTable table;
    table.trailing_newline_ = text.empty() || text.back() == '\n';

    std::array<bool, CategoryId::kEvaluableCount> seen{};
    bool seen_ignore = false;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        std::string_view line = text.substr(pos, eol - pos);
        pos = eol + 1;
        ++line_no;

        std::vector<std::string_view> fields;
        std::size_t start = 0;
        while (true) {
            std::size_t comma = line.find(',', start);
            fields.push_back(line.substr(start, comma == std::string_view::npos ? comma : comma - start));
            if (comma == std::string_view::npos) break;
            start = comma + 1;
        }
        if (fields.size() != 5)
            throw Error(ErrorKind::Parse,
                        fmt::format("category config line {}: expected 5 fields, got {}",
                                    line_no, fields.size()));

        int raw_id = parse_int_field(fields[0], line_no, "id");
        if (!CategoryId::is_valid(raw_id))
            throw Error(ErrorKind::Parse,
                        fmt::format("category config line {}: id {} is not a trainId", line_no, raw_id));
        CategoryEntry entry{CategoryId(raw_id), std::string(fields[1]),
                            Rgb{parse_channel(fields[2], line_no), parse_channel(fields[3], line_no),
                                parse_channel(fields[4], line_no)}};
        if (entry.name.empty())
            throw Error(ErrorKind::Parse, fmt::format("category config line {}: empty name", line_no));

        if (entry.id.is_ignore()) {
            if (seen_ignore)
                throw Error(ErrorKind::Parse, "category config: duplicate ignore entry");
            seen_ignore = true;
            table.ignore_name_ = entry.name;
            table.ignore_color_ = entry.color;
        } else {
            if (seen[entry.id.index()])
                throw Error(ErrorKind::Parse,
                            fmt::format("category config: duplicate id {}", raw_id));
            seen[entry.id.index()] = true;
        }
        for (const auto& other : table.file_order_) {
            if (other.name == entry.name)
                throw Error(ErrorKind::Parse,
                            fmt::format("category config: duplicate name '{}'", entry.name));
        }
        table.file_order_.push_back(std::move(entry));
    }

    for (int id = 0; id < CategoryId::kEvaluableCount; ++id) {
        if (!seen[id])
            throw Error(ErrorKind::Parse, fmt::format("category config: missing id {}", id));
    }

    table.evaluable_.resize(CategoryId::kEvaluableCount, CategoryEntry{CategoryId::ignore(), {}, {}});
    for (const auto& entry : table.file_order_) {
        if (!entry.id.is_ignore()) table.evaluable_[entry.id.index()] = entry;
    }
    return table;
}

CategoryTable CategoryTable::load(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(ErrorKind::MissingFile, fmt::format("cannot open category config {}", path.string()));
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse(buf.str());
}

const CategoryTable& CategoryTable::builtin() {
    static const CategoryTable table = parse(kBuiltinCategoryConfig);
    return table;
}

std::string CategoryTable::serialize() const {
    std::string out;
    for (std::size_t i = 0; i < file_order_.size(); ++i) {
        const auto& e = file_order_[i];
        out += fmt::format("{},{},{},{},{}", e.id.value(), e.name, e.color.r, e.color.g, e.color.b);
        if (i + 1 < file_order_.size() || trailing_newline_) out += '\n';
    }
    return out;
}

CategoryId CategoryTable::by_name(std::string_view name) const {
    for (const auto& e : evaluable_) {
        if (e.name == name) return e.id;
    }
    if (name == ignore_name_ || name == "ignore") return CategoryId::ignore();
    throw Error(ErrorKind::UnknownName, fmt::format("unknown category '{}'", name));
}

const std::string& CategoryTable::name_of(CategoryId id) const {
    return id.is_ignore() ? ignore_name_ : evaluable_[id.index()].name;
}

Rgb CategoryTable::color_of(CategoryId id) const {
    return id.is_ignore() ? ignore_color_ : evaluable_[id.index()].color;
}

CategorySet parse_category_list(const CategoryTable& table, std::string_view list) {
    CategorySet set;
    std::size_t start = 0;
    while (start <= list.size() && !list.empty()) {
        std::size_t comma = list.find(',', start);
        std::string_view name =
            list.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        if (!name.empty()) {
            CategoryId id = table.by_name(name);
            if (id.is_ignore())
                throw Error(ErrorKind::InvalidParameter, "the ignore label cannot be selected");
            set.insert(id);
        }
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return set;
}

namespace {

void check_dims(int width, int height, std::size_t count, const char* what) {
    if (width < 0 || height < 0)
        throw Error(ErrorKind::InvalidParameter,
                    fmt::format("{}: negative dimensions {}x{}", what, width, height));
    if (count != static_cast<std::size_t>(width) * static_cast<std::size_t>(height))
        throw Error(ErrorKind::DimensionMismatch,
                    fmt::format("{}: {} values for {}x{}", what, count, width, height));
}

void check_in_bounds(int x, int y, int width, int height) {
    if (x < 0 || y < 0 || x >= width || y >= height)
        throw Error(ErrorKind::OutOfBounds,
                    fmt::format("pixel ({}, {}) outside {}x{}", x, y, width, height));
}

}  // namespace

LabelMap::LabelMap(int width, int height, std::vector<std::uint8_t> labels)
    : width_(width), height_(height), labels_(std::move(labels)) {
    check_dims(width, height, labels_.size(), "label map");
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        if (!CategoryId::is_valid(labels_[i])) {
            throw Error(ErrorKind::InvalidLabel,
                        fmt::format("invalid label {} at ({}, {})", labels_[i],
                                    i % static_cast<std::size_t>(width), i / static_cast<std::size_t>(width)));
        }
    }
}

LabelMap::LabelMap(int width, int height, CategoryId fill)
    : LabelMap(width, height,
               std::vector<std::uint8_t>(static_cast<std::size_t>(std::max(width, 0)) *
                                             static_cast<std::size_t>(std::max(height, 0)),
                                         fill.value())) {}

CategoryId LabelMap::at(int x, int y) const {
    check_in_bounds(x, y, width_, height_);
    return CategoryId(labels_[static_cast<std::size_t>(y) * width_ + x]);
}

RgbImage::RgbImage(int width, int height, std::vector<Rgb> pixels)
    : width_(width), height_(height), pixels_(std::move(pixels)) {
    check_dims(width, height, pixels_.size(), "rgb image");
}

RgbImage::RgbImage(int width, int height, Rgb fill)
    : RgbImage(width, height,
               std::vector<Rgb>(static_cast<std::size_t>(std::max(width, 0)) *
                                    static_cast<std::size_t>(std::max(height, 0)),
                                fill)) {}

Rgb RgbImage::at(int x, int y) const {
    check_in_bounds(x, y, width_, height_);
    return pixels_[static_cast<std::size_t>(y) * width_ + x];
}

WeightField::WeightField(int width, int height, std::vector<float> weights)
    : width_(width), height_(height), weights_(std::move(weights)) {
    check_dims(width, height, weights_.size(), "weight field");
    for (std::size_t i = 0; i < weights_.size(); ++i) {
        float& w = weights_[i];
        if (!std::isfinite(w)) {
            throw Error(ErrorKind::NonFinitePayload,
                        fmt::format("non-finite weight at ({}, {})", i % static_cast<std::size_t>(width),
                                    i / static_cast<std::size_t>(width)));
        }
        w = std::clamp(w, 0.0f, 1.0f);
    }
}

float WeightField::at(int x, int y) const {
    check_in_bounds(x, y, width_, height_);
    return weights_[static_cast<std::size_t>(y) * width_ + x];
}

CompositeParams::CompositeParams(double alpha1, double alpha2, ColormapId colormap)
    : alpha1_(alpha1), alpha2_(alpha2), colormap_(std::move(colormap)) {
    if (!std::isfinite(alpha1) || !std::isfinite(alpha2))
        throw Error(ErrorKind::InvalidParameter, "opacities must be finite");
    if (!(alpha1 > 0.0 && alpha1 <= 1.0))
        throw Error(ErrorKind::InvalidParameter, fmt::format("alpha1 {} outside (0, 1]", alpha1));
    if (!(alpha2 >= 0.0 && alpha2 <= 1.0))
        throw Error(ErrorKind::InvalidParameter, fmt::format("alpha2 {} outside [0, 1]", alpha2));
    if (!(alpha1 > alpha2))
        throw Error(ErrorKind::InvalidParameter,
                    fmt::format("alpha1 ({}) must exceed alpha2 ({})", alpha1, alpha2));
    if (colormap_.bins < 2)
        throw Error(ErrorKind::InvalidParameter, fmt::format("bins {} < 2", colormap_.bins));
}

}  // namespace segscope
