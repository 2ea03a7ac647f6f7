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

#include "segscope/fixtures.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <random>
#include <sstream>

#include <fmt/format.h>
#include <json.hpp>

#include "segscope/png_io.hpp"
#include "segscope/weight_io.hpp"

namespace segscope {

namespace fs = std::filesystem;
using nlohmann::json;

double rect_iou_percent(const Rect& a, const Rect& b) {
    const int ix = std::max(0, std::min(a.x + a.width, b.x + b.width) - std::max(a.x, b.x));
    const int iy = std::max(0, std::min(a.y + a.height, b.y + b.height) - std::max(a.y, b.y));
    const auto inter = static_cast<std::uint64_t>(ix) * static_cast<std::uint64_t>(iy);
    const std::uint64_t uni = a.area() + b.area() - inter;
    if (uni == 0) throw Error(ErrorKind::EmptyUnion, "both rectangles are empty");
    return 100.0 * static_cast<double>(inter) / static_cast<double>(uni);
}

namespace {

constexpr int kGridCols = 4;
constexpr int kGridRows = 2;

// std::uniform_*_distribution output is implementation defined; these keep
// fixtures identical across standard libraries.
class FixtureRng {
public:
    explicit FixtureRng(std::uint64_t seed) : engine_(seed) {}

    int uniform_int(int lo, int hi) {
        const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
        const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                    std::numeric_limits<std::uint64_t>::max() % span;
        std::uint64_t v;
        do {
            v = engine_();
        } while (v >= limit);
        return lo + static_cast<int>(v % span);
    }

    double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    template <typename T>
    void shuffle(std::vector<T>& items) {
        for (std::size_t i = items.size(); i > 1; --i) {
            const auto j = static_cast<std::size_t>(uniform_int(0, static_cast<int>(i) - 1));
            std::swap(items[i - 1], items[j]);
        }
    }

private:
    std::mt19937_64 engine_;
};

struct Cell {
    int x, y, width, height;
};

struct Shape {
    int width, height, dx, dy;
};

// IoU target for the trend categories, linear in area over [8x8, 40x40].
double trend_iou(std::uint64_t area, bool rising, double noise) {
    const double t = (static_cast<double>(area) - 64.0) / (1600.0 - 64.0);
    const double iou = rising ? 0.30 + 0.62 * t : 0.92 - 0.62 * t;
    return std::clamp(iou + noise, 0.05, 1.0);
}

Shape draw_shape(FixtureRng& rng, CategoryId category, bool perfect) {
    Shape s{};
    if (category == kRisingTrendCategory || category == kFallingTrendCategory) {
        s.width = rng.uniform_int(8, 38);
        s.height = std::clamp(s.width + rng.uniform_int(-2, 2), 8, 40);
        const double noise = (rng.uniform01() - 0.5) * 0.04;
        const double iou = trend_iou(static_cast<std::uint64_t>(s.width) * s.height,
                                     category == kRisingTrendCategory, noise);
        // A horizontal shift d of a w-wide box gives IoU (w - d) / (w + d).
        const int shift = static_cast<int>(std::lround(s.width * (1.0 - iou) / (1.0 + iou)));
        s.dx = rng.uniform_int(0, 1) == 0 ? -shift : shift;
        s.dy = 0;
    } else {
        s.width = rng.uniform_int(6, 40);
        s.height = rng.uniform_int(6, 40);
        s.dx = rng.uniform_int(-6, 6);
        s.dy = rng.uniform_int(-6, 6);
    }
    if (perfect) s.dx = s.dy = 0;
    return s;
}

Rect place(FixtureRng& rng, const Cell& cell, const Shape& s) {
    const int x_lo = cell.x + std::max(0, -s.dx);
    const int x_hi = cell.x + cell.width - s.width - std::max(0, s.dx);
    const int y_lo = cell.y + std::max(0, -s.dy);
    const int y_hi = cell.y + cell.height - s.height - std::max(0, s.dy);
    if (x_hi < x_lo || y_hi < y_lo)
        throw Error(ErrorKind::InvalidParameter,
                    fmt::format("fixture cell {}x{} too small for {}x{} shifted by ({}, {})", cell.width,
                                cell.height, s.width, s.height, s.dx, s.dy));
    return Rect{rng.uniform_int(x_lo, x_hi), rng.uniform_int(y_lo, y_hi), s.width, s.height};
}

void paint(std::vector<std::uint8_t>& labels, int width, const Rect& r, CategoryId c) {
    for (int y = r.y; y < r.y + r.height; ++y)
        std::fill_n(labels.begin() + static_cast<std::ptrdiff_t>(y) * width + r.x, r.width, c.value());
}

RgbImage render_scene(const FixtureImage& image, int width, int height, const CategoryTable& categories) {
    std::vector<Rgb> pixels(static_cast<std::size_t>(width) * height);
    for (int y = 0; y < height; ++y) {
        for (int x = 0; x < width; ++x) {
            pixels[static_cast<std::size_t>(y) * width + x] =
                Rgb{static_cast<std::uint8_t>(x * 255 / std::max(1, width - 1)),
                    static_cast<std::uint8_t>(y * 255 / std::max(1, height - 1)), 96};
        }
    }
    for (const auto& obj : image.objects) {
        if (!obj.given) continue;
        const Rect& r = *obj.given;
        const Rgb color = categories.color_of(obj.category);
        for (int y = r.y; y < r.y + r.height; ++y)
            std::fill_n(pixels.begin() + static_cast<std::ptrdiff_t>(y) * width + r.x, r.width, color);
    }
    return RgbImage(width, height, std::move(pixels));
}

WeightField radial_bump(const Rect& r, int width, int height) {
    const double cx = r.x + r.width / 2.0;
    const double cy = r.y + r.height / 2.0;
    const double sigma = std::max(r.width, r.height) / 2.0;
    std::vector<float> weights(static_cast<std::size_t>(width) * height);
    for (int y = 0; y < height; ++y) {
        for (int x = 0; x < width; ++x) {
            const double dx = x + 0.5 - cx;
            const double dy = y + 0.5 - cy;
            weights[static_cast<std::size_t>(y) * width + x] =
                static_cast<float>(std::exp(-(dx * dx + dy * dy) / (2.0 * sigma * sigma)));
        }
    }
    return WeightField(width, height, std::move(weights));
}

json rect_json(const std::optional<Rect>& r) {
    if (!r) return nullptr;
    return json::array({r->x, r->y, r->width, r->height});
}

std::optional<Rect> rect_from_json(const json& j) {
    if (j.is_null()) return std::nullopt;
    return Rect{j.at(0).get<int>(), j.at(1).get<int>(), j.at(2).get<int>(), j.at(3).get<int>()};
}

void write_text(const fs::path& path, const std::string& text) {
    write_file_bytes(path, std::span(reinterpret_cast<const std::uint8_t*>(text.data()), text.size()));
}

}  // namespace

DatasetManifest generate_fixtures(std::uint64_t seed, int n_images, const fs::path& out_dir,
                                  const CategoryTable& categories, const FixtureOptions& options) {
    if (n_images < 0) throw Error(ErrorKind::InvalidParameter, "image count must be non-negative");
    if (options.width < 8 * kGridCols || options.height < 8 * kGridRows)
        throw Error(ErrorKind::InvalidParameter,
                    fmt::format("fixture size {}x{} too small", options.width, options.height));

    const int width = options.width;
    const int height = options.height;
    std::vector<Cell> cells;
    for (int row = 0; row < kGridRows; ++row) {
        for (int col = 0; col < kGridCols; ++col) {
            const int x0 = col * width / kGridCols;
            const int y0 = row * height / kGridRows;
            cells.push_back(Cell{x0, y0, (col + 1) * width / kGridCols - x0, (row + 1) * height / kGridRows - y0});
        }
    }

    std::error_code ec;
    for (const char* sub : {"images", "given", "pred", "weights"}) {
        fs::create_directories(out_dir / sub, ec);
        if (ec)
            throw Error(ErrorKind::Io, fmt::format("cannot create {}: {}", (out_dir / sub).string(), ec.message()));
    }

    FixtureRng rng(seed);
    FixtureTruth truth{seed, width, height, {}};
    DatasetManifest manifest;
    manifest.root = ".";
    manifest.base = out_dir;

    std::vector<CategoryId> others;
    for (int c = 0; c < CategoryId::kEvaluableCount; ++c) {
        CategoryId id(c);
        if (id != kRisingTrendCategory && id != kFallingTrendCategory) others.push_back(id);
    }

    for (int i = 0; i < n_images; ++i) {
        FixtureImage image;
        image.image_id = fmt::format("img_{:03d}", i);
        image.perfect = i == 0;

        // The perfect image would pin the trend categories at IoU 100, so it
        // carries only untrended ones.
        std::vector<CategoryId> present;
        if (!image.perfect) present = {kRisingTrendCategory, kFallingTrendCategory};
        std::vector<CategoryId> pool = others;
        rng.shuffle(pool);
        const int extra = rng.uniform_int(2, 4) + (image.perfect ? 2 : 0);
        present.insert(present.end(), pool.begin(), pool.begin() + extra);
        std::sort(present.begin(), present.end());

        std::vector<std::size_t> cell_order(cells.size());
        for (std::size_t k = 0; k < cell_order.size(); ++k) cell_order[k] = k;
        rng.shuffle(cell_order);

        std::size_t next_cell = 0;
        for (CategoryId category : present) {
            const Shape s = draw_shape(rng, category, image.perfect);
            const Rect given = place(rng, cells[cell_order[next_cell++]], s);
            image.objects.push_back(
                FixtureObject{category, given, Rect{given.x + s.dx, given.y + s.dy, given.width, given.height}});
        }
        const bool false_positive = !image.perfect && rng.uniform_int(0, 1) == 1;
        if (false_positive) {
            const CategoryId category = pool[static_cast<std::size_t>(extra)];
            Shape s = draw_shape(rng, category, true);
            image.objects.push_back(
                FixtureObject{category, std::nullopt, place(rng, cells[cell_order[next_cell++]], s)});
        }

        std::vector<std::uint8_t> given_labels(static_cast<std::size_t>(width) * height, CategoryId::kIgnoreValue);
        std::vector<std::uint8_t> pred_labels = given_labels;
        for (const auto& obj : image.objects) {
            if (obj.given) paint(given_labels, width, *obj.given, obj.category);
            if (obj.pred) paint(pred_labels, width, *obj.pred, obj.category);
        }

        ManifestEntry entry{image.image_id,
                            fs::path("images") / (image.image_id + ".png"),
                            fs::path("given") / (image.image_id + ".png"),
                            fs::path("pred") / (image.image_id + ".png"),
                            fs::path("weights")};
        write_rgb_image(render_scene(image, width, height, categories), out_dir / entry.image);
        write_label_map(LabelMap(width, height, std::move(given_labels)), out_dir / entry.given);
        write_label_map(LabelMap(width, height, std::move(pred_labels)), out_dir / entry.pred);

        for (const auto& obj : image.objects) {
            const fs::path dir = out_dir / "weights" / categories.name_of(obj.category);
            fs::create_directories(dir, ec);
            if (ec) throw Error(ErrorKind::Io, fmt::format("cannot create {}: {}", dir.string(), ec.message()));
            write_weight_field(radial_bump(obj.given ? *obj.given : *obj.pred, width, height),
                               dir / (image.image_id + ".wgt"));
        }

        manifest.entries.push_back(std::move(entry));
        truth.images.push_back(std::move(image));
    }

    json images = json::array();
    for (const auto& image : truth.images) {
        json objects = json::array();
        for (const auto& obj : image.objects) {
            objects.push_back({{"category", obj.category.value()},
                               {"given", rect_json(obj.given)},
                               {"pred", rect_json(obj.pred)}});
        }
        images.push_back({{"image_id", image.image_id}, {"perfect", image.perfect}, {"objects", std::move(objects)}});
    }
    json doc = {{"seed", seed}, {"width", width}, {"height", height}, {"images", std::move(images)}};
    write_text(out_dir / kFixtureTruthFile, doc.dump(2) + "\n");
    write_text(out_dir / kFixtureManifestFile, serialize_manifest(manifest));
    return manifest;
}

FixtureTruth load_fixture_truth(const fs::path& path) {
    const auto bytes = read_file_bytes(path);
    json doc;
    try {
        doc = json::parse(bytes.begin(), bytes.end());
        FixtureTruth truth;
        truth.seed = doc.at("seed").get<std::uint64_t>();
        truth.width = doc.at("width").get<int>();
        truth.height = doc.at("height").get<int>();
        for (const auto& img : doc.at("images")) {
            FixtureImage image;
            image.image_id = img.at("image_id").get<std::string>();
            image.perfect = img.at("perfect").get<bool>();
            for (const auto& obj : img.at("objects")) {
                image.objects.push_back(FixtureObject{CategoryId(obj.at("category").get<int>()),
                                                      rect_from_json(obj.at("given")),
                                                      rect_from_json(obj.at("pred"))});
            }
            truth.images.push_back(std::move(image));
        }
        return truth;
    } catch (const json::exception& e) {
        throw Error(ErrorKind::Parse, fmt::format("{}: {}", path.string(), e.what()));
    }
}

}  // namespace segscope
