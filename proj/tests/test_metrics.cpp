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

#include <doctest.h>

#include <fstream>
#include <numeric>
#include <random>
#include <sstream>
#include <tuple>

#include "oracles.hpp"
#include "segscope/fixtures.hpp"
#include "segscope/metrics.hpp"
#include "segscope/png_io.hpp"
#include "segscope/resize.hpp"

using namespace segscope;
using namespace segscope::testing;
namespace fs = std::filesystem;

namespace {

ErrorKind kind_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected segscope::Error");
    return ErrorKind::Io;
}

Grid columns(int size, int c, int first, int last, int background = 255) {
    Grid g(size, std::vector<int>(size, background));
    for (auto& row : g)
        for (int x = first; x <= last; ++x) row[x] = c;
    return g;
}

// Rescans every pixel once per category.
std::vector<MaskRecord> oracle_mask_rows(const std::string& id, const LabelMap& given, const LabelMap& pred) {
    std::vector<MaskRecord> rows;
    for (int c = 0; c < CategoryId::kEvaluableCount; ++c) {
        std::uint64_t size = 0;
        for (int y = 0; y < given.height(); ++y)
            for (int x = 0; x < given.width(); ++x) size += given.at(x, y).value() == c;
        if (size == 0) continue;
        rows.push_back({id, CategoryId(c), oracle_iou_percent(given, pred, c), size});
    }
    return rows;
}

DatasetManifest write_random_dataset(const fs::path& dir, std::uint64_t seed, int n, int w, int h) {
    std::mt19937_64 rng(seed);
    std::ostringstream json;
    json << R"({"root": ".", "entries": [)";
    for (int i = 0; i < n; ++i) {
        // Ids deliberately not in lexicographic creation order.
        const std::string id = "im" + std::to_string((i * 7) % n);
        write_rgb_image(RgbImage(w, h, Rgb{9, 9, 9}), dir / (id + ".png"));
        write_label_map(random_label_map(rng, w, h, {0, 2, 5, 13, 255}), dir / (id + "_g.png"));
        write_label_map(random_label_map(rng, w, h, {0, 5, 11, 13, 255}), dir / (id + "_p.png"));
        json << (i ? "," : "") << R"({"image_id": ")" << id << R"(", "image": ")" << id << R"(.png", "given": ")"
             << id << R"(_g.png", "pred": ")" << id << R"(_p.png"})";
    }
    json << "]}";
    std::ofstream(dir / "manifest.json") << json.str();
    return load_manifest(dir / "manifest.json");
}

}  // namespace

TEST_CASE("iou_percent examples") {
    const auto a = to_label_map(columns(8, 4, 0, 3));
    const auto b = to_label_map(columns(8, 4, 2, 5));
    CHECK(iou_percent(a, b, CategoryId(4)) == doctest::Approx(100.0 * 16 / 48).epsilon(1e-12));
    CHECK(oracle_iou_percent(a, b, 4) == doctest::Approx(33.3333333333).epsilon(1e-9));
    CHECK(iou_percent(a, a, CategoryId(4)) == 100.0);
    const auto c = to_label_map(columns(8, 4, 5, 7));
    CHECK(iou_percent(a, c, CategoryId(4)) == 0.0);

    CHECK(kind_of([&] { iou_percent(a, b, CategoryId(9)); }) == ErrorKind::EmptyUnion);
    CHECK(kind_of([&] { iou_percent(a, b, CategoryId::ignore()); }) == ErrorKind::InvalidParameter);
    CHECK(kind_of([&] { iou_percent(a, LabelMap(8, 7, CategoryId(4)), CategoryId(4)); }) ==
          ErrorKind::DimensionMismatch);
}

TEST_CASE("iou_percent matches the oracle, is symmetric and permutation invariant") {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 100; ++trial) {
        const auto g = random_label_map(rng, 17, 9, {0, 1, 2, 255});
        const auto p = random_label_map(rng, 17, 9, {0, 1, 3, 255});
        std::vector<std::size_t> perm(g.pixel_count());
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<std::uint8_t> gp(perm.size()), pp(perm.size());
        for (std::size_t i = 0; i < perm.size(); ++i) {
            gp[i] = g.raw()[perm[i]];
            pp[i] = p.raw()[perm[i]];
        }
        const LabelMap g2(17, 9, gp), p2(17, 9, pp);
        for (int c : {0, 1, 2, 3}) {
            const auto counts = oracle_counts(g);
            const auto pcounts = oracle_counts(p);
            if (!counts.count(c) && !pcounts.count(c)) continue;
            const double v = iou_percent(g, p, CategoryId(c));
            CHECK(v == doctest::Approx(oracle_iou_percent(g, p, c)).epsilon(1e-12));
            CHECK(v == iou_percent(p, g, CategoryId(c)));
            CHECK(v == iou_percent(g2, p2, CategoryId(c)));
            CHECK(count_pair(g, p).iou_percent(c) == v);
        }
    }
}

TEST_CASE("object_size") {
    CHECK(object_size(LabelMap(1024, 512, CategoryId(3)), CategoryId(3)) == 524288);
    CHECK(object_size(LabelMap(16, 16, CategoryId(3)), CategoryId(4)) == 0);
    std::vector<std::uint8_t> px(100 * 50, 255);
    for (int y = 10; y < 30; ++y)
        for (int x = 5; x < 45; ++x) px[y * 100 + x] = 13;
    CHECK(object_size(LabelMap(100, 50, px), CategoryId(13)) == Rect{5, 10, 40, 20}.area());
}

TEST_CASE("occupancy_table") {
    SUBCASE("single full-frame class") {
        const auto rows = occupancy_table("a", LabelMap(4, 4, CategoryId(2)), LabelMap(4, 4, CategoryId(2)));
        REQUIRE(rows.size() == 1);
        CHECK(rows[0] == OccupancyRecord{"a", CategoryId(2), 100.0, 100.0, 100.0});
    }
    SUBCASE("half and half") {
        const auto m = to_label_map({{0, 0, 1, 1}, {0, 0, 1, 1}, {0, 0, 1, 1}, {0, 0, 1, 1}});
        const auto rows = occupancy_table("a", m, m);
        REQUIRE(rows.size() == 2);
        CHECK(rows[0] == OccupancyRecord{"a", CategoryId(0), 50.0, 50.0, 100.0});
        CHECK(rows[1] == OccupancyRecord{"a", CategoryId(1), 50.0, 50.0, 100.0});
    }
    SUBCASE("ignore pixels count in the denominator") {
        const auto given = to_label_map({{255, 255, 1, 1}, {255, 255, 1, 1}, {0, 0, 1, 1}, {0, 0, 1, 1}});
        const auto pred = to_label_map({{7, 7, 7, 7}, {1, 1, 1, 1}, {0, 0, 1, 1}, {0, 0, 1, 1}});
        const auto rows = occupancy_table("a", given, pred);
        double given_sum = 0.0, pred_sum = 0.0;
        for (const auto& r : rows) {
            given_sum += r.given_occupancy_pct;
            pred_sum += r.pred_occupancy_pct;
        }
        CHECK(given_sum == doctest::Approx(75.0).epsilon(1e-12));
        CHECK(pred_sum == doctest::Approx(100.0).epsilon(1e-12));
        // Class 7 is prediction-only and still gets a row.
        REQUIRE(rows.size() == 3);
        CHECK(rows[2].category == CategoryId(7));
        CHECK(rows[2].given_occupancy_pct == 0.0);
        CHECK(rows[2].pred_occupancy_pct == 25.0);
        CHECK(rows[2].iou_percent == 0.0);
    }
    SUBCASE("conservation on random maps") {
        std::mt19937_64 rng(8);
        for (int i = 0; i < 30; ++i) {
            const auto g = random_label_map(rng, 23, 11, {0, 1, 4, 9, 18, 255});
            const auto p = random_label_map(rng, 23, 11, {0, 2, 4, 255});
            const auto rows = occupancy_table("x", g, p);
            const auto gc = oracle_counts(g), pc = oracle_counts(p);
            auto ignore = [](const auto& counts) { return counts.count(255) ? counts.at(255) : 0; };
            double gs = 100.0 * ignore(gc) / 253.0, ps = 100.0 * ignore(pc) / 253.0;
            for (const auto& r : rows) {
                gs += r.given_occupancy_pct;
                ps += r.pred_occupancy_pct;
            }
            CHECK(std::abs(gs - 100.0) <= 1e-9);
            CHECK(std::abs(ps - 100.0) <= 1e-9);
        }
    }
    SUBCASE("dimension mismatch") {
        CHECK(kind_of([] { occupancy_table("a", LabelMap(4, 4, CategoryId(0)), LabelMap(4, 3, CategoryId(0))); }) ==
              ErrorKind::DimensionMismatch);
    }
}

TEST_CASE("mask table rows and ordering") {
    SUBCASE("one class gives one row") {
        PairCounts counts = count_pair(LabelMap(4, 4, CategoryId(0)), LabelMap(4, 4, CategoryId(1)));
        const auto rows = mask_records("a", counts);
        REQUIRE(rows.size() == 1);
        CHECK(rows[0] == MaskRecord{"a", CategoryId(0), 0.0, 16});
    }
    SUBCASE("prediction-only classes get no row") {
        const auto g = to_label_map({{0, 0}, {255, 255}});
        const auto p = to_label_map({{0, 3}, {3, 3}});
        const auto rows = mask_records("a", count_pair(g, p));
        REQUIRE(rows.size() == 1);
        CHECK(rows[0].category == CategoryId(0));
        CHECK(rows[0].iou_percent == 50.0);
    }
    SUBCASE("sorting and duplicates") {
        const MaskTable t({{"b", CategoryId(1), 1, 1}, {"a", CategoryId(5), 1, 1}, {"a", CategoryId(2), 1, 1}});
        CHECK(t.rows()[0].image_id == "a");
        CHECK(t.rows()[0].category == CategoryId(2));
        CHECK(t.rows()[2].image_id == "b");
        CHECK(kind_of([] { MaskTable({{"a", CategoryId(1), 1, 1}, {"a", CategoryId(1), 2, 2}}); }) ==
              ErrorKind::InvalidParameter);
    }
}

TEST_CASE("build_mask_table equals the brute-force oracle on small maps") {
    TempDir dir("mt_small");
    const auto manifest = write_random_dataset(dir.path(), 99, 12, 64, 48);
    std::vector<MaskRecord> expect;
    for (const auto& e : manifest.entries) {
        const auto rows = oracle_mask_rows(e.image_id, load_label_map(manifest.resolve(e.given)),
                                           load_label_map(manifest.resolve(e.pred)));
        expect.insert(expect.end(), rows.begin(), rows.end());
    }
    std::sort(expect.begin(), expect.end(), [](const MaskRecord& a, const MaskRecord& b) {
        return std::tie(a.image_id, a.category) < std::tie(b.image_id, b.category);
    });

    for (unsigned threads : {1u, 3u, 0u}) {
        const auto table = build_mask_table(manifest, std::nullopt, threads);
        REQUIRE(table.size() == expect.size());
        for (std::size_t i = 0; i < expect.size(); ++i) {
            CHECK(table.rows()[i].image_id == expect[i].image_id);
            CHECK(table.rows()[i].category == expect[i].category);
            CHECK(table.rows()[i].size_pixels == expect[i].size_pixels);
            CHECK(table.rows()[i].iou_percent == doctest::Approx(expect[i].iou_percent).epsilon(1e-12));
        }
    }
}

TEST_CASE("build_mask_table on fixtures") {
    TempDir dir("mt_fix");
    const auto& categories = CategoryTable::builtin();
    generate_fixtures(5, 8, dir.path(), categories);
    const auto manifest = load_manifest(dir / kFixtureManifestFile);
    const auto truth = load_fixture_truth(dir / kFixtureTruthFile);

    SUBCASE("native resolution matches rectangle geometry") {
        const auto table = build_mask_table(manifest, std::nullopt);
        std::size_t expected_rows = 0;
        for (const auto& img : truth.images) {
            for (const auto& obj : img.objects) {
                if (!obj.given) continue;
                ++expected_rows;
                const auto it = std::find_if(table.rows().begin(), table.rows().end(), [&](const MaskRecord& r) {
                    return r.image_id == img.image_id && r.category == obj.category;
                });
                REQUIRE(it != table.rows().end());
                CHECK(it->size_pixels == obj.given->area());
                CHECK(it->iou_percent == doctest::Approx(rect_iou_percent(*obj.given, *obj.pred)).epsilon(1e-12));
                if (img.perfect) CHECK(it->iou_percent == 100.0);
            }
        }
        CHECK(table.size() == expected_rows);
        for (const auto& r : table.rows()) {
            CHECK(r.iou_percent >= 0.0);
            CHECK(r.iou_percent <= 100.0);
            CHECK(r.size_pixels >= 1);
        }
    }
    SUBCASE("working resolution scales sizes and keeps IoU") {
        const auto native = build_mask_table(manifest, std::nullopt);
        const auto working = build_mask_table(manifest);
        REQUIRE(native.size() == working.size());
        const std::uint64_t scale = (1024 / truth.width) * (512 / truth.height);
        for (std::size_t i = 0; i < native.size(); ++i) {
            CHECK(working.rows()[i].size_pixels == native.rows()[i].size_pixels * scale);
            CHECK(working.rows()[i].iou_percent == doctest::Approx(native.rows()[i].iou_percent).epsilon(1e-12));
        }
    }
    SUBCASE("occupancy tables cover every image") {
        const auto tables = build_dataset_tables(manifest, std::nullopt);
        CHECK(tables.occupancy.size() == manifest.entries.size());
        for (const auto& e : manifest.entries) {
            const auto g = load_label_map(manifest.resolve(e.given));
            const auto p = load_label_map(manifest.resolve(e.pred));
            CHECK(tables.occupancy.at(e.image_id) == occupancy_table(e.image_id, g, p));
        }
    }
}

TEST_CASE("build_mask_table annotates load errors with the image id") {
    TempDir dir("mt_err");
    auto manifest = write_random_dataset(dir.path(), 1, 3, 8, 8);
    std::ofstream(dir / "im1_g.png", std::ios::binary | std::ios::trunc) << "not a png";
    try {
        build_mask_table(manifest);
        FAIL("expected decode error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Decode);
        CHECK(std::string(e.what()).find("im1") != std::string::npos);
    }
}

TEST_CASE("mask table csv") {
    const MaskTable t({{"img_001", CategoryId(13), 100.0 / 3.0, 3200}, {"img_000", CategoryId(0), 100.0, 1}});
    std::ostringstream out;
    write_mask_table_csv(out, t, CategoryTable::builtin());
    CHECK(out.str() ==
          "image_id,category,iou_percent,size_pixels\n"
          "img_000,road,100.000000,1\n"
          "img_001,car,33.333333,3200\n");
}
