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

#include "segscope/metrics.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

#include <fmt/format.h>

#include "segscope/png_io.hpp"
#include "segscope/resize.hpp"

namespace segscope {

namespace {

void require_same_size(const LabelMap& a, const LabelMap& b) {
    if (a.width() != b.width() || a.height() != b.height())
        throw Error(ErrorKind::DimensionMismatch,
                    fmt::format("mask sizes differ: {}x{} vs {}x{}", a.width(), a.height(), b.width(),
                                b.height()));
}

}  // namespace

double iou_percent(const LabelMap& given, const LabelMap& pred, CategoryId category) {
    require_same_size(given, pred);
    if (category.is_ignore())
        throw Error(ErrorKind::InvalidParameter, "IoU is undefined for the ignore label");
    const std::uint8_t c = category.value();
    const auto g = given.raw();
    const auto p = pred.raw();
    std::uint64_t inter = 0;
    std::uint64_t uni = 0;
    for (std::size_t i = 0; i < g.size(); ++i) {
        const bool in_g = g[i] == c;
        const bool in_p = p[i] == c;
        inter += static_cast<std::uint64_t>(in_g && in_p);
        uni += static_cast<std::uint64_t>(in_g || in_p);
    }
    if (uni == 0)
        throw Error(ErrorKind::EmptyUnion,
                    fmt::format("category {} is absent from both masks", category.value()));
    return 100.0 * static_cast<double>(inter) / static_cast<double>(uni);
}

std::uint64_t object_size(const LabelMap& map, CategoryId category) {
    const auto raw = map.raw();
    return static_cast<std::uint64_t>(std::count(raw.begin(), raw.end(), category.value()));
}

double PairCounts::iou_percent(std::size_t c) const {
    const std::uint64_t uni = union_of(c);
    if (uni == 0) throw Error(ErrorKind::EmptyUnion, fmt::format("category {} is absent from both masks", c));
    return 100.0 * static_cast<double>(intersection[c]) / static_cast<double>(uni);
}

PairCounts count_pair(const LabelMap& given, const LabelMap& pred) {
    require_same_size(given, pred);
    // 256x256 joint histogram of (given, pred) labels; the per-category
    // counts are its marginals and diagonal.
    std::vector<std::uint64_t> joint(256 * 256, 0);
    const auto g = given.raw();
    const auto p = pred.raw();
    for (std::size_t i = 0; i < g.size(); ++i) ++joint[(static_cast<std::size_t>(g[i]) << 8) | p[i]];

    PairCounts counts;
    counts.total = g.size();
    for (std::size_t gv = 0; gv < 256; ++gv) {
        for (std::size_t pv = 0; pv < 256; ++pv) {
            const std::uint64_t n = joint[(gv << 8) | pv];
            if (n == 0) continue;
            if (gv < CategoryId::kEvaluableCount) counts.given[gv] += n;
            else counts.given_ignore += n;
            if (pv < CategoryId::kEvaluableCount) counts.pred[pv] += n;
            else counts.pred_ignore += n;
            if (gv == pv && gv < CategoryId::kEvaluableCount) counts.intersection[gv] += n;
        }
    }
    return counts;
}

MaskTable::MaskTable(std::vector<MaskRecord> rows) : rows_(std::move(rows)) {
    std::sort(rows_.begin(), rows_.end(), [](const MaskRecord& a, const MaskRecord& b) {
        if (a.image_id != b.image_id) return a.image_id < b.image_id;
        return a.category < b.category;
    });
    for (std::size_t i = 1; i < rows_.size(); ++i) {
        if (rows_[i].image_id == rows_[i - 1].image_id && rows_[i].category == rows_[i - 1].category)
            throw Error(ErrorKind::InvalidParameter,
                        fmt::format("duplicate mask row ({}, {})", rows_[i].image_id, rows_[i].category.value()));
    }
}

std::vector<MaskRecord> mask_records(const std::string& image_id, const PairCounts& counts) {
    std::vector<MaskRecord> rows;
    for (std::size_t c = 0; c < CategoryId::kEvaluableCount; ++c) {
        if (counts.given[c] == 0) continue;
        rows.push_back(MaskRecord{image_id, CategoryId(static_cast<int>(c)), counts.iou_percent(c), counts.given[c]});
    }
    return rows;
}

std::vector<OccupancyRecord> occupancy_records(const std::string& image_id, const PairCounts& counts) {
    std::vector<OccupancyRecord> rows;
    if (counts.total == 0) return rows;
    const double total = static_cast<double>(counts.total);
    for (std::size_t c = 0; c < CategoryId::kEvaluableCount; ++c) {
        if (counts.union_of(c) == 0) continue;
        rows.push_back(OccupancyRecord{image_id, CategoryId(static_cast<int>(c)),
                                       100.0 * static_cast<double>(counts.given[c]) / total,
                                       100.0 * static_cast<double>(counts.pred[c]) / total,
                                       counts.iou_percent(c)});
    }
    return rows;
}

std::vector<OccupancyRecord> occupancy_table(const std::string& image_id, const LabelMap& given,
                                             const LabelMap& pred) {
    return occupancy_records(image_id, count_pair(given, pred));
}

DatasetTables build_dataset_tables(const DatasetManifest& manifest, std::optional<Resolution> resolution,
                                   unsigned threads) {
    const std::size_t n = manifest.entries.size();
    std::vector<std::vector<MaskRecord>> mask_rows(n);
    std::vector<std::vector<OccupancyRecord>> occupancy(n);

    std::atomic<std::size_t> next{0};
    std::mutex error_mutex;
    std::exception_ptr first_error;
    std::size_t first_error_index = n;

    auto work = [&] {
        for (std::size_t i = next++; i < n; i = next++) {
            const ManifestEntry& entry = manifest.entries[i];
            try {
                LabelMap given = load_label_map(manifest.resolve(entry.given));
                LabelMap pred = load_label_map(manifest.resolve(entry.pred));
                if (resolution) {
                    given = resize_label_map(given, *resolution);
                    pred = resize_label_map(pred, *resolution);
                }
                const PairCounts counts = count_pair(given, pred);
                mask_rows[i] = mask_records(entry.image_id, counts);
                occupancy[i] = occupancy_records(entry.image_id, counts);
            } catch (const Error& e) {
                std::lock_guard lock(error_mutex);
                if (i < first_error_index) {
                    first_error_index = i;
                    first_error = std::make_exception_ptr(
                        Error(e.kind(), fmt::format("image '{}': {}", entry.image_id, e.what())));
                }
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (i < first_error_index) {
                    first_error_index = i;
                    first_error = std::current_exception();
                }
            }
        }
    };

    unsigned workers = threads != 0 ? threads : std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(n, 1)));
    {
        std::vector<std::jthread> pool;
        for (unsigned t = 1; t < workers; ++t) pool.emplace_back(work);
        work();
    }
    if (first_error) std::rethrow_exception(first_error);

    std::vector<MaskRecord> all_rows;
    DatasetTables tables;
    for (std::size_t i = 0; i < n; ++i) {
        std::move(mask_rows[i].begin(), mask_rows[i].end(), std::back_inserter(all_rows));
        tables.occupancy.emplace(manifest.entries[i].image_id, std::move(occupancy[i]));
    }
    tables.mask_table = MaskTable(std::move(all_rows));
    return tables;
}

MaskTable build_mask_table(const DatasetManifest& manifest, std::optional<Resolution> resolution,
                           unsigned threads) {
    return build_dataset_tables(manifest, resolution, threads).mask_table;
}

void write_mask_table_csv(std::ostream& out, const MaskTable& table, const CategoryTable& categories) {
    out << "image_id,category,iou_percent,size_pixels\n";
    for (const auto& row : table.rows()) {
        out << fmt::format("{},{},{:.6f},{}\n", row.image_id, categories.name_of(row.category), row.iou_percent,
                           row.size_pixels);
    }
}

}  // namespace segscope
