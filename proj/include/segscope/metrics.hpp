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
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "segscope/core.hpp"
#include "segscope/manifest.hpp"

namespace segscope {

/// 100 * |given==c AND pred==c| / |given==c OR pred==c|.
/// Throws DimensionMismatch, InvalidParameter for the ignore label and
/// EmptyUnion when c is absent from both maps.
double iou_percent(const LabelMap& given, const LabelMap& pred, CategoryId category);

std::uint64_t object_size(const LabelMap& map, CategoryId category);

/// Per-category pixel counts for a (given, pred) pair gathered in one sweep
/// over both rasters. Everything the tables need derives from these counts,
/// so no per-category pass over the pixels is ever made.
struct PairCounts {
    std::array<std::uint64_t, CategoryId::kEvaluableCount> given{};
    std::array<std::uint64_t, CategoryId::kEvaluableCount> pred{};
    std::array<std::uint64_t, CategoryId::kEvaluableCount> intersection{};
    std::uint64_t given_ignore = 0;
    std::uint64_t pred_ignore = 0;
    std::uint64_t total = 0;

    std::uint64_t union_of(std::size_t c) const noexcept { return given[c] + pred[c] - intersection[c]; }
    /// Throws EmptyUnion when the category is in neither map.
    double iou_percent(std::size_t c) const;
};

PairCounts count_pair(const LabelMap& given, const LabelMap& pred);

/// Rows of the dataset-wide table, one per (image, category present in the
/// given mask). Kept sorted by image_id then category id.
class MaskTable {
public:
    MaskTable() = default;
    /// Sorts and rejects duplicate (image_id, category) pairs.
    explicit MaskTable(std::vector<MaskRecord> rows);

    const std::vector<MaskRecord>& rows() const noexcept { return rows_; }
    std::size_t size() const noexcept { return rows_.size(); }
    bool empty() const noexcept { return rows_.empty(); }

private:
    std::vector<MaskRecord> rows_;
};

/// Mask-table rows for one image: only categories present in the given mask.
std::vector<MaskRecord> mask_records(const std::string& image_id, const PairCounts& counts);

/// Occupancy rows for one image covering every category in given or pred.
/// Occupancy is 100 * count / (width * height), ignore pixels included in
/// the denominator.
std::vector<OccupancyRecord> occupancy_records(const std::string& image_id, const PairCounts& counts);
std::vector<OccupancyRecord> occupancy_table(const std::string& image_id, const LabelMap& given,
                                             const LabelMap& pred);

struct DatasetTables {
    MaskTable mask_table;
    std::map<std::string, std::vector<OccupancyRecord>> occupancy;
};

/// Loads every entry's masks, resizes them to `resolution` (nearest
/// neighbour; std::nullopt keeps the native size) and builds both tables.
/// Images are processed on `threads` workers (0 = hardware concurrency); the
/// result does not depend on scheduling.
DatasetTables build_dataset_tables(const DatasetManifest& manifest,
                                   std::optional<Resolution> resolution = kWorkingResolution,
                                   unsigned threads = 0);

MaskTable build_mask_table(const DatasetManifest& manifest,
                           std::optional<Resolution> resolution = kWorkingResolution,
                           unsigned threads = 0);

/// Header `image_id,category,iou_percent,size_pixels`; IoU with 6 decimals.
void write_mask_table_csv(std::ostream& out, const MaskTable& table, const CategoryTable& categories);

}  // namespace segscope
