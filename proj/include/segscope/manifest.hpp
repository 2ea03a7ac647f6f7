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

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "segscope/core.hpp"

namespace segscope {

struct ManifestEntry {
    std::string image_id;
    std::filesystem::path image;
    std::filesystem::path given;
    std::filesystem::path pred;
    /// Directory holding `<category_name>/<image_id>.wgt` files.
    std::optional<std::filesystem::path> weights;

    friend bool operator==(const ManifestEntry&, const ManifestEntry&) = default;
};

/// Dataset listing. Entry paths are relative to `root`; a relative root is
/// itself relative to the directory containing the manifest file.
///
/// JSON form:
///   { "root": ".", "entries": [ { "image_id": "...", "image": "...",
///     "given": "...", "pred": "...", "weights": "..." } ] }
/// `weights` is optional.
struct DatasetManifest {
    std::string root = ".";
    /// Directory `root` resolves to; not serialized.
    std::filesystem::path base;
    std::vector<ManifestEntry> entries;

    const ManifestEntry* find(std::string_view image_id) const noexcept;
    std::filesystem::path resolve(const std::filesystem::path& relative) const { return base / relative; }
    /// Throws Error(NotFound) if the entry has no weight directory.
    std::filesystem::path weight_path(const ManifestEntry& entry, std::string_view category_name) const;
};

/// Parses without touching the filesystem.
DatasetManifest parse_manifest(std::string_view json, const std::filesystem::path& manifest_dir);
std::string serialize_manifest(const DatasetManifest& manifest);

/// Checks id uniqueness, that every referenced file exists and that both
/// masks match the image dimensions.
void validate_manifest(const DatasetManifest& manifest);

DatasetManifest load_manifest(const std::filesystem::path& path);

/// Image ids end up in file names and URLs: [A-Za-z0-9._-]+ only.
bool is_valid_image_id(std::string_view id) noexcept;

}  // namespace segscope
