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

#include "segscope/manifest.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <fmt/format.h>
#include <json.hpp>

#include "segscope/png_io.hpp"

namespace segscope {

namespace fs = std::filesystem;
using nlohmann::json;

const ManifestEntry* DatasetManifest::find(std::string_view image_id) const noexcept {
    for (const auto& e : entries) {
        if (e.image_id == image_id) return &e;
    }
    return nullptr;
}

fs::path DatasetManifest::weight_path(const ManifestEntry& entry, std::string_view category_name) const {
    if (!entry.weights)
        throw Error(ErrorKind::NotFound, fmt::format("image '{}' has no weight fields", entry.image_id));
    return resolve(*entry.weights) / std::string(category_name) / (entry.image_id + ".wgt");
}

bool is_valid_image_id(std::string_view id) noexcept {
    if (id.empty() || id == "." || id == "..") return false;
    for (char c : id) {
        const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
                        c == '.' || c == '_' || c == '-';
        if (!ok) return false;
    }
    return true;
}

namespace {

std::string required_string(const json& obj, const char* key, std::size_t index) {
    auto it = obj.find(key);
    if (it == obj.end() || !it->is_string())
        throw Error(ErrorKind::Parse, fmt::format("manifest entry {}: missing string field '{}'", index, key));
    return it->get<std::string>();
}

}  // namespace

DatasetManifest parse_manifest(std::string_view text, const fs::path& manifest_dir) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error(ErrorKind::Parse, fmt::format("manifest: {}", e.what()));
    }
    if (!doc.is_object()) throw Error(ErrorKind::Parse, "manifest: top level must be an object");

    DatasetManifest manifest;
    if (auto it = doc.find("root"); it != doc.end()) {
        if (!it->is_string()) throw Error(ErrorKind::Parse, "manifest: 'root' must be a string");
        manifest.root = it->get<std::string>();
    }
    fs::path root(manifest.root);
    manifest.base = root.is_absolute() ? root : (manifest_dir / root).lexically_normal();

    auto entries = doc.find("entries");
    if (entries == doc.end() || !entries->is_array())
        throw Error(ErrorKind::Parse, "manifest: 'entries' must be an array");
    for (std::size_t i = 0; i < entries->size(); ++i) {
        const json& e = (*entries)[i];
        if (!e.is_object()) throw Error(ErrorKind::Parse, fmt::format("manifest entry {}: not an object", i));
        ManifestEntry entry;
        entry.image_id = required_string(e, "image_id", i);
        entry.image = required_string(e, "image", i);
        entry.given = required_string(e, "given", i);
        entry.pred = required_string(e, "pred", i);
        if (auto w = e.find("weights"); w != e.end() && !w->is_null()) {
            if (!w->is_string())
                throw Error(ErrorKind::Parse, fmt::format("manifest entry {}: 'weights' must be a string", i));
            entry.weights = w->get<std::string>();
        }
        if (!is_valid_image_id(entry.image_id))
            throw Error(ErrorKind::Parse, fmt::format("manifest entry {}: bad image_id '{}'", i, entry.image_id));
        manifest.entries.push_back(std::move(entry));
    }
    return manifest;
}

std::string serialize_manifest(const DatasetManifest& manifest) {
    json entries = json::array();
    for (const auto& e : manifest.entries) {
        json obj = {{"image_id", e.image_id},
                    {"image", e.image.generic_string()},
                    {"given", e.given.generic_string()},
                    {"pred", e.pred.generic_string()}};
        if (e.weights) obj["weights"] = e.weights->generic_string();
        entries.push_back(std::move(obj));
    }
    json doc = {{"root", manifest.root}, {"entries", std::move(entries)}};
    return doc.dump(2) + "\n";
}

void validate_manifest(const DatasetManifest& manifest) {
    std::set<std::string> ids;
    for (const auto& e : manifest.entries) {
        if (!ids.insert(e.image_id).second)
            throw Error(ErrorKind::Parse, fmt::format("manifest: duplicate image_id '{}'", e.image_id));

        for (const auto* rel : {&e.image, &e.given, &e.pred}) {
            if (!fs::is_regular_file(manifest.resolve(*rel)))
                throw Error(ErrorKind::MissingFile,
                            fmt::format("manifest entry '{}': missing file {}", e.image_id,
                                        manifest.resolve(*rel).string()));
        }
        if (e.weights && !fs::is_directory(manifest.resolve(*e.weights)))
            throw Error(ErrorKind::MissingFile,
                        fmt::format("manifest entry '{}': missing weight directory {}", e.image_id,
                                    manifest.resolve(*e.weights).string()));

        const PngHeader image = read_png_header(manifest.resolve(e.image));
        for (const auto& [rel, which] : {std::pair{&e.given, "given"}, std::pair{&e.pred, "pred"}}) {
            const PngHeader mask = read_png_header(manifest.resolve(*rel));
            if (mask.width != image.width || mask.height != image.height)
                throw Error(ErrorKind::DimensionMismatch,
                            fmt::format("manifest entry '{}': {} mask is {}x{} but image is {}x{}",
                                        e.image_id, which, mask.width, mask.height, image.width,
                                        image.height));
        }
    }
}

DatasetManifest load_manifest(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::MissingFile, fmt::format("cannot open manifest {}", path.string()));
    std::ostringstream buf;
    buf << in.rdbuf();
    fs::path dir = path.parent_path();
    if (dir.empty()) dir = ".";
    DatasetManifest manifest = parse_manifest(buf.str(), fs::absolute(dir));
    validate_manifest(manifest);
    return manifest;
}

}  // namespace segscope
