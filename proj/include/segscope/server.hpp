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

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "segscope/core.hpp"
#include "segscope/lru_cache.hpp"
#include "segscope/manifest.hpp"
#include "segscope/metrics.hpp"

namespace segscope {

enum class MaskSide { Given, Pred };

struct SessionOptions {
    /// Resolution the tables are computed at; std::nullopt keeps native size.
    std::optional<Resolution> resolution = kWorkingResolution;
    std::size_t composite_cache_capacity = 128;
    std::size_t raster_cache_capacity = 64;
    unsigned threads = 0;
};

/// Everything the API serves. The tables are computed once in the
/// constructor; rasters and composites are loaded lazily through LRU caches,
/// which are the only mutable state.
class Session {
public:
    Session(DatasetManifest manifest, CategoryTable categories, SessionOptions options = {});

    const DatasetManifest& manifest() const noexcept { return manifest_; }
    const CategoryTable& categories() const noexcept { return categories_; }
    const MaskTable& mask_table() const noexcept { return tables_.mask_table; }
    const SessionOptions& options() const noexcept { return options_; }

    /// Throws NotFound for an unknown image.
    const ManifestEntry& entry(std::string_view image_id) const;
    const std::vector<OccupancyRecord>& occupancy(std::string_view image_id) const;

    /// Native-resolution rasters as stored on disk.
    std::shared_ptr<const LabelMap> mask(std::string_view image_id, MaskSide side) const;
    std::shared_ptr<const RgbImage> image(std::string_view image_id) const;
    std::shared_ptr<const WeightField> weights(std::string_view image_id, CategoryId category) const;

    /// PNG of superimpose(image, weights, params), cached per
    /// (image, category, colormap, bins, alpha1, alpha2).
    std::shared_ptr<const std::string> composite_png(std::string_view image_id, CategoryId category,
                                                     const CompositeParams& params) const;

private:
    using CompositeKey = std::tuple<std::string, int, std::string, int, double, double>;

    DatasetManifest manifest_;
    CategoryTable categories_;
    SessionOptions options_;
    DatasetTables tables_;

    mutable LruCache<std::pair<std::string, int>, LabelMap> masks_;
    mutable LruCache<std::string, RgbImage> images_;
    mutable LruCache<std::pair<std::string, int>, WeightField> weights_;
    mutable LruCache<CompositeKey, std::string> composites_;
};

struct ApiResponse {
    int status = 200;
    std::string content_type = "application/json";
    std::string body;
};

using QueryParams = std::map<std::string, std::string, std::less<>>;

/// Read-only /api/v1 routes, independent of any HTTP library:
///
///   GET /api/v1/categories
///   GET /api/v1/colormaps
///   GET /api/v1/images
///   GET /api/v1/table
///   GET /api/v1/scatter/overview
///   GET /api/v1/scatter/detail?category=NAME
///   GET /api/v1/image/{id}/composite?category=&colormap=&bins=&alpha1=&alpha2=   (PNG)
///   GET /api/v1/image/{id}/weight?category=&x=&y=
///   GET /api/v1/image/{id}/maskinfo?which=given|pred&x=&y=
///   GET /api/v1/image/{id}/maskrender?which=given|pred&selected=a,b   (PNG)
///   GET /api/v1/image/{id}/occupancy?selected=a,b
///
/// An absent `selected` means every category; an empty one means none.
class Api {
public:
    explicit Api(std::shared_ptr<const Session> session) : session_(std::move(session)) {}

    ApiResponse get(std::string_view path, const QueryParams& query) const;

private:
    std::shared_ptr<const Session> session_;
};

struct ServerOptions {
    std::string host = "127.0.0.1";
    /// 0 picks a free port.
    int port = 8080;
    /// Value of Access-Control-Allow-Origin; empty disables CORS headers.
    std::string cors_origin = "*";
};

/// HTTP/1.1 front end over Api.
class HttpServer {
public:
    HttpServer(std::shared_ptr<const Session> session, ServerOptions options);
    ~HttpServer();
    HttpServer(const HttpServer&) = delete;
    HttpServer& operator=(const HttpServer&) = delete;

    /// Binds the listening socket and returns the port. Throws Io.
    int bind();
    /// Serves until stop(); bind() must have succeeded.
    void run();
    void stop();

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

/// Splits "host:port" (or ":port"); throws InvalidParameter.
std::pair<std::string, int> parse_listen_address(std::string_view addr);

}  // namespace segscope
