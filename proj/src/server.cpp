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

#include "segscope/server.hpp"

#include <atomic>
#include <charconv>
#include <chrono>
#include <mutex>
#include <thread>

#include <fmt/format.h>
#include <httplib.h>
#include <json.hpp>
#include <spdlog/spdlog.h>

#include "segscope/analytics.hpp"
#include "segscope/colormap.hpp"
#include "segscope/compositor.hpp"
#include "segscope/png_io.hpp"
#include "segscope/weight_io.hpp"

namespace segscope {

using nlohmann::json;

Session::Session(DatasetManifest manifest, CategoryTable categories, SessionOptions options)
    : manifest_(std::move(manifest)),
      categories_(std::move(categories)),
      options_(options),
      tables_(build_dataset_tables(manifest_, options_.resolution, options_.threads)),
      masks_(options_.raster_cache_capacity),
      images_(options_.raster_cache_capacity),
      weights_(options_.raster_cache_capacity),
      composites_(options_.composite_cache_capacity) {}

const ManifestEntry& Session::entry(std::string_view image_id) const {
    const ManifestEntry* e = manifest_.find(image_id);
    if (e == nullptr) throw Error(ErrorKind::NotFound, fmt::format("unknown image '{}'", image_id));
    return *e;
}

const std::vector<OccupancyRecord>& Session::occupancy(std::string_view image_id) const {
    entry(image_id);
    return tables_.occupancy.find(std::string(image_id))->second;
}

std::shared_ptr<const LabelMap> Session::mask(std::string_view image_id, MaskSide side) const {
    const ManifestEntry& e = entry(image_id);
    return masks_.get_or_compute({e.image_id, static_cast<int>(side)}, [&] {
        return load_label_map(manifest_.resolve(side == MaskSide::Given ? e.given : e.pred));
    });
}

std::shared_ptr<const RgbImage> Session::image(std::string_view image_id) const {
    const ManifestEntry& e = entry(image_id);
    return images_.get_or_compute(e.image_id, [&] { return load_rgb_image(manifest_.resolve(e.image)); });
}

std::shared_ptr<const WeightField> Session::weights(std::string_view image_id, CategoryId category) const {
    const ManifestEntry& e = entry(image_id);
    if (category.is_ignore()) throw Error(ErrorKind::NotFound, "the ignore label has no weight field");
    const auto path = manifest_.weight_path(e, categories_.name_of(category));
    return weights_.get_or_compute({e.image_id, category.value()}, [&] {
        if (!std::filesystem::is_regular_file(path))
            throw Error(ErrorKind::NotFound,
                        fmt::format("no weight field for image '{}' category '{}'", e.image_id,
                                    categories_.name_of(category)));
        return load_weight_field(path);
    });
}

std::shared_ptr<const std::string> Session::composite_png(std::string_view image_id, CategoryId category,
                                                          const CompositeParams& params) const {
    const ManifestEntry& e = entry(image_id);
    CompositeKey key{e.image_id, category.value(), params.colormap().name, params.colormap().bins,
                     params.alpha1(), params.alpha2()};
    return composites_.get_or_compute(key, [&] {
        const auto rendered = superimpose(*image(image_id), *weights(image_id, category), params);
        const auto png = encode_png(rendered);
        return std::string(png.begin(), png.end());
    });
}

namespace {

ApiResponse json_response(const json& body, int status = 200) {
    return ApiResponse{status, "application/json", body.dump()};
}

ApiResponse error_response(int status, const std::string& message) {
    return json_response(json{{"error", message}}, status);
}

int status_for(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::NotFound:
        case ErrorKind::UnknownName:
        case ErrorKind::MissingFile: return 404;
        case ErrorKind::OutOfBounds:
        case ErrorKind::InvalidParameter:
        case ErrorKind::Parse:
        case ErrorKind::ZeroWeightSum:
        case ErrorKind::EmptyInput:
        case ErrorKind::DegenerateInput: return 400;
        default: return 500;
    }
}

// Raised for malformed query strings; always a 400.
struct BadRequest {
    std::string message;
};

const std::string* find_param(const QueryParams& q, std::string_view key) {
    auto it = q.find(key);
    return it == q.end() ? nullptr : &it->second;
}

const std::string& require_param(const QueryParams& q, std::string_view key) {
    const std::string* v = find_param(q, key);
    if (v == nullptr) throw BadRequest{fmt::format("missing query parameter '{}'", key)};
    return *v;
}

int int_param(const QueryParams& q, std::string_view key) {
    const std::string& s = require_param(q, key);
    int value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
        throw BadRequest{fmt::format("parameter '{}' must be an integer, got '{}'", key, s)};
    return value;
}

double double_param(const QueryParams& q, std::string_view key, double fallback) {
    const std::string* s = find_param(q, key);
    if (s == nullptr) return fallback;
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(s->data(), s->data() + s->size(), value);
    if (ec != std::errc() || ptr != s->data() + s->size() || s->empty())
        throw BadRequest{fmt::format("parameter '{}' must be a number, got '{}'", key, *s)};
    return value;
}

MaskSide side_param(const QueryParams& q) {
    const std::string& which = require_param(q, "which");
    if (which == "given") return MaskSide::Given;
    if (which == "pred") return MaskSide::Pred;
    throw BadRequest{fmt::format("parameter 'which' must be 'given' or 'pred', got '{}'", which)};
}

CategorySet selection_param(const QueryParams& q, const CategoryTable& categories) {
    const std::string* s = find_param(q, "selected");
    if (s == nullptr) return CategorySet::all();
    return parse_category_list(categories, *s);
}

json color_json(Rgb c) { return json::array({c.r, c.g, c.b}); }

json series_json(const ScatterSeries& s, const CategoryTable& categories) {
    json points = json::array();
    for (const auto& p : s.points) points.push_back(json::array({p.x, p.y}));
    return json{{"category", categories.name_of(s.category)},
                {"id", s.category.value()},
                {"color", color_json(categories.color_of(s.category))},
                {"x_meaning", to_string(s.x_meaning)},
                {"y_meaning", to_string(s.y_meaning)},
                {"points", std::move(points)}};
}

json series_list_json(const std::vector<ScatterSeries>& list, const CategoryTable& categories) {
    json out = json::array();
    for (const auto& s : list) out.push_back(series_json(s, categories));
    return out;
}

std::vector<std::string_view> split_path(std::string_view path) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (start < path.size()) {
        std::size_t slash = path.find('/', start);
        if (slash == std::string_view::npos) slash = path.size();
        if (slash > start) parts.push_back(path.substr(start, slash - start));
        start = slash + 1;
    }
    return parts;
}

ApiResponse image_route(const Session& session, std::string_view image_id, std::string_view action,
                        const QueryParams& q) {
    const CategoryTable& categories = session.categories();
    session.entry(image_id);

    if (action == "composite") {
        const CategoryId category = categories.by_name(require_param(q, "category"));
        ColormapId cm;
        if (const std::string* name = find_param(q, "colormap")) cm.name = *name;
        if (find_param(q, "bins") != nullptr) cm.bins = int_param(q, "bins");
        try {
            Colormap::from_id(cm);
        } catch (const Error& e) {
            throw BadRequest{e.what()};
        }
        const double a1 = double_param(q, "alpha1", CompositeParams::kDefaultAlpha1);
        const double a2 = double_param(q, "alpha2", CompositeParams::kDefaultAlpha2);
        std::optional<CompositeParams> params;
        try {
            params.emplace(a1, a2, cm);
        } catch (const Error& e) {
            throw BadRequest{e.what()};
        }
        return ApiResponse{200, "image/png", *session.composite_png(image_id, category, *params)};
    }
    if (action == "weight") {
        const CategoryId category = categories.by_name(require_param(q, "category"));
        const int x = int_param(q, "x");
        const int y = int_param(q, "y");
        const auto field = session.weights(image_id, category);
        return json_response(json{{"weight", weight_at(*field, x, y)}});
    }
    if (action == "maskinfo") {
        const MaskSide side = side_param(q);
        const int x = int_param(q, "x");
        const int y = int_param(q, "y");
        const auto hit = category_at(*session.mask(image_id, side), categories, x, y);
        return json_response(json{{"category", hit.name}, {"id", hit.id.value()}});
    }
    if (action == "maskrender") {
        const MaskSide side = side_param(q);
        const CategorySet selected = selection_param(q, categories);
        const auto png = encode_png(render_mask_rgb(*session.mask(image_id, side), categories, selected));
        return ApiResponse{200, "image/png", std::string(png.begin(), png.end())};
    }
    if (action == "occupancy") {
        const CategorySet selected = selection_param(q, categories);
        const auto& records = session.occupancy(image_id);
        json rows = json::array();
        for (const auto& r : records) {
            rows.push_back(json{{"category", categories.name_of(r.category)},
                                {"id", r.category.value()},
                                {"given_occupancy_pct", r.given_occupancy_pct},
                                {"pred_occupancy_pct", r.pred_occupancy_pct},
                                {"iou_percent", r.iou_percent}});
        }
        const Task3Groups groups = series_for_task3(records, selected);
        return json_response(json{{"image_id", std::string(image_id)},
                                  {"records", std::move(rows)},
                                  {"groups",
                                   {{"occupancy", series_list_json(groups.occupancy, categories)},
                                    {"iou_vs_given", series_list_json(groups.iou_vs_given, categories)},
                                    {"iou_vs_pred", series_list_json(groups.iou_vs_pred, categories)}}}});
    }
    return error_response(404, fmt::format("unknown image route '{}'", action));
}

ApiResponse route(const Session& session, std::string_view path, const QueryParams& q) {
    const auto parts = split_path(path);
    if (parts.size() < 3 || parts[0] != "api" || parts[1] != "v1")
        return error_response(404, fmt::format("no route for '{}'", path));
    const CategoryTable& categories = session.categories();

    if (parts.size() == 3 && parts[2] == "categories") {
        json out = json::array();
        for (const auto& e : categories.evaluable())
            out.push_back(json{{"id", e.id.value()}, {"name", e.name}, {"color", color_json(e.color)}});
        return json_response(out);
    }
    if (parts.size() == 3 && parts[2] == "colormaps") {
        json out = json::array();
        for (const auto& name : Colormap::names()) {
            const Colormap cm = Colormap::by_name(name);
            out.push_back(json{{"name", name},
                               {"kind", cm.kind() == ColormapKind::Sequential ? "sequential" : "categorical"},
                               {"bins", cm.bins()}});
        }
        return json_response(out);
    }
    if (parts.size() == 3 && parts[2] == "images") {
        json out = json::array();
        for (const auto& e : session.manifest().entries) out.push_back(json{{"image_id", e.image_id}});
        return json_response(out);
    }
    if (parts.size() == 3 && parts[2] == "table") {
        json out = json::array();
        for (const auto& r : session.mask_table().rows()) {
            out.push_back(json{{"image_id", r.image_id},
                               {"category", categories.name_of(r.category)},
                               {"id", r.category.value()},
                               {"iou_percent", r.iou_percent},
                               {"size_pixels", r.size_pixels}});
        }
        return json_response(out);
    }
    if (parts.size() == 4 && parts[2] == "scatter" && parts[3] == "overview")
        return json_response(series_list_json(series_for_task1(session.mask_table(), std::nullopt), categories));
    if (parts.size() == 4 && parts[2] == "scatter" && parts[3] == "detail") {
        const CategoryId category = categories.by_name(require_param(q, "category"));
        if (category.is_ignore()) return error_response(404, "the ignore label has no scatter series");
        return json_response(series_json(series_for_task1(session.mask_table(), category).front(), categories));
    }
    if (parts.size() == 5 && parts[2] == "image") return image_route(session, parts[3], parts[4], q);
    return error_response(404, fmt::format("no route for '{}'", path));
}

}  // namespace

ApiResponse Api::get(std::string_view path, const QueryParams& query) const {
    try {
        return route(*session_, path, query);
    } catch (const BadRequest& e) {
        return error_response(400, e.message);
    } catch (const Error& e) {
        return error_response(status_for(e.kind()), e.what());
    } catch (const std::exception& e) {
        return error_response(500, e.what());
    }
}

std::pair<std::string, int> parse_listen_address(std::string_view addr) {
    const std::size_t colon = addr.rfind(':');
    if (colon == std::string_view::npos)
        throw Error(ErrorKind::InvalidParameter, fmt::format("address '{}' is not host:port", addr));
    std::string host(addr.substr(0, colon));
    if (host.empty()) host = "0.0.0.0";
    const std::string_view port_text = addr.substr(colon + 1);
    int port = -1;
    auto [ptr, ec] = std::from_chars(port_text.data(), port_text.data() + port_text.size(), port);
    if (ec != std::errc() || ptr != port_text.data() + port_text.size() || port < 0 || port > 65535)
        throw Error(ErrorKind::InvalidParameter, fmt::format("bad port in address '{}'", addr));
    return {host, port};
}

struct HttpServer::Impl {
    Api api;
    ServerOptions options;
    httplib::Server server;
    bool bound = false;
    std::mutex state_mutex;
    bool listening = false;
    bool stopped = false;
    std::atomic<bool> finished{false};

    Impl(std::shared_ptr<const Session> session, ServerOptions opts)
        : api(std::move(session)), options(std::move(opts)) {
        // httplib defaults to SO_REUSEPORT, which lets a second server share
        // a busy port; plain SO_REUSEADDR makes that a bind error.
        server.set_socket_options([](socket_t sock) {
            int yes = 1;
            ::setsockopt(sock, SOL_SOCKET, SO_REUSEADDR, &yes, sizeof(yes));
        });
        if (!options.cors_origin.empty()) {
            server.set_default_headers({{"Access-Control-Allow-Origin", options.cors_origin},
                                        {"Access-Control-Allow-Methods", "GET, OPTIONS"},
                                        {"Access-Control-Allow-Headers", "Content-Type"}});
        }
        server.Get(R"(/api/v1/.*)", [this](const httplib::Request& req, httplib::Response& res) {
            QueryParams query;
            for (const auto& [k, v] : req.params) query.emplace(k, v);
            ApiResponse out = api.get(req.path, query);
            res.status = out.status;
            res.set_content(std::move(out.body), out.content_type);
            spdlog::debug("GET {} -> {}", req.path, res.status);
        });
        server.Options(R"(/api/v1/.*)", [](const httplib::Request&, httplib::Response& res) { res.status = 204; });
    }
};

HttpServer::HttpServer(std::shared_ptr<const Session> session, ServerOptions options)
    : impl_(std::make_unique<Impl>(std::move(session), std::move(options))) {}

HttpServer::~HttpServer() { stop(); }

int HttpServer::bind() {
    int port = impl_->options.port;
    if (port == 0) {
        port = impl_->server.bind_to_any_port(impl_->options.host);
    } else if (!impl_->server.bind_to_port(impl_->options.host, port)) {
        port = -1;
    }
    if (port < 0)
        throw Error(ErrorKind::Io,
                    fmt::format("cannot listen on {}:{}", impl_->options.host, impl_->options.port));
    impl_->bound = true;
    return port;
}

void HttpServer::run() {
    if (!impl_->bound) throw Error(ErrorKind::Io, "server is not bound");
    {
        std::lock_guard lock(impl_->state_mutex);
        if (impl_->stopped) return;
        impl_->listening = true;
    }
    impl_->server.listen_after_bind();
    impl_->finished = true;
}

void HttpServer::stop() {
    if (!impl_) return;
    {
        std::lock_guard lock(impl_->state_mutex);
        if (impl_->stopped) return;
        impl_->stopped = true;
        if (!impl_->listening) return;
    }
    // run() may not have reached the accept loop yet.
    while (!impl_->server.is_running() && !impl_->finished)
        std::this_thread::sleep_for(std::chrono::milliseconds(1));
    impl_->server.stop();
}

}  // namespace segscope
