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

#include "commands.hpp"

#include <chrono>
#include <csignal>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <thread>

#include <pthread.h>

#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include "segscope/analytics.hpp"
#include "segscope/compositor.hpp"
#include "segscope/fixtures.hpp"
#include "segscope/manifest.hpp"
#include "segscope/metrics.hpp"
#include "segscope/png_io.hpp"
#include "segscope/server.hpp"
#include "segscope/weight_io.hpp"

namespace segscope::cli {

namespace fs = std::filesystem;

void configure_logging() {
    auto logger = spdlog::stderr_color_mt("segscope");
    logger->set_pattern("[%H:%M:%S.%e] [%^%l%$] %v");
    spdlog::set_default_logger(logger);
    spdlog::set_level(spdlog::level::info);
    if (const char* env = std::getenv("SEGSCOPE_LOG")) {
        const auto level = spdlog::level::from_str(env);
        // from_str maps unknown strings to off; only honour real names.
        if (level != spdlog::level::off || std::string_view(env) == "off") spdlog::set_level(level);
        else spdlog::warn("ignoring SEGSCOPE_LOG='{}'", env);
    }
}

std::optional<Resolution> parse_resolution(const std::string& text) {
    if (text == "native") return std::nullopt;
    const auto x = text.find('x');
    try {
        if (x == std::string::npos) throw std::invalid_argument(text);
        std::size_t used_w = 0, used_h = 0;
        const int w = std::stoi(text.substr(0, x), &used_w);
        const int h = std::stoi(text.substr(x + 1), &used_h);
        if (used_w != x || used_h != text.size() - x - 1 || w < 1 || h < 1) throw std::invalid_argument(text);
        return Resolution{w, h};
    } catch (const std::logic_error&) {
        throw Error(ErrorKind::InvalidParameter,
                    fmt::format("resolution '{}' must be WIDTHxHEIGHT with positive sides, or 'native'", text));
    }
}

namespace {

CategoryTable load_categories(const CommonOptions& common) {
    return common.categories.empty() ? CategoryTable::builtin() : CategoryTable::load(common.categories);
}

template <typename Fn>
int guarded(const char* command, Fn&& fn) {
    try {
        fn();
        return 0;
    } catch (const Error& e) {
        spdlog::error("{}: {} error: {}", command, to_string(e.kind()), e.what());
    } catch (const std::exception& e) {
        spdlog::error("{}: {}", command, e.what());
    }
    return 1;
}

void write_text_file(const fs::path& path, const std::string& text) {
    write_file_bytes(path, std::span(reinterpret_cast<const std::uint8_t*>(text.data()), text.size()));
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

int cmd_gen_fixtures(const CommonOptions& common, const GenFixturesArgs& args) {
    return guarded("gen-fixtures", [&] {
        if (args.count < 0) throw Error(ErrorKind::InvalidParameter, "--count must be non-negative");
        const auto manifest = generate_fixtures(args.seed, args.count, args.out, load_categories(common));
        spdlog::info("wrote {} fixture images to {}", manifest.entries.size(), args.out.string());
    });
}

int cmd_build_table(const CommonOptions& common, const BuildTableArgs& args) {
    return guarded("build-table", [&] {
        const auto categories = load_categories(common);
        const auto resolution = parse_resolution(args.resolution);
        const auto manifest = load_manifest(args.manifest);
        const auto start = std::chrono::steady_clock::now();
        const MaskTable table = build_mask_table(manifest, resolution);
        std::ostringstream csv;
        write_mask_table_csv(csv, table, categories);
        write_text_file(args.out_csv, csv.str());
        spdlog::info("{} rows from {} images in {:.1f} ms -> {}", table.size(), manifest.entries.size(),
                     elapsed_ms(start), args.out_csv.string());
    });
}

int cmd_render(const CommonOptions& common, const RenderArgs& args) {
    return guarded("render", [&] {
        const auto categories = load_categories(common);
        const Colormap colormap = Colormap::by_name(args.colormap, args.bins);
        const CompositeParams params(args.alpha1, args.alpha2, ColormapId{args.colormap, args.bins});
        const auto manifest = load_manifest(args.manifest);
        const ManifestEntry* entry = manifest.find(args.image);
        if (entry == nullptr) throw Error(ErrorKind::NotFound, fmt::format("unknown image '{}'", args.image));
        const CategoryId category = categories.by_name(args.category);
        if (category.is_ignore()) throw Error(ErrorKind::InvalidParameter, "the ignore label has no weight field");

        const RgbImage image = load_rgb_image(manifest.resolve(entry->image));
        const WeightField weights = load_weight_field(manifest.weight_path(*entry, categories.name_of(category)));
        write_rgb_image(superimpose(image, weights, params, colormap), args.out_png);
        spdlog::info("rendered {} / {} with {} -> {}", args.image, args.category, colormap.name(),
                     args.out_png.string());
    });
}

int cmd_report(const CommonOptions& common, const ReportArgs& args) {
    return guarded("report", [&] {
        const auto categories = load_categories(common);
        const auto resolution = parse_resolution(args.resolution);
        const auto manifest = load_manifest(args.manifest);
        const auto rows = correlation_report(build_mask_table(manifest, resolution));
        std::ostringstream csv;
        write_correlation_csv(csv, rows, categories);
        write_text_file(args.out_csv, csv.str());
        spdlog::info("correlations for {} categories -> {}", rows.size(), args.out_csv.string());
    });
}

int cmd_serve(const CommonOptions& common, const ServeArgs& args) {
    // Block the shutdown signals before any thread exists so only sigwait
    // below ever sees them.
    sigset_t signals;
    sigemptyset(&signals);
    sigaddset(&signals, SIGINT);
    sigaddset(&signals, SIGTERM);
    pthread_sigmask(SIG_BLOCK, &signals, nullptr);

    std::unique_ptr<HttpServer> server;
    const int status = guarded("serve", [&] {
        const auto [host, port] = parse_listen_address(args.addr);
        const auto categories = load_categories(common);
        SessionOptions session_options;
        session_options.resolution = parse_resolution(args.resolution);
        const auto manifest = load_manifest(args.manifest);

        const auto start = std::chrono::steady_clock::now();
        auto session = std::make_shared<const Session>(manifest, categories, session_options);
        spdlog::info("precomputed {} mask rows and {} occupancy tables in {:.1f} ms", session->mask_table().size(),
                     manifest.entries.size(), elapsed_ms(start));

        server = std::make_unique<HttpServer>(session, ServerOptions{host, port, args.cors_origin});
        const int bound = server->bind();
        spdlog::info("listening on http://{}:{}/api/v1", host, bound);
    });
    if (status != 0) return status;

    std::thread worker([&] { server->run(); });
    int received = 0;
    sigwait(&signals, &received);
    spdlog::info("signal {} received, shutting down", received);
    server->stop();
    worker.join();
    return 0;
}

}  // namespace segscope::cli
