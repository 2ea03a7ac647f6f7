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

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include "segscope/core.hpp"

namespace segscope::cli {

/// Options shared by every subcommand.
struct CommonOptions {
    /// Category config; empty uses the built-in copy of data/categories.csv.
    std::filesystem::path categories;
};

struct GenFixturesArgs {
    std::uint64_t seed = 1;
    int count = 20;
    std::filesystem::path out;
};

struct BuildTableArgs {
    std::filesystem::path manifest;
    std::filesystem::path out_csv;
    std::string resolution = "1024x512";
};

struct RenderArgs {
    std::filesystem::path manifest;
    std::string image;
    std::string category;
    std::string colormap = "turbo";
    int bins = 8;
    double alpha1 = CompositeParams::kDefaultAlpha1;
    double alpha2 = CompositeParams::kDefaultAlpha2;
    std::filesystem::path out_png;
};

struct ReportArgs {
    std::filesystem::path manifest;
    std::filesystem::path out_csv;
    std::string resolution = "1024x512";
};

struct ServeArgs {
    std::filesystem::path manifest;
    std::string addr = "127.0.0.1:8080";
    std::string resolution = "1024x512";
    std::string cors_origin = "*";
};

/// "WxH" or "native" (no resizing).
std::optional<Resolution> parse_resolution(const std::string& text);

// Each command returns the process exit code: 0 on success, 1 after logging
// the error.
int cmd_gen_fixtures(const CommonOptions& common, const GenFixturesArgs& args);
int cmd_build_table(const CommonOptions& common, const BuildTableArgs& args);
int cmd_render(const CommonOptions& common, const RenderArgs& args);
int cmd_report(const CommonOptions& common, const ReportArgs& args);
/// Blocks until SIGINT or SIGTERM.
int cmd_serve(const CommonOptions& common, const ServeArgs& args);

/// Applies SEGSCOPE_LOG (trace, debug, info, warn, error, critical, off).
void configure_logging();

}  // namespace segscope::cli
