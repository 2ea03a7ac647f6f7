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

#include <CLI11.hpp>

#include "commands.hpp"
#include "segscope/colormap.hpp"

using namespace segscope::cli;

int main(int argc, char** argv) {
    CLI::App app{"segscope: class-imbalance and segmentation-quality analysis"};
    app.require_subcommand(1);
    app.footer(
        "Formats:\n"
        "  manifest      JSON {\"root\": dir, \"entries\": [{\"image_id\", \"image\", \"given\", \"pred\", \"weights\"}]}\n"
        "                paths relative to root; root relative to the manifest's directory\n"
        "  label maps    8-bit grayscale PNG of trainIds (0-18, 255 = ignore)\n"
        "  images        8-bit RGB PNG\n"
        "  weights       <weights>/<category name>/<image_id>.wgt, WGT1: \"WGT1\", u32le width, u32le height,\n"
        "                width*height float32le row-major\n"
        "  categories    text, one '<id>,<name>,<r>,<g>,<b>' per line\n"
        "  mask table    CSV image_id,category,iou_percent,size_pixels\n"
        "  report        CSV category,n_points,pearson_r,spearman_r\n"
        "Environment:\n"
        "  SEGSCOPE_LOG  trace|debug|info|warn|error|off (default info)");

    CommonOptions common;
    app.add_option("--categories", common.categories, "Category config (default: built-in trainId table)");

    GenFixturesArgs gen;
    auto* gen_cmd = app.add_subcommand("gen-fixtures", "Write a deterministic synthetic dataset");
    gen_cmd->add_option("--seed", gen.seed, "Random seed")->required();
    gen_cmd->add_option("--count", gen.count, "Number of images")->required();
    gen_cmd->add_option("--out", gen.out, "Output directory")->required();

    BuildTableArgs build;
    auto* build_cmd = app.add_subcommand("build-table", "Build the per-mask IoU/size table");
    build_cmd->add_option("--manifest", build.manifest, "Dataset manifest")->required();
    build_cmd->add_option("--out-csv", build.out_csv, "Output CSV")->required();
    build_cmd->add_option("--resolution", build.resolution, "Working resolution WxH or 'native'")->capture_default_str();

    RenderArgs render;
    auto* render_cmd = app.add_subcommand("render", "Superimpose a weight field on its image");
    render_cmd->add_option("--manifest", render.manifest, "Dataset manifest")->required();
    render_cmd->add_option("--image", render.image, "Image id")->required();
    render_cmd->add_option("--category", render.category, "Category name")->required();
    render_cmd->add_option("--colormap", render.colormap, "turbo, rainbow, paired or nipy_spectral")->capture_default_str();
    render_cmd->add_option("--bins", render.bins, "Bins for categorical colormaps")->capture_default_str();
    render_cmd->add_option("--alpha1", render.alpha1, "Image opacity")->capture_default_str();
    render_cmd->add_option("--alpha2", render.alpha2, "Weight opacity (< alpha1)")->capture_default_str();
    render_cmd->add_option("--out-png", render.out_png, "Output PNG")->required();

    ReportArgs report;
    auto* report_cmd = app.add_subcommand("report", "Per-category size/IoU correlations");
    report_cmd->add_option("--manifest", report.manifest, "Dataset manifest")->required();
    report_cmd->add_option("--out-csv", report.out_csv, "Output CSV")->required();
    report_cmd->add_option("--resolution", report.resolution, "Working resolution WxH or 'native'")->capture_default_str();

    ServeArgs serve;
    auto* serve_cmd = app.add_subcommand("serve", "Serve the /api/v1 HTTP API");
    serve_cmd->add_option("--manifest", serve.manifest, "Dataset manifest")->required();
    serve_cmd->add_option("--addr", serve.addr, "Listen address host:port")->capture_default_str();
    serve_cmd->add_option("--resolution", serve.resolution, "Working resolution WxH or 'native'")->capture_default_str();
    serve_cmd->add_option("--cors-origin", serve.cors_origin, "Access-Control-Allow-Origin value ('' disables)")->capture_default_str();

    CLI11_PARSE(app, argc, argv);
    configure_logging();

    if (*gen_cmd) return cmd_gen_fixtures(common, gen);
    if (*build_cmd) return cmd_build_table(common, build);
    if (*render_cmd) return cmd_render(common, render);
    if (*report_cmd) return cmd_report(common, report);
    if (*serve_cmd) return cmd_serve(common, serve);
    return 1;
}
