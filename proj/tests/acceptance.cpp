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

// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any
// criterion fails.

#include <fcntl.h>
#include <signal.h>
#include <spawn.h>
#include <sys/wait.h>

#include <httplib.h>
#include <json.hpp>

#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <regex>
#include <sstream>
#include <thread>

#include "oracles.hpp"
#include "segscope/analytics.hpp"
#include "segscope/colormap.hpp"
#include "segscope/compositor.hpp"
#include "segscope/fixtures.hpp"
#include "segscope/metrics.hpp"
#include "segscope/png_io.hpp"
#include "segscope/resize.hpp"
#include "segscope/weight_io.hpp"

extern char** environ;

using namespace segscope;
using namespace segscope::testing;
namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr double kIouTolerance = 1e-9;
constexpr double kOccupancyTolerance = 1e-9;
constexpr double kExampleTolerance = 1e-12;
constexpr std::uint64_t kFixtureSeed = 1;
constexpr int kFixtureCount = 20;

struct Failure {
    std::string what;
};

void expect(bool ok, const std::string& what) {
    if (!ok) throw Failure{what};
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string quote(const std::string& s) {
    std::string out = "'";
    for (char c : s) out += c == '\'' ? std::string("'\\''") : std::string(1, c);
    return out + "'";
}

int run_cli(const std::vector<std::string>& args, const fs::path& log) {
    std::string cmd = quote(SEGSCOPE_CLI_PATH);
    for (const auto& a : args) cmd += " " + quote(a);
    cmd += " >" + quote(log.string()) + " 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::vector<std::vector<std::string>> read_csv(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream lines(text);
    for (std::string line; std::getline(lines, line);) {
        std::vector<std::string> fields;
        std::size_t start = 0;
        while (true) {
            const auto comma = line.find(',', start);
            fields.push_back(line.substr(start, comma == std::string::npos ? std::string::npos : comma - start));
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        rows.push_back(std::move(fields));
    }
    return rows;
}

// Shared fixture produced through the CLI.
struct Workspace {
    TempDir dir{"acceptance"};
    fs::path data = dir / "fixture";
    DatasetManifest manifest;
    FixtureTruth truth;

    Workspace() {
        if (run_cli({"gen-fixtures", "--seed", std::to_string(kFixtureSeed), "--count", std::to_string(kFixtureCount),
                     "--out", data.string()},
                    dir / "gen.log") != 0)
            throw std::runtime_error("gen-fixtures failed: " + slurp(dir / "gen.log"));
        manifest = load_manifest(data / kFixtureManifestFile);
        truth = load_fixture_truth(data / kFixtureTruthFile);
    }
};

Workspace& workspace() {
    static Workspace w;
    return w;
}

// ---------------------------------------------------------------------------

std::string iou_oracle_equivalence() {
    const auto start = std::chrono::steady_clock::now();
    std::mt19937_64 rng(20240611);
    const std::vector<int> alphabet{0, 1, 2, 7, 11, 13, 18, 255};
    std::size_t compared = 0;
    double worst = 0.0;
    for (int pair = 0; pair < 1000; ++pair) {
        const auto given = random_label_map(rng, 64, 32, alphabet);
        const auto pred = random_label_map(rng, 64, 32, alphabet);
        const auto gc = oracle_counts(given), pc = oracle_counts(pred);
        for (int c = 0; c < CategoryId::kEvaluableCount; ++c) {
            if (!gc.count(c) && !pc.count(c)) continue;
            const double diff = std::abs(iou_percent(given, pred, CategoryId(c)) - oracle_iou_percent(given, pred, c));
            worst = std::max(worst, diff);
            expect(diff <= kIouTolerance, "pair " + std::to_string(pair) + " category " + std::to_string(c));
            ++compared;
        }
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    expect(secs < 10.0, "took " + std::to_string(secs) + " s");
    std::ostringstream out;
    out << compared << " comparisons, max |diff| " << worst << ", " << secs << " s";
    return out.str();
}

std::string mask_table_fidelity() {
    auto& ws = workspace();
    const auto manifest_path = (ws.data / kFixtureManifestFile).string();
    expect(run_cli({"build-table", "--manifest", manifest_path, "--out-csv", (ws.dir / "t1.csv").string()},
                   ws.dir / "b1.log") == 0,
           "build-table failed");
    expect(run_cli({"build-table", "--manifest", manifest_path, "--out-csv", (ws.dir / "t2.csv").string()},
                   ws.dir / "b2.log") == 0,
           "build-table rerun failed");
    const std::string csv = slurp(ws.dir / "t1.csv");
    expect(csv == slurp(ws.dir / "t2.csv"), "rerun CSV differs");

    // Rescan oracle: distinct non-ignore given categories per image.
    std::size_t expected_rows = 0;
    for (const auto& e : ws.manifest.entries) {
        const auto counts = oracle_counts(load_label_map(ws.manifest.resolve(e.given)));
        expected_rows += counts.size() - counts.count(255);
    }
    const auto rows = read_csv(csv);
    expect(!rows.empty() && rows[0] == std::vector<std::string>{"image_id", "category", "iou_percent", "size_pixels"},
           "bad header");
    expect(rows.size() - 1 == expected_rows,
           "rows " + std::to_string(rows.size() - 1) + " vs oracle " + std::to_string(expected_rows));

    // Sizes at the working resolution are the rectangle areas times the
    // integer upscale factor.
    const auto scale = static_cast<std::uint64_t>(kWorkingResolution.width / ws.truth.width) *
                       static_cast<std::uint64_t>(kWorkingResolution.height / ws.truth.height);
    expect(kWorkingResolution.width % ws.truth.width == 0 && kWorkingResolution.height % ws.truth.height == 0,
           "fixture size does not divide the working resolution");
    std::map<std::pair<std::string, std::string>, std::uint64_t> sizes;
    for (std::size_t i = 1; i < rows.size(); ++i) sizes[{rows[i][0], rows[i][1]}] = std::stoull(rows[i][3]);
    std::size_t checked = 0;
    for (const auto& img : ws.truth.images) {
        for (const auto& obj : img.objects) {
            if (!obj.given) continue;
            const auto key = std::pair{img.image_id, CategoryTable::builtin().name_of(obj.category)};
            expect(sizes.count(key) == 1, "missing row " + key.first + "/" + key.second);
            expect(sizes[key] == obj.given->area() * scale, "size mismatch " + key.first + "/" + key.second);
            ++checked;
        }
    }
    expect(checked == expected_rows, "fixture truth and masks disagree");
    return std::to_string(expected_rows) + " rows, sizes = area x " + std::to_string(scale) + ", rerun byte-identical";
}

std::string occupancy_conservation() {
    auto& ws = workspace();
    double worst = 0.0;
    for (const auto& e : ws.manifest.entries) {
        const auto given = resize_label_map(load_label_map(ws.manifest.resolve(e.given)), kWorkingResolution);
        const auto pred = resize_label_map(load_label_map(ws.manifest.resolve(e.pred)), kWorkingResolution);
        const auto records = occupancy_table(e.image_id, given, pred);
        const auto gc = oracle_counts(given), pc = oracle_counts(pred);
        const double total = static_cast<double>(given.pixel_count());
        double gs = 100.0 * static_cast<double>(gc.count(255) ? gc.at(255) : 0) / total;
        double ps = 100.0 * static_cast<double>(pc.count(255) ? pc.at(255) : 0) / total;
        for (const auto& r : records) {
            gs += r.given_occupancy_pct;
            ps += r.pred_occupancy_pct;
        }
        worst = std::max({worst, std::abs(gs - 100.0), std::abs(ps - 100.0)});
        expect(std::abs(gs - 100.0) <= kOccupancyTolerance, e.image_id + " given sums to " + std::to_string(gs));
        expect(std::abs(ps - 100.0) <= kOccupancyTolerance, e.image_id + " pred sums to " + std::to_string(ps));
    }
    std::ostringstream out;
    out << ws.manifest.entries.size() << " images, max |sum - 100| " << worst;
    return out.str();
}

std::string compositing_limits() {
    auto& ws = workspace();
    const auto& entry = ws.manifest.entries.at(1);
    const auto image = load_rgb_image(ws.manifest.resolve(entry.image));
    const auto weights = load_weight_field(ws.manifest.weight_path(entry, "car"));

    for (double a1 : {1.0, 0.73, 0.2}) {
        const auto out = superimpose(image, weights, CompositeParams(a1, 0.0, ColormapId{"turbo", 8}));
        for (int y = 0; y < image.height(); ++y)
            for (int x = 0; x < image.width(); ++x) {
                const Rgb p = image.at(x, y), o = out.at(x, y);
                auto q = [a1](std::uint8_t v) { return static_cast<std::uint8_t>(std::floor(a1 * v + 0.5)); };
                expect(o == Rgb{q(p.r), q(p.g), q(p.b)}, "alpha2=0 not the dimmed image");
            }
    }

    std::mt19937_64 rng(5);
    const CompositeParams params;
    const auto base = superimpose(image, weights, params);
    for (int trial = 0; trial < 25; ++trial) {
        const int x = static_cast<int>(rng() % static_cast<unsigned>(image.width()));
        const int y = static_cast<int>(rng() % static_cast<unsigned>(image.height()));
        std::vector<float> v(weights.weights().begin(), weights.weights().end());
        float& w = v[static_cast<std::size_t>(y) * weights.width() + x];
        w = w < 0.5f ? 1.0f : 0.0f;
        const auto changed = superimpose(image, WeightField(weights.width(), weights.height(), v), params);
        int diffs = 0;
        for (std::size_t i = 0; i < base.pixel_count(); ++i)
            if (!(base.pixels()[i] == changed.pixels()[i])) {
                ++diffs;
                expect(i == static_cast<std::size_t>(y) * image.width() + x, "change leaked to another pixel");
            }
        expect(diffs == 1, "flipping one weight changed " + std::to_string(diffs) + " pixels");
    }

    for (auto [a1, a2] : {std::pair{1.0, 1.0}, std::pair{0.5, 0.5}, std::pair{0.3, 0.5}, std::pair{0.0, 0.0}}) {
        bool rejected = false;
        try {
            CompositeParams(a1, a2, ColormapId{});
        } catch (const Error& e) {
            rejected = e.kind() == ErrorKind::InvalidParameter;
        }
        expect(rejected, "alpha1 <= alpha2 accepted");
    }
    return "alpha2=0 bit-exact for 3 alpha1 values, 25 locality probes, 4 invalid pairs rejected";
}

std::string colormap_contract() {
    std::size_t edges = 0;
    for (const char* name : {"paired", "nipy_spectral"}) {
        for (int bins = 2; bins <= 256; ++bins) {
            const auto cm = Colormap::by_name(name, bins);
            for (int k = 0; k < bins; ++k) {
                expect(cm.index_of(static_cast<double>(k) / bins) == k,
                       std::string(name) + " bins=" + std::to_string(bins) + " k=" + std::to_string(k));
                expect(cm.apply(static_cast<double>(k) / bins) == cm.bin_color(k), "bin color mismatch");
                ++edges;
            }
            expect(cm.index_of(1.0) == bins - 1, "w=1 not in last bin");
        }
    }
    const auto paired = Colormap::by_name("paired", 8);
    expect(paired.index_of(0.49) == 3 && paired.index_of(0.50) == 4, "paired-8 example");
    for (const char* name : {"turbo", "rainbow"}) {
        const auto cm = Colormap::by_name(name);
        expect(cm.index_of(0.0) == 0 && cm.index_of(1.0) == 255, std::string(name) + " endpoints");
        expect(cm.apply(0.0) == cm.lut()[0] && cm.apply(1.0) == cm.lut()[255], std::string(name) + " endpoint colors");
    }
    return std::to_string(edges) + " bin edges, sequential endpoints at 0 and 255";
}

std::string correlation_recovery() {
    auto& ws = workspace();
    const auto table = build_mask_table(ws.manifest);
    const double rising = pearson_r(series_for_task1(table, kRisingTrendCategory)[0].points);
    const double falling = pearson_r(series_for_task1(table, kFallingTrendCategory)[0].points);
    expect(rising > 0.9, "rising trend r = " + std::to_string(rising));
    expect(falling < -0.9, "falling trend r = " + std::to_string(falling));
    const std::vector<Point> four{{1, 2}, {2, 1}, {3, 4}, {4, 3}};
    expect(std::abs(pearson_r(four) - 0.6) <= kExampleTolerance, "pearson 4-point example");
    expect(std::abs(spearman_r(four) - 0.6) <= kExampleTolerance, "spearman 4-point example");
    std::ostringstream out;
    out << "car r=" << rising << ", truck r=" << falling << ", 4-point example 0.6";
    return out.str();
}

std::string scoring_formulas() {
    expect(score_task1(80, 60, {1, 1, 0, 0}) == 70.0, "score_task1(80,60,1,1)");
    expect(score_task2({80, 60, 0.5, 80}, {1, 1, 1, 1}) == 67.5, "score_task2 equal weights");
    expect(score_task2({100, 100, 1, 100}, {1, 1, 1, 1}) == 75.0, "score_task2 all clicks");
    const std::vector<std::pair<Confidence, double>> levels{{Confidence::HighlyConfident, 100},
                                                            {Confidence::Confident, 80},
                                                            {Confidence::SomewhatConfident, 60},
                                                            {Confidence::NotConfident, 40},
                                                            {Confidence::NotConfidentAtAll, 0}};
    for (const auto& [level, value] : levels) expect(confidence_value(level) == value, "confidence mapping");
    return "70, 67.5, {100,80,60,40,0}";
}

std::string end_to_end() {
    auto& ws = workspace();
    const auto manifest_path = (ws.data / kFixtureManifestFile).string();
    expect(run_cli({"build-table", "--manifest", manifest_path, "--out-csv", (ws.dir / "e2e.csv").string()},
                   ws.dir / "e2e.log") == 0,
           "build-table failed");
    const auto csv_rows = read_csv(slurp(ws.dir / "e2e.csv"));

    const std::string log_path = (ws.dir / "serve.log").string();
    posix_spawn_file_actions_t actions;
    posix_spawn_file_actions_init(&actions);
    posix_spawn_file_actions_addopen(&actions, 2, log_path.c_str(), O_WRONLY | O_CREAT | O_TRUNC, 0644);
    std::vector<std::string> args{SEGSCOPE_CLI_PATH, "serve", "--manifest", manifest_path, "--addr", "127.0.0.1:0"};
    std::vector<char*> argv;
    for (auto& a : args) argv.push_back(a.data());
    argv.push_back(nullptr);
    pid_t pid = 0;
    expect(posix_spawn(&pid, SEGSCOPE_CLI_PATH, &actions, nullptr, argv.data(), environ) == 0, "spawn failed");
    posix_spawn_file_actions_destroy(&actions);

    struct Reaper {
        pid_t pid;
        bool done = false;
        int stop() {
            kill(pid, SIGTERM);
            int status = 0;
            waitpid(pid, &status, 0);
            done = true;
            return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
        }
        ~Reaper() {
            if (!done) stop();
        }
    } reaper{pid};

    int port = 0;
    const std::regex listening(R"(listening on http://127\.0\.0\.1:(\d+))");
    for (int i = 0; i < 1500 && port == 0; ++i) {
        std::smatch m;
        const std::string log = slurp(log_path);
        if (std::regex_search(log, m, listening)) port = std::stoi(m[1]);
        else std::this_thread::sleep_for(std::chrono::milliseconds(20));
    }
    expect(port > 0, "server did not start: " + slurp(log_path));

    httplib::Client client("127.0.0.1", port);
    auto get = [&](const std::string& path, const std::string& type = "application/json") {
        auto res = client.Get(path);
        expect(static_cast<bool>(res), "no response for " + path);
        expect(res->status == 200, path + " -> " + std::to_string(res->status));
        expect(res->get_header_value("Content-Type") == type, path + " content type");
        return res->body;
    };

    const auto& table = CategoryTable::builtin();
    expect(json::parse(get("/api/v1/categories")).size() == 19, "categories");
    expect(json::parse(get("/api/v1/colormaps")).size() == 4, "colormaps");
    expect(json::parse(get("/api/v1/images")).size() == ws.manifest.entries.size(), "images");
    expect(json::parse(get("/api/v1/table")).size() == csv_rows.size() - 1, "table rows != CSV rows");
    std::size_t points = 0;
    for (const auto& s : json::parse(get("/api/v1/scatter/overview"))) points += s["points"].size();
    expect(points == csv_rows.size() - 1, "overview points != CSV rows");
    expect(json::parse(get("/api/v1/scatter/detail?category=car"))["category"] == "car", "detail");

    std::size_t probes = 0;
    for (const auto& img : ws.truth.images) {
        const auto& entry = *ws.manifest.find(img.image_id);
        const auto given = load_label_map(ws.manifest.resolve(entry.given));
        const auto pred = load_label_map(ws.manifest.resolve(entry.pred));
        const std::string base = "/api/v1/image/" + img.image_id;
        for (const auto& obj : img.objects) {
            const std::string name = table.name_of(obj.category);
            const auto field = load_weight_field(ws.manifest.weight_path(entry, name));
            const Rect& r = obj.given ? *obj.given : *obj.pred;
            const Rect& p = *obj.pred;
            // Rectangle corners, centre, the far corner of the shifted
            // prediction, and background.
            for (auto [x, y] : {std::pair{r.x, r.y}, std::pair{r.x + r.width / 2, r.y + r.height / 2},
                                std::pair{p.x + p.width - 1, p.y + p.height - 1}, std::pair{0, 0}}) {
                const std::string xy = "&x=" + std::to_string(x) + "&y=" + std::to_string(y);
                const auto w = json::parse(get(base + "/weight?category=" + name + xy));
                expect(w["weight"].get<double>() == weight_at(field, x, y), "weight mismatch");
                for (auto [which, map] : {std::pair{"given", &given}, std::pair{"pred", &pred}}) {
                    const auto info = json::parse(get(base + "/maskinfo?which=" + std::string(which) + xy));
                    expect(info["category"] == category_at(*map, table, x, y).name, "maskinfo mismatch");
                }
                ++probes;
            }
        }
        const std::string cat = table.name_of(img.objects.front().category);
        const std::string composite = base + "/composite?category=" + cat + "&colormap=paired&alpha1=0.9&alpha2=0.6";
        const auto first = get(composite, "image/png");
        expect(first == get(composite, "image/png"), "composite bytes changed between requests");
        get(base + "/maskrender?which=pred&selected=car,road", "image/png");
        const auto occ = json::parse(get(base + "/occupancy?selected=car,truck"));
        expect(occ["groups"]["occupancy"].size() <= 2, "occupancy filter");
    }

    expect(reaper.stop() == 0, "serve did not exit cleanly on SIGTERM");
    return "all endpoints 200, " + std::to_string(probes) + " weight/maskinfo probes match, composites byte-stable";
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<std::string()>>> criteria{
        {"iou-oracle-equivalence", iou_oracle_equivalence},
        {"mask-table-fidelity", mask_table_fidelity},
        {"occupancy-conservation", occupancy_conservation},
        {"compositing-limits", compositing_limits},
        {"colormap-contract", colormap_contract},
        {"correlation-recovery", correlation_recovery},
        {"scoring-formulas", scoring_formulas},
        {"end-to-end", end_to_end},
    };
    int failed = 0;
    for (const auto& [name, check] : criteria) {
        std::string detail;
        bool ok = false;
        try {
            detail = check();
            ok = true;
        } catch (const Failure& f) {
            detail = f.what;
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        failed += ok ? 0 : 1;
        std::cout << (ok ? "PASS " : "FAIL ") << name << ": " << detail << std::endl;
    }
    std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << std::endl;
    return failed == 0 ? 0 : 1;
}
