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

#include "segscope/analytics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_map>

#include <fmt/format.h>

namespace segscope {

const char* to_string(Axis axis) noexcept {
    switch (axis) {
        case Axis::SizePixels: return "size_pixels";
        case Axis::IouPercent: return "iou_percent";
        case Axis::GivenOccupancy: return "given_occupancy";
        case Axis::PredOccupancy: return "pred_occupancy";
    }
    return "unknown";
}

double pearson_r(std::span<const Point> points) {
    if (points.size() < 2)
        throw Error(ErrorKind::DegenerateInput, fmt::format("correlation needs 2+ points, got {}", points.size()));
    double mx = 0.0, my = 0.0;
    for (const auto& p : points) {
        if (!std::isfinite(p.x) || !std::isfinite(p.y))
            throw Error(ErrorKind::DegenerateInput, "correlation input has non-finite coordinates");
        mx += p.x;
        my += p.y;
    }
    mx /= static_cast<double>(points.size());
    my /= static_cast<double>(points.size());
    double sxx = 0.0, syy = 0.0, sxy = 0.0;
    for (const auto& p : points) {
        const double dx = p.x - mx;
        const double dy = p.y - my;
        sxx += dx * dx;
        syy += dy * dy;
        sxy += dx * dy;
    }
    if (sxx == 0.0 || syy == 0.0) throw Error(ErrorKind::DegenerateInput, "correlation input has zero variance");
    return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

std::vector<double> average_ranks(std::span<const double> values) {
    std::vector<std::size_t> order(values.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    std::vector<double> ranks(values.size());
    for (std::size_t i = 0; i < order.size();) {
        std::size_t j = i;
        while (j + 1 < order.size() && values[order[j + 1]] == values[order[i]]) ++j;
        const double rank = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
        for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = rank;
        i = j + 1;
    }
    return ranks;
}

double spearman_r(std::span<const Point> points) {
    if (points.size() < 2)
        throw Error(ErrorKind::DegenerateInput, fmt::format("correlation needs 2+ points, got {}", points.size()));
    std::vector<double> xs, ys;
    xs.reserve(points.size());
    ys.reserve(points.size());
    for (const auto& p : points) {
        xs.push_back(p.x);
        ys.push_back(p.y);
    }
    const auto rx = average_ranks(xs);
    const auto ry = average_ranks(ys);
    std::vector<Point> ranked(points.size());
    for (std::size_t i = 0; i < ranked.size(); ++i) ranked[i] = Point{rx[i], ry[i]};
    return pearson_r(ranked);
}

std::vector<Point> map_to_viewport(std::span<const Point> points, Viewport viewport) {
    if (!(viewport.width > 0.0) || !(viewport.height > 0.0))
        throw Error(ErrorKind::InvalidParameter,
                    fmt::format("viewport {}x{} must be positive", viewport.width, viewport.height));
    if (points.empty()) return {};
    auto [xmin_it, xmax_it] =
        std::minmax_element(points.begin(), points.end(), [](const Point& a, const Point& b) { return a.x < b.x; });
    auto [ymin_it, ymax_it] =
        std::minmax_element(points.begin(), points.end(), [](const Point& a, const Point& b) { return a.y < b.y; });
    const double xmin = xmin_it->x, xspan = xmax_it->x - xmin;
    const double ymin = ymin_it->y, yspan = ymax_it->y - ymin;

    std::vector<Point> out;
    out.reserve(points.size());
    for (const auto& p : points) {
        const double sx = xspan > 0.0 ? (p.x - xmin) / xspan * viewport.width : viewport.width / 2.0;
        const double sy = yspan > 0.0 ? viewport.height - (p.y - ymin) / yspan * viewport.height : viewport.height / 2.0;
        out.push_back(Point{sx, sy});
    }
    return out;
}

double occlusion_fraction(std::span<const Point> pts, double mark_radius) {
    if (pts.empty()) throw Error(ErrorKind::EmptyInput, "occlusion score of an empty scatter");
    if (!(mark_radius >= 0.0)) throw Error(ErrorKind::InvalidParameter, "mark radius must be non-negative");
    if (mark_radius == 0.0) return 0.0;

    // Uniform grid with cell = 2r: any overlapping partner sits in one of the
    // 3x3 neighbouring cells.
    const double cell = 2.0 * mark_radius;
    const double limit2 = cell * cell;
    auto key = [](std::int64_t cx, std::int64_t cy) { return (static_cast<std::uint64_t>(cx) << 32) ^ static_cast<std::uint32_t>(cy); };
    std::unordered_map<std::uint64_t, std::vector<std::size_t>> grid;
    std::vector<std::pair<std::int64_t, std::int64_t>> cells(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) {
        cells[i] = {static_cast<std::int64_t>(std::floor(pts[i].x / cell)),
                    static_cast<std::int64_t>(std::floor(pts[i].y / cell))};
        grid[key(cells[i].first, cells[i].second)].push_back(i);
    }
    std::size_t occluded = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        bool hit = false;
        for (std::int64_t dx = -1; dx <= 1 && !hit; ++dx) {
            for (std::int64_t dy = -1; dy <= 1 && !hit; ++dy) {
                auto it = grid.find(key(cells[i].first + dx, cells[i].second + dy));
                if (it == grid.end()) continue;
                for (std::size_t j : it->second) {
                    if (j == i) continue;
                    const double ex = pts[i].x - pts[j].x;
                    const double ey = pts[i].y - pts[j].y;
                    if (ex * ex + ey * ey < limit2) {
                        hit = true;
                        break;
                    }
                }
            }
        }
        occluded += hit ? 1 : 0;
    }
    return static_cast<double>(occluded) / static_cast<double>(pts.size());
}

double occlusion_score(std::span<const Point> points, double mark_radius, Viewport viewport) {
    if (points.empty()) throw Error(ErrorKind::EmptyInput, "occlusion score of an empty scatter");
    const auto screen = map_to_viewport(points, viewport);
    return occlusion_fraction(screen, mark_radius);
}

namespace {

void check_percent(double v, const char* what) {
    if (!(v >= 0.0 && v <= 100.0))
        throw Error(ErrorKind::InvalidParameter, fmt::format("{} {} outside [0, 100]", what, v));
}

void check_weight(double v, const char* what) {
    if (!std::isfinite(v) || v < 0.0)
        throw Error(ErrorKind::InvalidParameter, fmt::format("score weight {} = {} must be finite and >= 0", what, v));
}

}  // namespace

double score_task1(double accuracy, double time_norm, const ScoreWeights& w) {
    check_percent(accuracy, "accuracy");
    check_percent(time_norm, "time");
    check_weight(w.alpha, "alpha");
    check_weight(w.beta, "beta");
    const double sum = w.alpha + w.beta;
    if (sum == 0.0) throw Error(ErrorKind::ZeroWeightSum, "alpha + beta must be positive");
    return (accuracy * w.alpha + time_norm * w.beta) / sum;
}

double score_task2(const LabStudyRecord& r, const ScoreWeights& w) {
    check_percent(r.accuracy, "accuracy");
    check_percent(r.time_norm, "time");
    check_percent(r.confidence, "confidence");
    if (!(r.clicks_norm >= 0.0 && r.clicks_norm <= 1.0))
        throw Error(ErrorKind::InvalidParameter, fmt::format("clicks {} outside [0, 1]", r.clicks_norm));
    check_weight(w.alpha, "alpha");
    check_weight(w.beta, "beta");
    check_weight(w.gamma, "gamma");
    check_weight(w.delta, "delta");
    const double sum = w.alpha + w.beta + w.gamma + w.delta;
    if (sum == 0.0) throw Error(ErrorKind::ZeroWeightSum, "alpha + beta + gamma + delta must be positive");
    return (r.accuracy * w.alpha + r.time_norm * w.beta + (1.0 - r.clicks_norm) * 100.0 * w.gamma +
            r.confidence * w.delta) /
           sum;
}

double confidence_value(Confidence level) noexcept {
    switch (level) {
        case Confidence::HighlyConfident: return 100.0;
        case Confidence::Confident: return 80.0;
        case Confidence::SomewhatConfident: return 60.0;
        case Confidence::NotConfident: return 40.0;
        case Confidence::NotConfidentAtAll: return 0.0;
    }
    return 0.0;
}

Confidence parse_confidence(std::string_view label) {
    if (label == "highly_confident") return Confidence::HighlyConfident;
    if (label == "confident") return Confidence::Confident;
    if (label == "somewhat_confident") return Confidence::SomewhatConfident;
    if (label == "not_confident") return Confidence::NotConfident;
    if (label == "not_confident_at_all") return Confidence::NotConfidentAtAll;
    throw Error(ErrorKind::UnknownName, fmt::format("unknown confidence level '{}'", label));
}

double normalize_time(double raw, double fastest, double slowest) {
    if (!(fastest <= raw && raw <= slowest))
        throw Error(ErrorKind::InvalidParameter, fmt::format("time {} outside [{}, {}]", raw, fastest, slowest));
    if (slowest == fastest) return 100.0;
    return 100.0 * (1.0 - (raw - fastest) / (slowest - fastest));
}

double normalize_clicks(double raw, double fewest, double most) {
    if (!(fewest <= raw && raw <= most))
        throw Error(ErrorKind::InvalidParameter, fmt::format("clicks {} outside [{}, {}]", raw, fewest, most));
    if (most == fewest) return 0.0;
    return (raw - fewest) / (most - fewest);
}

std::vector<ScatterSeries> series_for_task1(const MaskTable& table, std::optional<CategoryId> category) {
    if (category && category->is_ignore())
        throw Error(ErrorKind::UnknownName, "the ignore label has no scatter series");

    std::array<std::vector<Point>, CategoryId::kEvaluableCount> buckets;
    for (const auto& row : table.rows()) {
        buckets[row.category.index()].push_back(Point{static_cast<double>(row.size_pixels), row.iou_percent});
    }
    std::vector<ScatterSeries> out;
    if (category) {
        out.push_back(ScatterSeries{*category, Axis::SizePixels, Axis::IouPercent,
                                    std::move(buckets[category->index()])});
        return out;
    }
    for (int c = 0; c < CategoryId::kEvaluableCount; ++c) {
        auto& pts = buckets[static_cast<std::size_t>(c)];
        if (pts.empty()) continue;
        out.push_back(ScatterSeries{CategoryId(c), Axis::SizePixels, Axis::IouPercent, std::move(pts)});
    }
    return out;
}

Task3Groups series_for_task3(std::span<const OccupancyRecord> records, const CategorySet& selected) {
    Task3Groups groups;
    for (const auto& r : records) {
        if (!selected.contains(r.category)) continue;
        groups.occupancy.push_back(ScatterSeries{r.category, Axis::GivenOccupancy, Axis::PredOccupancy,
                                                 {Point{r.given_occupancy_pct, r.pred_occupancy_pct}}});
        groups.iou_vs_given.push_back(ScatterSeries{r.category, Axis::GivenOccupancy, Axis::IouPercent,
                                                    {Point{r.given_occupancy_pct, r.iou_percent}}});
        groups.iou_vs_pred.push_back(ScatterSeries{r.category, Axis::PredOccupancy, Axis::IouPercent,
                                                   {Point{r.pred_occupancy_pct, r.iou_percent}}});
    }
    return groups;
}

std::vector<CorrelationRow> correlation_report(const MaskTable& table) {
    std::vector<CorrelationRow> rows;
    for (auto& series : series_for_task1(table, std::nullopt)) {
        CorrelationRow row{series.category, series.points.size(), std::nullopt, std::nullopt};
        try {
            row.pearson = pearson_r(series.points);
            row.spearman = spearman_r(series.points);
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::DegenerateInput) throw;
            row.pearson.reset();
            row.spearman.reset();
        }
        rows.push_back(row);
    }
    return rows;
}

void write_correlation_csv(std::ostream& out, std::span<const CorrelationRow> rows, const CategoryTable& categories) {
    auto field = [](const std::optional<double>& v) { return v ? fmt::format("{:.6f}", *v) : std::string(); };
    out << "category,n_points,pearson_r,spearman_r\n";
    for (const auto& row : rows) {
        out << fmt::format("{},{},{},{}\n", categories.name_of(row.category), row.n_points, field(row.pearson),
                           field(row.spearman));
    }
}

}  // namespace segscope
