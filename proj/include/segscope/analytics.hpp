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

#include <optional>
#include <ostream>
#include <span>
#include <string_view>
#include <vector>

#include "segscope/core.hpp"
#include "segscope/metrics.hpp"

namespace segscope {

struct Point {
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const Point&, const Point&) = default;
};

enum class Axis { SizePixels, IouPercent, GivenOccupancy, PredOccupancy };

const char* to_string(Axis axis) noexcept;

struct ScatterSeries {
    CategoryId category;
    Axis x_meaning;
    Axis y_meaning;
    std::vector<Point> points;
};

/// Sample Pearson correlation. Throws DegenerateInput for fewer than two
/// points or zero variance on either axis.
double pearson_r(std::span<const Point> points);

/// Pearson correlation of the average ranks (ties share the mean rank).
double spearman_r(std::span<const Point> points);

/// 1-based ranks; tied values get the average of the ranks they span.
std::vector<double> average_ranks(std::span<const double> values);

struct Viewport {
    double width = 0.0;
    double height = 0.0;
};

/// Linear axis scaling as the scatter plots draw it: each axis' data range
/// maps onto [0, width] / [0, height] (y grows downward). A zero-width range
/// maps to the viewport centre.
std::vector<Point> map_to_viewport(std::span<const Point> points, Viewport viewport);

/// Scatter-plot occlusion stand-in for a density-perception metric: the
/// fraction of marks whose centre lies closer than 2 * mark_radius to some
/// other mark, after mapping data points into the viewport. Throws
/// EmptyInput for no points and InvalidParameter for a non-positive
/// viewport or negative radius.
double occlusion_score(std::span<const Point> points, double mark_radius, Viewport viewport);

/// Same metric on points already in viewport coordinates.
double occlusion_fraction(std::span<const Point> screen_points, double mark_radius);

struct ScoreWeights {
    double alpha = 1.0;
    double beta = 1.0;
    double gamma = 1.0;
    double delta = 1.0;
};

/// s = (a*alpha + t*beta) / (alpha + beta); a and t on [0,100].
double score_task1(double accuracy, double time_norm, const ScoreWeights& weights);

/// One lab-study answer: accuracy, normalized time and confidence on
/// [0,100], clicks normalized to [0,1].
struct LabStudyRecord {
    double accuracy = 0.0;
    double time_norm = 0.0;
    double clicks_norm = 0.0;
    double confidence = 0.0;
};

/// s = (a*alpha + t*beta + (1-m)*100*gamma + c*delta) / (alpha+beta+gamma+delta).
/// The click term is rescaled by 100 so every term shares the [0,100] scale.
/// Also used for the multiform-view study.
double score_task2(const LabStudyRecord& record, const ScoreWeights& weights);

enum class Confidence { HighlyConfident, Confident, SomewhatConfident, NotConfident, NotConfidentAtAll };

double confidence_value(Confidence level) noexcept;
/// Accepts the snake_case names, e.g. "somewhat_confident".
Confidence parse_confidence(std::string_view label);

/// Faster is better: 100 * (1 - (raw - fastest) / (slowest - fastest)).
/// A session where every answer took the same time scores 100.
double normalize_time(double raw, double fastest, double slowest);
/// (raw - fewest) / (most - fewest) on [0,1]; 0 when all counts are equal.
double normalize_clicks(double raw, double fewest, double most);

/// Overview (no category): one series per category with rows, ordered by
/// id. Detail: exactly one series, possibly empty. x = size_pixels,
/// y = iou_percent.
std::vector<ScatterSeries> series_for_task1(const MaskTable& table, std::optional<CategoryId> category);

struct Task3Groups {
    /// x = given occupancy, y = predicted occupancy.
    std::vector<ScatterSeries> occupancy;
    /// x = given occupancy, y = IoU.
    std::vector<ScatterSeries> iou_vs_given;
    /// x = predicted occupancy, y = IoU.
    std::vector<ScatterSeries> iou_vs_pred;
};

/// One single-point series per selected category present in the records.
Task3Groups series_for_task3(std::span<const OccupancyRecord> records, const CategorySet& selected);

struct CorrelationRow {
    CategoryId category;
    std::size_t n_points = 0;
    std::optional<double> pearson;
    std::optional<double> spearman;
};

/// Size/IoU correlation per category that has at least one row; degenerate
/// series get empty coefficients.
std::vector<CorrelationRow> correlation_report(const MaskTable& table);

/// Header `category,n_points,pearson_r,spearman_r`.
void write_correlation_csv(std::ostream& out, std::span<const CorrelationRow> rows,
                           const CategoryTable& categories);

}  // namespace segscope
