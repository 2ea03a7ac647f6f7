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

#include <doctest.h>

#include <fstream>
#include <sstream>

#include "oracles.hpp"
#include "segscope/core.hpp"

using namespace segscope;

namespace {

std::string read_text(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

ErrorKind kind_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected segscope::Error");
    return ErrorKind::Io;
}

}  // namespace

TEST_CASE("category ids accept trainIds and ignore only") {
    for (int v = 0; v <= 18; ++v) CHECK(CategoryId(v).value() == v);
    CHECK(CategoryId(255).is_ignore());
    CHECK(CategoryId::ignore() == CategoryId(255));
    for (int v : {-1, 19, 42, 254, 256}) CHECK(kind_of([&] { CategoryId{v}; }) == ErrorKind::InvalidLabel);
}

TEST_CASE("category_by_name resolves the shipped config") {
    const CategoryTable table = CategoryTable::load(SEGSCOPE_CATEGORY_CONFIG);
    // trainIds from the official cityscapes label definitions
    CHECK(category_by_name(table, "road") == CategoryId(0));
    CHECK(category_by_name(table, "traffic light") == CategoryId(6));
    CHECK(category_by_name(table, "car") == CategoryId(13));
    CHECK(category_by_name(table, "bicycle") == CategoryId(18));
    CHECK(category_by_name(table, "ignore") == CategoryId(255));

    try {
        category_by_name(table, "spaceship");
        FAIL("expected unknown-name");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::UnknownName);
        CHECK(std::string(e.what()).find("spaceship") != std::string::npos);
    }
    CHECK(table.evaluable().size() == 19);
    CHECK(table.color_of(CategoryId(0)) == Rgb{128, 64, 128});
}

TEST_CASE("builtin table is the shipped config") {
    const std::string text = read_text(SEGSCOPE_CATEGORY_CONFIG);
    CHECK(CategoryTable::builtin().serialize() == text);
}

TEST_CASE("category config round-trips byte-identically") {
    const std::string text = read_text(SEGSCOPE_CATEGORY_CONFIG);
    CHECK(CategoryTable::parse(text).serialize() == text);

    // Reordered lines, no ignore entry, no trailing newline.
    std::string shuffled;
    std::istringstream lines(text);
    std::vector<std::string> rows;
    for (std::string line; std::getline(lines, line);)
        if (line.rfind("255,", 0) != 0) rows.push_back(line);
    std::reverse(rows.begin(), rows.end());
    for (std::size_t i = 0; i < rows.size(); ++i) shuffled += rows[i] + (i + 1 < rows.size() ? "\n" : "");
    const auto table = CategoryTable::parse(shuffled);
    CHECK(table.serialize() == shuffled);
    CHECK(table.by_name("ignore").is_ignore());
    CHECK(table.evaluable()[0].name == "road");
}

TEST_CASE("category config rejects malformed tables") {
    const std::string text = read_text(SEGSCOPE_CATEGORY_CONFIG);
    auto replace = [&](const std::string& from, const std::string& to) {
        std::string s = text;
        s.replace(s.find(from), from.size(), to);
        return s;
    };
    CHECK(kind_of([&] { CategoryTable::parse(replace("0,road,128,64,128", "0,road,128,64")); }) == ErrorKind::Parse);
    CHECK(kind_of([&] { CategoryTable::parse(replace("1,sidewalk", "1,road")); }) == ErrorKind::Parse);
    CHECK(kind_of([&] { CategoryTable::parse(replace("18,bicycle,119", "17,bicycle,119")); }) == ErrorKind::Parse);
    CHECK(kind_of([&] { CategoryTable::parse(replace("18,bicycle,119", "19,bicycle,119")); }) == ErrorKind::Parse);
    CHECK(kind_of([&] { CategoryTable::parse(replace("128,64,128", "128,64,300")); }) == ErrorKind::Parse);
    CHECK(kind_of([&] { CategoryTable::parse(replace("18,bicycle,119,11,32\n", "")); }) == ErrorKind::Parse);
}

TEST_CASE("label maps reject labels 19..254") {
    CHECK_NOTHROW(LabelMap(2, 1, std::vector<std::uint8_t>{0, 255}));
    for (int v : {19, 100, 254}) {
        CHECK(kind_of([&] { LabelMap(2, 1, std::vector<std::uint8_t>{0, static_cast<std::uint8_t>(v)}); }) ==
              ErrorKind::InvalidLabel);
    }
    CHECK(kind_of([] { LabelMap(2, 2, std::vector<std::uint8_t>{0, 0, 0}); }) == ErrorKind::DimensionMismatch);
    const LabelMap m(3, 2, CategoryId(5));
    CHECK(m.at(2, 1) == CategoryId(5));
    CHECK(kind_of([&] { m.at(3, 0); }) == ErrorKind::OutOfBounds);
}

TEST_CASE("weight fields clamp and reject non-finite values") {
    const WeightField f(2, 2, {0.0f, 0.5f, 1.7f, -0.2f});
    CHECK(f.at(0, 0) == 0.0f);
    CHECK(f.at(1, 0) == 0.5f);
    CHECK(f.at(0, 1) == 1.0f);
    CHECK(f.at(1, 1) == 0.0f);
    CHECK(kind_of([] { WeightField(1, 1, {std::nanf("")}); }) == ErrorKind::NonFinitePayload);
    CHECK(kind_of([] { WeightField(1, 1, {INFINITY}); }) == ErrorKind::NonFinitePayload);
}

TEST_CASE("composite params require alpha1 > alpha2") {
    CHECK_NOTHROW(CompositeParams());
    CHECK(CompositeParams().alpha1() == 1.0);
    CHECK(CompositeParams().alpha2() == 0.5);
    CHECK_NOTHROW(CompositeParams(1.0, 0.999, {}));
    CHECK(kind_of([] { CompositeParams(1.0, 1.0, {}); }) == ErrorKind::InvalidParameter);
    CHECK(kind_of([] { CompositeParams(0.3, 0.5, {}); }) == ErrorKind::InvalidParameter);
    CHECK(kind_of([] { CompositeParams(0.0, 0.0, {}); }) == ErrorKind::InvalidParameter);
    CHECK(kind_of([] { CompositeParams(1.5, 0.2, {}); }) == ErrorKind::InvalidParameter);
    CHECK(kind_of([] { CompositeParams(NAN, 0.2, {}); }) == ErrorKind::InvalidParameter);
    CHECK(kind_of([] { CompositeParams(1.0, 0.2, ColormapId{"paired", 1}); }) == ErrorKind::InvalidParameter);
}

TEST_CASE("category lists parse into sets") {
    const auto& table = CategoryTable::builtin();
    CHECK(parse_category_list(table, "").empty());
    const auto s = parse_category_list(table, "car,road");
    CHECK(s.size() == 2);
    CHECK(s.contains(CategoryId(13)));
    CHECK(s.contains(CategoryId(0)));
    CHECK_FALSE(s.contains(CategoryId::ignore()));
    CHECK(kind_of([&] { parse_category_list(table, "car,spaceship"); }) == ErrorKind::UnknownName);
    CHECK(kind_of([&] { parse_category_list(table, "ignore"); }) == ErrorKind::InvalidParameter);
}
