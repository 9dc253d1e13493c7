#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "namestack/metrics.hpp"
#include "namestack/stack.hpp"
#include "oracle.hpp"

using namespace namestack;

TEST_CASE("uniform metrics count codepoints") {
    const FontMetrics m = uniform_metrics();
    CHECK(measure("Erik Demaine", m, 1) == 12);
    CHECK(measure("Martin Demaine", m, 1) == 14);
    CHECK(measure("", m, 1) == 0);
    CHECK(measure("ab", m, 10) == 20);
    // One multibyte codepoint is one unit.
    CHECK(measure("É", m, 1) == 1);
    CHECK_THROWS_AS(measure("x", m, 0), std::invalid_argument);
}

TEST_CASE("builtin metrics carry serif advances") {
    const FontMetrics m = builtin_metrics();
    CHECK(m.units_per_em == 1000);
    CHECK(m.line_height == 1200);
    CHECK(measure("AV", m, 10) == Catch::Approx((722 + 722) * 10.0 / 1000).epsilon(1e-12));
    // Accented Latin-1 letters take their base letter's width.
    CHECK(measure("É", m, 10) == measure("E", m, 10));
    CHECK(measure("ø", m, 10) == measure("o", m, 10));
    // Unmapped codepoints fall back to the default advance.
    CHECK(measure("\xE4\xB8\x80", m, 10) == Catch::Approx(5.0).epsilon(1e-12));
}

TEST_CASE("invalid UTF-8 falls back to Latin-1 bytes") {
    const FontMetrics m = builtin_metrics();
    // 0xC9 alone is not valid UTF-8; as Latin-1 it is 'É'.
    CHECK(measure("\xC9", m, 10) == measure("E", m, 10));
}

TEST_CASE("metrics file parsing") {
    const FontMetrics m = parse_metrics(
        "# toy monospace table\n"
        "units_per_em 100\n"
        "default_advance 60\n"
        "line_height 120\n"
        "41 70  # 'A'\n"
        "0042 80\n");
    CHECK(m.units_per_em == 100);
    CHECK(m.default_advance == 60);
    CHECK(m.line_height == 120);
    CHECK(m.advance_for(U'A') == 70);
    CHECK(m.advance_for(U'B') == 80);
    CHECK(m.advance_for(U'C') == 60);
    CHECK(measure("AB", m, 100) == Catch::Approx(150.0).epsilon(1e-12));
}

TEST_CASE("metrics line_height defaults to 1.2 em") {
    const FontMetrics m = parse_metrics("units_per_em 1000\ndefault_advance 500\n");
    CHECK(m.line_height == 1200);
}

TEST_CASE("metrics file errors") {
    CHECK_THROWS_AS(parse_metrics("default_advance 1\n"), std::runtime_error);  // no units_per_em
    CHECK_THROWS_AS(parse_metrics("units_per_em 1\n"), std::runtime_error);  // no default_advance
    CHECK_THROWS_AS(parse_metrics("units_per_em 1\ndefault_advance 1\nZZ 5\n"),
                    std::runtime_error);  // bad codepoint
    CHECK_THROWS_AS(parse_metrics("units_per_em 1\ndefault_advance 1\n41 5 extra\n"),
                    std::runtime_error);  // trailing text
    CHECK_THROWS_AS(parse_metrics("units_per_em 0\ndefault_advance 1\n"),
                    std::runtime_error);  // nonpositive header
    CHECK_THROWS_AS(parse_metrics("units_per_em 1\ndefault_advance 1\n41 -2\n"),
                    std::runtime_error);  // nonpositive advance
    CHECK_THROWS_AS(load_metrics_file("/nonexistent/metrics.txt"), std::runtime_error);
}

TEST_CASE("appending characters never shrinks a string") {
    std::mt19937 rng(7);
    const FontMetrics builtin = builtin_metrics();
    const FontMetrics uniform = uniform_metrics();
    for (int round = 0; round < 100; ++round) {
        const std::string word = oracle::random_word(rng, true);
        double prev_b = 0, prev_u = 0;
        for (std::size_t len = 1; len <= word.size(); ++len) {
            const std::string prefix = word.substr(0, len);
            const double b = measure(prefix, builtin, 10);
            const double u = measure(prefix, uniform, 10);
            CHECK(b >= prev_b);
            CHECK(u >= prev_u);
            prev_b = b;
            prev_u = u;
        }
    }
}

TEST_CASE("stack bounding box is the widest name, one line tall") {
    const FontMetrics m = uniform_metrics();
    const NameStack stack = build_stack({"Erik Demaine", "Martin Demaine"});
    const StackLayout layout = stack_bbox(stack, m, 1);
    REQUIRE(layout.boxes.size() == 2);
    CHECK(layout.bbox_width == 14);
    CHECK(layout.bbox_height == 1);
    CHECK(layout.boxes[0].width == 12);
    CHECK(layout.boxes[1].width == 14);

    const StackLayout solo = stack_bbox(build_stack({"Solo"}), m, 1);
    CHECK(solo.bbox_width == 4);
    CHECK(solo.bbox_height == 1);
}

TEST_CASE("bounding box equals the max of member widths") {
    std::mt19937 rng(11);
    const FontMetrics m = uniform_metrics();
    std::uniform_int_distribution<std::size_t> count(1, 12);
    for (int round = 0; round < 200; ++round) {
        std::vector<std::string> names;
        double widest = 0;
        for (std::size_t i = count(rng); i > 0; --i) {
            names.push_back(oracle::random_word(rng, true));
            widest = std::max(widest, measure(names.back(), m, 3));
        }
        const StackLayout layout = stack_bbox(build_stack(names), m, 3);
        CHECK(layout.bbox_width == widest);
        CHECK(layout.bbox_height == 3);  // independent of the name count
    }
}

TEST_CASE("circular layout spaces names uniformly") {
    const FontMetrics m = uniform_metrics();
    const std::vector<std::string> names = {"A", "B", "C", "D"};

    const CircularLayout layout = circular_layout(names, 50, 90, false, m, 10);
    REQUIRE(layout.placements.size() == 4);
    CHECK(layout.step == Catch::Approx(90.0));
    CHECK(layout.placements[0].angle == Catch::Approx(90.0));
    CHECK(layout.placements[3].angle == Catch::Approx(360.0));  // raw, not normalized
    for (std::size_t i = 0; i + 1 < layout.placements.size(); ++i)
        CHECK(layout.placements[i + 1].angle - layout.placements[i].angle ==
              Catch::Approx(layout.step).margin(1e-12));

    // Anchors sit on the circle.
    for (const auto& p : layout.placements)
        CHECK(std::hypot(p.x, p.y) == Catch::Approx(50.0).margin(1e-9));

    // Antipodal pair for two names.
    const CircularLayout two = circular_layout({"A", "B"}, 10, 0, false, m, 10);
    CHECK(two.placements[0].x == Catch::Approx(-two.placements[1].x).margin(1e-9));
    CHECK(two.placements[0].y == Catch::Approx(-two.placements[1].y).margin(1e-9));
}

TEST_CASE("upright mode flips exactly the lower semicircle") {
    const FontMetrics m = uniform_metrics();
    const std::vector<std::string> names = {"A", "B", "C", "D"};

    const CircularLayout plain = circular_layout(names, 200, 0, false, m, 10);
    for (const auto& p : plain.placements)
        CHECK_FALSE(p.flipped);

    const CircularLayout upright = circular_layout(names, 200, 0, true, m, 10);
    CHECK_FALSE(upright.placements[0].flipped);  // 0°
    CHECK_FALSE(upright.placements[1].flipped);  // 90°
    CHECK(upright.placements[2].flipped);        // 180°
    CHECK(upright.placements[3].flipped);        // 270°
}

TEST_CASE("upright names never point downward") {
    const FontMetrics m = uniform_metrics();
    for (const std::size_t n : {2u, 4u, 13u, 15u}) {
        std::vector<std::string> names;
        for (std::size_t i = 0; i < n; ++i)
            names.push_back("N" + std::to_string(i));
        for (const double radius : {50.0, 200.0}) {
            const CircularLayout layout = circular_layout(names, radius, 90, true, m, 10);
            for (const auto& p : layout.placements) {
                // The glyph up-vector of tangent-set text at angle θ is the
                // outward radial (cos θ, sin θ), negated when flipped.
                const double rad = p.angle * pi / 180.0;
                const double up_y = (p.flipped ? -1 : 1) * std::sin(rad);
                CHECK(up_y >= -1e-12);
            }
        }
    }
}

TEST_CASE("circular layout preconditions") {
    const FontMetrics m = uniform_metrics();
    CHECK_THROWS_AS(circular_layout({"A"}, 50, 0, false, m, 10), std::invalid_argument);
    CHECK_THROWS_AS(circular_layout({"A", "B"}, 0, 0, false, m, 10), std::invalid_argument);
    CHECK_THROWS_AS(circular_layout({"A", "B"}, -5, 0, false, m, 10), std::invalid_argument);
}

TEST_CASE("circular placements carry measured widths") {
    const CircularLayout layout =
        circular_layout({"AB", "CDE"}, 50, 0, false, uniform_metrics(), 10);
    CHECK(layout.placements[0].width == 20);
    CHECK(layout.placements[1].width == 30);
}
