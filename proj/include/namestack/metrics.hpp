// Geometry: font-metrics tables (advance widths in font units), string
// measurement, the stack bounding box (max width, exactly one line tall), and
// the circular arrangement with optional upright flipping.
#ifndef NAMESTACK_METRICS_HPP
#define NAMESTACK_METRICS_HPP

#include <cmath>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "namestack/stack.hpp"
#include "namestack/unicode.hpp"

namespace namestack {

struct FontMetrics {
    std::unordered_map<char32_t, std::int64_t> advance;  // font units
    std::int64_t units_per_em = 1000;
    std::int64_t line_height = 1200;     // font units; 1.2 em by default
    std::int64_t default_advance = 500;  // fallback for unmapped codepoints

    std::int64_t advance_for(char32_t cp) const {
        const auto it = advance.find(cp);
        return it == advance.end() ? default_advance : it->second;
    }
};

/// Every codepoint one unit wide, one unit per em, one unit per line: string
// width in points equals its codepoint count times the point size.
inline FontMetrics uniform_metrics() {
    FontMetrics m;
    m.units_per_em = 1;
    m.line_height = 1;
    m.default_advance = 1;
    return m;
}

namespace detail {

// Advance widths of a standard serif text face (1000 units/em): printable
// ASCII, with Latin-1 letters mapped onto their base letters.
struct AdvanceEntry {
    char32_t cp;
    std::int16_t width;
};

inline const std::vector<AdvanceEntry>& serif_advances() {
    static const std::vector<AdvanceEntry> table = [] {
        std::vector<AdvanceEntry> t = {
            {U' ', 250},  {U'!', 333},  {U'"', 408},  {U'#', 500},  {U'$', 500},
            {U'%', 833},  {U'&', 778},  {U'\'', 333}, {U'(', 333},  {U')', 333},
            {U'*', 500},  {U'+', 564},  {U',', 250},  {U'-', 333},  {U'.', 250},
            {U'/', 278},  {U':', 278},  {U';', 278},  {U'<', 564},  {U'=', 564},
            {U'>', 564},  {U'?', 444},  {U'@', 921},  {U'[', 333},  {U'\\', 278},
            {U']', 333},  {U'^', 469},  {U'_', 500},  {U'`', 333},  {U'{', 480},
            {U'|', 200},  {U'}', 480},  {U'~', 541},
            {U'A', 722},  {U'B', 667},  {U'C', 667},  {U'D', 722},  {U'E', 611},
            {U'F', 556},  {U'G', 722},  {U'H', 722},  {U'I', 333},  {U'J', 389},
            {U'K', 722},  {U'L', 611},  {U'M', 889},  {U'N', 722},  {U'O', 722},
            {U'P', 556},  {U'Q', 722},  {U'R', 667},  {U'S', 556},  {U'T', 611},
            {U'U', 722},  {U'V', 722},  {U'W', 944},  {U'X', 722},  {U'Y', 722},
            {U'Z', 611},
            {U'a', 444},  {U'b', 500},  {U'c', 444},  {U'd', 500},  {U'e', 444},
            {U'f', 333},  {U'g', 500},  {U'h', 500},  {U'i', 278},  {U'j', 278},
            {U'k', 500},  {U'l', 278},  {U'm', 778},  {U'n', 500},  {U'o', 500},
            {U'p', 500},  {U'q', 500},  {U'r', 333},  {U's', 389},  {U't', 278},
            {U'u', 500},  {U'v', 500},  {U'w', 722},  {U'x', 500},  {U'y', 500},
            {U'z', 444},
        };
        for (char32_t d = U'0'; d <= U'9'; ++d)
            t.push_back({d, 500});
        // Latin-1 supplement letters take their base letter's width.
        const struct { std::string_view accented; char base; } families[] = {
            {"ÀÁÂÃÄÅ", 'A'}, {"Ç", 'C'}, {"ÈÉÊË", 'E'}, {"ÌÍÎÏ", 'I'},
            {"Ñ", 'N'},      {"ÒÓÔÕÖØ", 'O'}, {"ÙÚÛÜ", 'U'}, {"Ý", 'Y'},
            {"àáâãäå", 'a'}, {"ç", 'c'}, {"èéêë", 'e'}, {"ìíîï", 'i'},
            {"ñ", 'n'},      {"òóôõöø", 'o'}, {"ùúûü", 'u'}, {"ýÿ", 'y'},
        };
        std::int16_t base_width[128] = {};
        for (const AdvanceEntry& e : t)
            if (e.cp < 128)
                base_width[e.cp] = e.width;
        for (const auto& family : families) {
            std::size_t pos = 0;
            while (pos < family.accented.size())
                t.push_back({utf8_next(family.accented, pos),
                             base_width[static_cast<unsigned char>(family.base)]});
        }
        t.push_back({U'Æ', 889});
        t.push_back({U'æ', 667});
        t.push_back({U'Ð', 722});
        t.push_back({U'ð', 500});
        t.push_back({U'Þ', 556});
        t.push_back({U'þ', 500});
        t.push_back({U'ß', 500});
        t.push_back({U'×', 564});
        t.push_back({U'÷', 564});
        return t;
    }();
    return table;
}

}  // namespace detail

inline FontMetrics builtin_metrics() {
    FontMetrics m;  // defaults: 1000/em, 1.2 em lines, 500 fallback
    for (const detail::AdvanceEntry& e : detail::serif_advances())
        m.advance.emplace(e.cp, e.width);
    return m;
}

// Metrics file: '#' comments; header lines `units_per_em N`, `default_advance
// N`, `line_height N`; body lines `HEX_CODEPOINT ADVANCE`. line_height
// defaults to 1.2 em when omitted.
inline FontMetrics parse_metrics(std::string_view text) {
    FontMetrics m;
    m.advance.clear();
    bool have_upem = false, have_default = false, have_line = false;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    auto fail = [&](const std::string& what) {
        throw std::runtime_error("metrics: line " + std::to_string(line_no) + ": " + what);
    };
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos)
            eol = text.size();
        std::string line(text.substr(pos, eol - pos));
        pos = eol + 1;
        ++line_no;
        if (const std::size_t hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::istringstream in(line);
        std::string first;
        if (!(in >> first))
            continue;
        auto read_int = [&](const char* what) {
            std::int64_t value;
            if (!(in >> value) || value <= 0)
                fail(std::string("expected positive integer ") + what);
            return value;
        };
        if (first == "units_per_em") {
            m.units_per_em = read_int("units_per_em");
            have_upem = true;
        } else if (first == "default_advance") {
            m.default_advance = read_int("default_advance");
            have_default = true;
        } else if (first == "line_height") {
            m.line_height = read_int("line_height");
            have_line = true;
        } else {
            std::size_t used = 0;
            unsigned long cp = 0;
            try {
                cp = std::stoul(first, &used, 16);
            } catch (const std::exception&) {
                fail("bad codepoint '" + first + "'");
            }
            if (used != first.size() || cp > 0x10FFFF)
                fail("bad codepoint '" + first + "'");
            m.advance[static_cast<char32_t>(cp)] = read_int("advance");
        }
        std::string extra;
        if (in >> extra)
            fail("trailing text '" + extra + "'");
    }
    if (!have_upem)
        fail("missing units_per_em");
    if (!have_default)
        fail("missing default_advance");
    if (!have_line)
        m.line_height = m.units_per_em + m.units_per_em / 5;
    return m;
}

inline FontMetrics load_metrics_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open metrics file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_metrics(buf.str());
}

// String width in points: sum of advances scaled by size / units_per_em.
inline double measure(std::string_view s, const FontMetrics& m, double size) {
    if (size <= 0)
        throw std::invalid_argument("point size must be positive");
    std::int64_t units = 0;
    std::size_t pos = 0;
    while (pos < s.size())
        units += m.advance_for(detail::utf8_next(s, pos));
    return static_cast<double>(units) * size / static_cast<double>(m.units_per_em);
}

struct StackLayout {
    struct Box {
        double width;
        double height;  // one line
    };
    std::vector<Box> boxes;   // one per name, in stack order
    double bbox_width = 0;    // max over per-name widths
    double bbox_height = 0;   // exactly one line_height, whatever the count
};

// All names share one baseline and left edge, so the stack's box is the
// widest name's box: consecutive names collapse by a negative one-line skip.
inline StackLayout stack_bbox(const NameStack& stack, const FontMetrics& m, double size) {
    if (stack.names.empty())
        throw std::invalid_argument("empty stack");
    StackLayout layout;
    const double line = static_cast<double>(m.line_height) * size /
                        static_cast<double>(m.units_per_em);
    for (const std::string& name : stack.names) {
        const double width = measure(name, m, size);
        layout.boxes.push_back({width, line});
        if (width > layout.bbox_width)
            layout.bbox_width = width;
    }
    layout.bbox_height = line;
    return layout;
}

struct CircularLayout {
    struct Placement {
        double angle = 0;     // degrees, as laid out (rotation + k * 360/N)
        double x = 0, y = 0;  // anchor point, y growing downward (SVG axes)
        bool flipped = false; // rotated 180° in place to stay upright
        double width = 0;     // the name's measured width in points
    };
    double radius = 0;
    double rotation = 0;
    double step = 0;  // degrees between consecutive names: 360/N
    std::vector<Placement> placements;
};

constexpr double pi = 3.14159265358979323846;

// Anchors N names equally spaced on a circle, each oriented along the local
// tangent. In upright mode, names whose angle falls on the lower semicircle
// (normalized angle in [180°, 360°)) are flipped 180° in place.
inline CircularLayout circular_layout(const std::vector<std::string>& names, double radius,
                                      double rotation, bool upright, const FontMetrics& m,
                                      double size) {
    if (names.size() < 2)
        throw std::invalid_argument("circular layout needs at least 2 names");
    if (radius <= 0)
        throw std::invalid_argument("radius must be positive");
    CircularLayout layout;
    layout.radius = radius;
    layout.rotation = rotation;
    layout.step = 360.0 / static_cast<double>(names.size());
    for (std::size_t k = 0; k < names.size(); ++k) {
        CircularLayout::Placement p;
        p.angle = rotation + static_cast<double>(k) * layout.step;
        double normalized = std::fmod(p.angle, 360.0);
        if (normalized < 0)
            normalized += 360.0;
        p.flipped = upright && normalized >= 180.0;
        const double rad = p.angle * pi / 180.0;
        p.x = radius * std::cos(rad);
        p.y = -radius * std::sin(rad);
        p.width = measure(names[k], m, size);
        layout.placements.push_back(p);
    }
    return layout;
}

}  // namespace namestack

#endif
