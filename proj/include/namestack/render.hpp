// Backends: LaTeX (\namestack markup plus its box-model lowering), HTML (CSS
// grid cell sharing), SVG (geometric superimposition and the circular
// arrangement), and plain-text reveal output. Every backend embeds the same
// reveal string byte-for-byte: ActualText in LaTeX, the title attribute in
// HTML, a <title> element in SVG, the whole output in text.
#ifndef NAMESTACK_RENDER_HPP
#define NAMESTACK_RENDER_HPP

#include <cstdio>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "namestack/format.hpp"
#include "namestack/metrics.hpp"
#include "namestack/ratio.hpp"
#include "namestack/stack.hpp"

namespace namestack {

enum class Backend { latex, html, svg, text };
enum class CitationMode { textual, parenthetical };

struct RenderOptions {
    Backend backend = Backend::latex;
    std::optional<Ratio> opacity;     // overrides the stack's own opacity
    bool disable_name_links = true;   // citations: keep only the year linked
    bool include_tooltip = false;     // LaTeX: write the \pdftooltip wrapper
    bool include_actual_text = false; // LaTeX: write the accsupp wrapper
    bool expand = false;              // LaTeX: emit the vbox/hbox lowering
    bool standalone = false;          // HTML: full page instead of a fragment
    double size = 10;                 // point size for geometric backends
};

// LaTeX treats '~' as a tie; the other backends display it as a plain space.
inline std::string detie(std::string_view s) {
    std::string out(s);
    for (char& c : out)
        if (c == '~')
            c = ' ';
    return out;
}

namespace detail {

inline std::string escape_markup(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    for (const char c : s) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        case '\'': out += "&#39;"; break;
        default: out += c;
        }
    }
    return out;
}

// Fixed-point with trailing zeros trimmed; keeps goldens stable and avoids
// float noise like "2.44929e-14" in coordinates.
inline std::string format_number(double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3f", value);
    std::string out = buf;
    out.erase(out.find_last_not_of('0') + 1);
    if (!out.empty() && out.back() == '.')
        out.pop_back();
    if (out == "-0")
        out = "0";
    return out;
}

inline Ratio resolve_opacity(const NameStack& stack, const RenderOptions& opts) {
    const Ratio opacity = opts.opacity.value_or(stack.opacity);
    check_opacity(opacity);
    return opacity;
}

// "[0.5]" when the opacity differs from the built-in default, else nothing.
inline std::string opacity_argument(const Ratio& opacity) {
    if (opacity == default_opacity())
        return "";
    return "[" + opacity.minimal() + "]";
}

}  // namespace detail

// LaTeX markup. Default form is the macro call `\namestack{A; B}`; --expand
// lowers it to the vertical box it effectively becomes: hboxes separated by a
// negative one-line skip. Tooltip and copy/paste wrappers are emitted as
// literal package calls when requested.
inline std::string emit_latex(const NameStack& stack, const RenderOptions& opts = {}) {
    for (const std::string& name : stack.names)
        if (name.find(';') != std::string::npos)
            throw std::invalid_argument("name contains ';', which collides with the stack separator: " +
                                        name);
    const Ratio opacity = detail::resolve_opacity(stack, opts);

    std::string core;
    if (opts.expand) {
        core = "\\vbox{%\n";
        for (std::size_t i = 0; i < stack.names.size(); ++i) {
            if (i > 0)
                core += "  \\vskip-\\baselineskip\n";
            core += "  \\hbox{" + stack.names[i] + "}%\n";
        }
        core += "}%";
        if (opacity != default_opacity())
            core = "\\textopacity{" + opacity.fixed3() + "}{%\n" + core + "\n}%";
    } else {
        std::string joined;
        for (std::size_t i = 0; i < stack.names.size(); ++i) {
            if (i > 0)
                joined += "; ";
            joined += stack.names[i];
        }
        core = "\\namestack" + detail::opacity_argument(opacity) + "{" + joined + "}";
    }

    if (opts.include_tooltip)
        core = "\\pdftooltip{" + core + "}{" + stack.tooltip_text + "}";
    if (opts.include_actual_text)
        core = "\\BeginAccSupp{method=plain,ActualText={" + stack.actual_text + "}}" + core +
               "\\EndAccSupp{}";
    return core;
}

// HTML: one grid container, every name in the same cell so the cell grows to
// the largest name. The title attribute carries the reveal string.
inline std::string emit_html(const NameStack& stack, const RenderOptions& opts = {}) {
    const Ratio opacity = detail::resolve_opacity(stack, opts);
    const std::string alpha = opacity.fixed3();

    std::string fragment = "<span class=\"stack\" style=\"display: inline-grid\" title=\"" +
                           detail::escape_markup(stack.tooltip_text) + "\">\n";
    for (const std::string& name : stack.names)
        fragment += "  <span class=\"name\" style=\"grid-row: 1; grid-column: 1; opacity: " +
                    alpha + "\">" + detail::escape_markup(name) + "</span>\n";
    fragment += "</span>";
    if (!opts.standalone)
        return fragment;

    std::string page = "<!DOCTYPE html>\n<html>\n<head>\n<meta charset=\"utf-8\">\n";
    page += "<title>name stack</title>\n<style>\n";
    page += ".stack { display: inline-grid; }\n";
    page += ".name { grid-row: 1; grid-column: 1; opacity: " + alpha + "; }\n";
    page += "</style>\n</head>\n<body>\n" + fragment + "\n</body>\n</html>";
    return page;
}

// SVG superimposition: every name is a text element with the same anchor, so
// the document is as wide as the widest name and exactly one line tall.
inline std::string emit_svg(const NameStack& stack, const FontMetrics& m,
                            const RenderOptions& opts = {}) {
    const Ratio opacity = detail::resolve_opacity(stack, opts);
    const StackLayout layout = stack_bbox(stack, m, opts.size);
    const std::string width = detail::format_number(layout.bbox_width);
    const std::string height = detail::format_number(layout.bbox_height);
    const std::string baseline = detail::format_number(layout.bbox_height * 0.8);

    std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + width +
                      "\" height=\"" + height + "\" viewBox=\"0 0 " + width + " " + height +
                      "\">\n";
    out += "  <title>" + detail::escape_markup(stack.tooltip_text) + "</title>\n";
    for (const std::string& name : stack.names)
        out += "  <text x=\"0\" y=\"" + baseline + "\" font-size=\"" +
               detail::format_number(opts.size) + "\" fill=\"black\" fill-opacity=\"" +
               opacity.fixed3() + "\">" + detail::escape_markup(name) + "</text>\n";
    out += "</svg>";
    return out;
}

// SVG circular arrangement: anchors on the circle, text centered on its
// anchor and rotated to the local tangent; flipped names get an extra 180°.
inline std::string emit_svg(const NameStack& stack, const CircularLayout& layout,
                            const RenderOptions& opts = {}) {
    if (layout.placements.size() != stack.names.size())
        throw std::invalid_argument("layout does not match the stack's name count");
    const Ratio opacity = detail::resolve_opacity(stack, opts);

    double max_width = 0;
    for (const CircularLayout::Placement& p : layout.placements)
        if (p.width > max_width)
            max_width = p.width;
    const double half = layout.radius + max_width / 2 + opts.size * 1.2;
    const std::string side = detail::format_number(2 * half);
    const std::string corner = detail::format_number(-half);

    std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + side +
                      "\" height=\"" + side + "\" viewBox=\"" + corner + " " + corner + " " +
                      side + " " + side + "\">\n";
    out += "  <title>" + detail::escape_markup(stack.tooltip_text) + "</title>\n";
    for (std::size_t i = 0; i < stack.names.size(); ++i) {
        const CircularLayout::Placement& p = layout.placements[i];
        // SVG rotations are clockwise; a name anchored at angle θ reads along
        // the tangent, which is rotate(90° − θ), plus 180° when flipped.
        const double rotate = 90.0 - p.angle + (p.flipped ? 180.0 : 0.0);
        const std::string x = detail::format_number(p.x);
        const std::string y = detail::format_number(p.y);
        out += "  <text x=\"" + x + "\" y=\"" + y + "\" transform=\"rotate(" +
               detail::format_number(rotate) + " " + x + " " + y +
               ")\" text-anchor=\"middle\" font-size=\"" + detail::format_number(opts.size) +
               "\" fill=\"black\" fill-opacity=\"" + opacity.fixed3() + "\">" +
               detail::escape_markup(stack.names[i]) + "</text>\n";
    }
    out += "</svg>";
    return out;
}

// Plain text: the copy/paste reveal string, names in their original order.
inline std::string emit_text(const NameStack& stack) {
    return stack.actual_text;
}

// natbib-shaped citation text. The name portion is stack-wrapped and, by
// default, excluded from the hyperlink so the tooltip annotation is not
// covered; the year stays a clickable link to the bibliography.
inline std::string emit_citation(const BibEntry& entry, CitationMode mode,
                                 const RenderOptions& opts = {}) {
    const AuthorList names = detail::entry_names(entry);
    if (entry.year.empty())
        throw std::runtime_error("entry '" + entry.key + "' has no year");
    std::string arg;
    if (opts.opacity) {
        detail::check_opacity(*opts.opacity);
        arg = detail::opacity_argument(*opts.opacity);
    }
    const std::string stack_tex = "\\namestack" + arg + "{" + format_full_names(names) + "}";

    if (opts.disable_name_links) {
        const std::string year = "\\hyperlink{cite." + entry.key + "}{" + entry.year + "}";
        return mode == CitationMode::textual ? stack_tex + " [" + year + "]"
                                             : "[" + stack_tex + ", " + year + "]";
    }
    const std::string body = mode == CitationMode::textual
                                 ? stack_tex + " [" + entry.year + "]"
                                 : stack_tex + ", " + entry.year;
    const std::string link = "\\hyperlink{cite." + entry.key + "}{" + body + "}";
    return mode == CitationMode::textual ? link : "[" + link + "]";
}

}  // namespace namestack

#endif
