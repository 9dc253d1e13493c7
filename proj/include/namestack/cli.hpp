// Command-line front end. run_cli() takes argv (without the program name) and
// the two output streams, so tests can drive every subcommand in-process.
//
// Exit codes: 0 success, 1 input/parse failure, 2 usage error.
#ifndef NAMESTACK_CLI_HPP
#define NAMESTACK_CLI_HPP

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "namestack/bib.hpp"
#include "namestack/format.hpp"
#include "namestack/metrics.hpp"
#include "namestack/ratio.hpp"
#include "namestack/render.hpp"
#include "namestack/stack.hpp"

namespace namestack {

namespace cli_detail {

// Flag values that fail validation after CLI11 parsing; mapped to exit 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline std::string read_input(const std::string& path) {
    std::ostringstream buf;
    if (path == "-") {
        buf << std::cin.rdbuf();
    } else {
        std::ifstream in(path, std::ios::binary);
        if (!in)
            throw std::runtime_error("cannot open input file: " + path);
        buf << in.rdbuf();
    }
    return buf.str();
}

inline std::vector<std::string> read_stdin_names() {
    std::vector<std::string> names;
    std::string line;
    while (std::getline(std::cin, line)) {
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (!line.empty())
            names.push_back(line);
    }
    return names;
}

// --metrics accepts the built-in table names or a metrics file path;
// NAMESTACK_METRICS supplies the value when the flag is absent.
inline FontMetrics metrics_for(std::string spec) {
    if (spec.empty()) {
        if (const char* env = std::getenv("NAMESTACK_METRICS"))
            spec = env;
    }
    if (spec.empty() || spec == "builtin")
        return builtin_metrics();
    if (spec == "uniform")
        return uniform_metrics();
    return load_metrics_file(spec);
}

inline std::optional<Ratio> parse_opacity_flag(const std::string& text) {
    if (text.empty())
        return std::nullopt;
    try {
        const Ratio r = Ratio::parse(text);
        if (!(Ratio(0) < r && r <= Ratio(1)))
            throw std::invalid_argument("out of range");
        return r;
    } catch (const std::exception&) {
        throw UsageError("invalid opacity '" + text + "': expected a value in (0, 1]");
    }
}

inline Backend backend_for(const std::string& format) {
    if (format == "latex")
        return Backend::latex;
    if (format == "html")
        return Backend::html;
    if (format == "svg")
        return Backend::svg;
    return Backend::text;
}

// All emitters return text without a trailing newline; the CLI finishes any
// non-empty output with exactly one.
inline int write_output(const std::string& path, const std::string& content, std::ostream& out,
                        std::ostream& err) {
    if (path.empty()) {
        out << content;
        if (!content.empty())
            out << '\n';
        return 0;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) {
        err << "namestack: cannot open output file: " << path << '\n';
        return 1;
    }
    file << content;
    if (!content.empty())
        file << '\n';
    return file.good() ? 0 : 1;
}

inline std::string alpha_report(std::size_t count, const Ratio& opacity) {
    std::string out;
    char buf[32];
    for (std::size_t k = 1; k <= count; ++k) {
        std::snprintf(buf, sizeof buf, "%.3f", effective_alpha(k, opacity));
        out += " alpha@" + std::to_string(k) + "=" + buf;
    }
    return out;
}

inline std::string inspect_report(const NameStack& stack, const FontMetrics& m, double size,
                                  const std::string& prefix) {
    const StackLayout layout = stack_bbox(stack, m, size);
    std::string out = prefix;
    out += "names=" + std::to_string(stack.names.size());
    out += " width=" + detail::format_number(layout.bbox_width);
    out += " height=" + detail::format_number(layout.bbox_height);
    out += alpha_report(stack.names.size(), stack.opacity);
    out += "\n" + prefix + "reveal=" + stack.actual_text;
    return out;
}

struct StackArgs {
    std::vector<std::string> names;
    std::string format = "latex";
    std::string opacity;
    std::string metrics;
    std::string output;
    double size = 10;
    bool expand = false;
    bool standalone = false;
    bool tooltip = false;
    bool actual_text = false;
    bool circle = false;
    bool upright = false;
    double radius = 50;
    double rotate = 0;
};

struct BibArgs {
    std::string input;
    std::string format = "latex";
    std::string pattern = "{f.~}{vv~}{ll}{, jj}";
    std::string opacity;
    std::string output;
    bool no_count = false;
};

struct CiteArgs {
    std::string input;
    std::string key;
    std::string mode = "textual";
    std::string opacity;
    std::string output;
    bool link_names = false;
};

struct InspectArgs {
    std::vector<std::string> names;
    std::string bib_path;
    std::string pattern = "{f.~}{vv~}{ll}{, jj}";
    std::string opacity;
    std::string metrics;
    std::string output;
    double size = 1;  // report widths in em-scaled units by default
};

inline int cmd_stack(const StackArgs& args, std::ostream& out, std::ostream& err) {
    std::vector<std::string> names = args.names;
    if (names.size() == 1 && names.front() == "-")
        names = read_stdin_names();
    if (names.empty()) {
        err << "namestack stack: no names given\n";
        return 2;
    }
    for (const std::string& name : names)
        if (name.empty()) {
            err << "namestack stack: empty name\n";
            return 2;
        }
    const std::optional<Ratio> opacity = parse_opacity_flag(args.opacity);
    const Backend backend = backend_for(args.format);
    if (args.circle && backend != Backend::svg)
        throw UsageError("--circle requires --format svg");
    if (args.circle && names.size() < 2)
        throw UsageError("--circle needs at least 2 names");

    if (backend != Backend::latex)
        for (std::string& name : names)
            name = detie(name);
    const NameStack stack = build_stack(names, opacity.value_or(default_opacity()));

    RenderOptions ropts;
    ropts.backend = backend;
    ropts.expand = args.expand;
    ropts.standalone = args.standalone;
    ropts.include_tooltip = args.tooltip;
    ropts.include_actual_text = args.actual_text;
    ropts.size = args.size;

    std::string rendered;
    switch (backend) {
    case Backend::latex:
        rendered = emit_latex(stack, ropts);
        break;
    case Backend::html:
        rendered = emit_html(stack, ropts);
        break;
    case Backend::svg:
        if (args.circle) {
            const FontMetrics m = metrics_for(args.metrics);
            const CircularLayout layout =
                circular_layout(stack.names, args.radius, args.rotate, args.upright, m, args.size);
            rendered = emit_svg(stack, layout, ropts);
        } else {
            rendered = emit_svg(stack, metrics_for(args.metrics), ropts);
        }
        break;
    case Backend::text:
        rendered = emit_text(stack);
        break;
    }
    return write_output(args.output, rendered, out, err);
}

// Display lines for one entry's stack: formatted name slots, de-tied for
// non-LaTeX display.
inline std::vector<std::string> entry_display_slots(const BibEntry& entry,
                                                    const FormatPattern& pattern, bool for_latex) {
    std::vector<std::string> slots = format_name_slots(detail::entry_names(entry), pattern);
    if (!for_latex)
        for (std::string& slot : slots)
            slot = detie(slot);
    return slots;
}

inline int cmd_bib(const BibArgs& args, std::ostream& out, std::ostream& err) {
    FormatPattern pattern;
    try {
        pattern = parse_pattern(args.pattern);
    } catch (const std::exception& e) {
        throw UsageError("invalid --pattern: " + std::string(e.what()));
    }
    const std::optional<Ratio> opacity = parse_opacity_flag(args.opacity);

    const std::vector<BibEntry> entries = parse_bib(read_input(args.input));
    std::string rendered;
    for (const BibEntry& entry : entries) {
        if (!rendered.empty())
            rendered += "\n\n";
        if (args.format == "latex") {
            BibitemOptions bopts;
            bopts.pattern = pattern;
            bopts.include_count = !args.no_count;
            rendered += emit_bibitem(entry, bopts);
        } else {
            const AuthorList names = detail::entry_names(entry);
            const std::string year = detail::entry_year(entry, "");
            NameStack stack = build_stack(entry_display_slots(entry, pattern, false),
                                          opacity.value_or(default_opacity()));
            rendered += "<p class=\"bibitem\" id=\"" + detail::escape_markup(entry.key) + "\">\n";
            rendered += emit_html(stack);
            if (!args.no_count)
                rendered += " (" + std::to_string(num_names(names)) + ")";
            rendered += ".\n" + detail::escape_markup(detail::entry_info_line(entry, year));
            rendered += "\n</p>";
        }
    }
    return write_output(args.output, rendered, out, err);
}

inline int cmd_cite(const CiteArgs& args, std::ostream& out, std::ostream& err) {
    const std::optional<Ratio> opacity = parse_opacity_flag(args.opacity);
    const std::vector<BibEntry> entries = parse_bib(read_input(args.input));
    const BibEntry* entry = nullptr;
    for (const BibEntry& candidate : entries)
        if (candidate.key == args.key)
            entry = &candidate;
    if (!entry) {
        err << "namestack cite: no entry with key '" << args.key << "'\n";
        return 1;
    }
    RenderOptions ropts;
    ropts.opacity = opacity;
    ropts.disable_name_links = !args.link_names;
    const CitationMode mode =
        args.mode == "textual" ? CitationMode::textual : CitationMode::parenthetical;
    return write_output(args.output, emit_citation(*entry, mode, ropts), out, err);
}

inline int cmd_inspect(const InspectArgs& args, std::ostream& out, std::ostream& err) {
    const std::optional<Ratio> opacity = parse_opacity_flag(args.opacity);
    const FontMetrics m = metrics_for(args.metrics);

    std::vector<NameStack> stacks;
    std::vector<std::string> prefixes;
    if (!args.bib_path.empty()) {
        FormatPattern pattern;
        try {
            pattern = parse_pattern(args.pattern);
        } catch (const std::exception& e) {
            throw UsageError("invalid --pattern: " + std::string(e.what()));
        }
        for (const BibEntry& entry : parse_bib(read_input(args.bib_path))) {
            stacks.push_back(build_stack(entry_display_slots(entry, pattern, false),
                                         opacity.value_or(default_opacity())));
            prefixes.push_back("entry=" + entry.key + " ");
        }
    } else {
        std::vector<std::string> names = args.names;
        if (names.size() == 1 && names.front() == "-")
            names = read_stdin_names();
        if (names.empty()) {
            err << "namestack inspect: no names given\n";
            return 2;
        }
        for (std::string& name : names)
            name = detie(name);
        stacks.push_back(build_stack(names, opacity.value_or(default_opacity())));
        prefixes.push_back("");
    }

    std::string rendered;
    for (std::size_t i = 0; i < stacks.size(); ++i) {
        if (!rendered.empty())
            rendered += "\n";
        rendered += inspect_report(stacks[i], m, args.size, prefixes[i]);
    }
    return write_output(args.output, rendered, out, err);
}

}  // namespace cli_detail

// argv without the program name, in natural order.
inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"superimposed author-name stacks for LaTeX, HTML, and SVG"};
    app.name("namestack");
    app.require_subcommand(1);

    cli_detail::StackArgs stack_args;
    CLI::App* stack = app.add_subcommand("stack", "render a stack from name strings");
    stack->add_option("names", stack_args.names, "name strings ('-' reads one per line from stdin)");
    stack->add_option("--format", stack_args.format, "output backend")
        ->check(CLI::IsMember({"latex", "html", "svg", "text"}));
    stack->add_option("--opacity", stack_args.opacity, "per-name opacity in (0, 1], e.g. 0.5 or 2/3");
    stack->add_option("--metrics", stack_args.metrics, "builtin | uniform | metrics file path");
    stack->add_option("--size", stack_args.size, "point size for svg output")
        ->check(CLI::PositiveNumber);
    stack->add_option("-o,--output", stack_args.output, "write to a file instead of stdout");
    stack->add_flag("--expand", stack_args.expand, "latex: emit the vbox/hbox lowering");
    stack->add_flag("--standalone", stack_args.standalone, "html: emit a full page");
    stack->add_flag("--tooltip", stack_args.tooltip, "latex: wrap in \\pdftooltip");
    stack->add_flag("--actual-text", stack_args.actual_text, "latex: wrap in accsupp ActualText");
    stack->add_flag("--circle", stack_args.circle, "svg: arrange names on a circle");
    stack->add_option("--radius", stack_args.radius, "circle radius")->check(CLI::PositiveNumber);
    stack->add_option("--rotate", stack_args.rotate, "circle start angle in degrees");
    stack->add_flag("--upright", stack_args.upright, "circle: flip lower-half names upright");

    cli_detail::BibArgs bib_args;
    CLI::App* bib = app.add_subcommand("bib", "render a bibliography from a .bib file");
    bib->add_option("bibfile", bib_args.input, "input .bib path ('-' for stdin)")->required();
    bib->add_option("--format", bib_args.format, "output backend")
        ->check(CLI::IsMember({"latex", "html"}));
    bib->add_option("--pattern", bib_args.pattern, "name format pattern");
    bib->add_option("--opacity", bib_args.opacity, "stack opacity for html output");
    bib->add_option("-o,--output", bib_args.output, "write to a file instead of stdout");
    bib->add_flag("--no-count", bib_args.no_count, "omit the author-count parenthetical");

    cli_detail::CiteArgs cite_args;
    CLI::App* cite = app.add_subcommand("cite", "render one citation from a .bib file");
    cite->add_option("bibfile", cite_args.input, "input .bib path ('-' for stdin)")->required();
    cite->add_option("key", cite_args.key, "entry key to cite")->required();
    cite->add_option("--mode", cite_args.mode, "citation shape")
        ->check(CLI::IsMember({"textual", "parenthetical"}));
    cite->add_option("--opacity", cite_args.opacity, "stack opacity override");
    cite->add_option("-o,--output", cite_args.output, "write to a file instead of stdout");
    cite->add_flag("--link-names", cite_args.link_names,
                   "wrap the whole citation in the hyperlink (names included)");

    cli_detail::InspectArgs inspect_args;
    CLI::App* inspect = app.add_subcommand("inspect", "report stack geometry and opacity");
    inspect->add_option("names", inspect_args.names,
                        "name strings ('-' reads one per line from stdin)");
    inspect->add_option("--bib", inspect_args.bib_path, "inspect every entry of a .bib file");
    inspect->add_option("--pattern", inspect_args.pattern, "name format pattern for --bib");
    inspect->add_option("--opacity", inspect_args.opacity, "per-name opacity");
    inspect->add_option("--metrics", inspect_args.metrics, "builtin | uniform | metrics file path");
    inspect->add_option("--size", inspect_args.size, "point size for widths")
        ->check(CLI::PositiveNumber);
    inspect->add_option("-o,--output", inspect_args.output, "write to a file instead of stdout");

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (stack->parsed())
            return cli_detail::cmd_stack(stack_args, out, err);
        if (bib->parsed())
            return cli_detail::cmd_bib(bib_args, out, err);
        if (cite->parsed())
            return cli_detail::cmd_cite(cite_args, out, err);
        return cli_detail::cmd_inspect(inspect_args, out, err);
    } catch (const cli_detail::UsageError& e) {
        err << "namestack: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "namestack: " << e.what() << '\n';
        return 1;
    }
}

}  // namespace namestack

#endif
