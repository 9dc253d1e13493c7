// Name formatting in the style-file tradition: brace patterns such as
// "{f.~}{vv~}{ll}{, jj}" pick name pieces, single letters abbreviate, and a
// '~' in a group joins that piece's words with ties.
//
// List formatting follows the stacked bibliography style: names joined by
// "; ", a trailing "others" rendered as " et~al.", the whole list wrapped in
// \namestack{...}, and the name count appended in a parenthetical.
#ifndef NAMESTACK_FORMAT_HPP
#define NAMESTACK_FORMAT_HPP

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "namestack/bib.hpp"
#include "namestack/unicode.hpp"

namespace namestack {

enum class NamePiece { First, Von, Last, Jr };

struct PatternSegment {
    NamePiece piece;
    bool abbreviate;       // single piece letter: render word initials
    std::string pre_text;  // literal text before the letters, emitted only
    std::string post_text; // for non-empty pieces
    bool tie;              // join the piece's words with '~' instead of ' '
};

struct FormatPattern {
    std::vector<PatternSegment> segments;
};

namespace detail {

inline NamePiece piece_for_letter(char c) {
    switch (c) {
    case 'f': return NamePiece::First;
    case 'v': return NamePiece::Von;
    case 'l': return NamePiece::Last;
    case 'j': return NamePiece::Jr;
    default: throw std::invalid_argument(std::string("unknown piece letter '") + c + "'");
    }
}

inline bool is_piece_letter(char c) {
    return c == 'f' || c == 'v' || c == 'l' || c == 'j';
}

// "Yu-Hui" -> "Y.-H."; braces are skipped when picking the initial.
inline std::string abbreviate_token(std::string_view token) {
    std::string out;
    std::size_t start = 0;
    int depth = 0;
    auto emit_component = [&](std::string_view comp) {
        std::size_t i = 0;
        while (i < comp.size() && comp[i] == '{')
            ++i;
        if (i == comp.size())
            return;
        if (!out.empty())
            out += '-';
        out += comp.substr(i, utf8_len(comp, i));
        out += '.';
    };
    for (std::size_t i = 0; i <= token.size(); ++i) {
        if (i == token.size() || (token[i] == '-' && depth == 0)) {
            emit_component(token.substr(start, i - start));
            start = i + 1;
        } else if (token[i] == '{') {
            ++depth;
        } else if (token[i] == '}') {
            --depth;
        }
    }
    return out;
}

}  // namespace detail

// Parses a format pattern: a sequence of brace groups, each holding exactly
// one run of a piece letter (f, ff, v, vv, l, ll, j, jj) plus literal text.
inline FormatPattern parse_pattern(std::string_view spec) {
    FormatPattern pattern;
    std::size_t pos = 0;
    while (pos < spec.size()) {
        const char c = spec[pos];
        if (detail::is_space(c)) {
            ++pos;
            continue;
        }
        if (c != '{')
            throw std::invalid_argument("pattern text outside brace group");
        const std::size_t group_start = ++pos;
        while (pos < spec.size() && spec[pos] != '}') {
            if (spec[pos] == '{')
                throw std::invalid_argument("nested braces in pattern group");
            ++pos;
        }
        if (pos == spec.size())
            throw std::invalid_argument("unterminated pattern group");
        const std::string_view group = spec.substr(group_start, pos - group_start);
        ++pos;  // consume '}'

        std::size_t letters = group.find_first_of("fvlj");
        if (letters == std::string_view::npos)
            throw std::invalid_argument("pattern group has no piece letter: {" +
                                        std::string(group) + "}");
        PatternSegment segment;
        segment.piece = detail::piece_for_letter(group[letters]);
        std::size_t run_end = letters + 1;
        if (run_end < group.size() && group[run_end] == group[letters])
            ++run_end;
        if (run_end < group.size() && group[run_end] == group[letters])
            throw std::invalid_argument("piece letter repeated more than twice");
        segment.abbreviate = (run_end - letters) == 1;
        segment.pre_text = std::string(group.substr(0, letters));
        segment.post_text = std::string(group.substr(run_end));
        for (const char t : segment.pre_text)
            if (detail::is_piece_letter(t))
                throw std::invalid_argument("multiple piece letters in one group");
        for (const char t : segment.post_text)
            if (detail::is_piece_letter(t))
                throw std::invalid_argument("multiple piece letters in one group");
        segment.tie = !segment.post_text.empty() && segment.post_text.back() == '~';
        pattern.segments.push_back(std::move(segment));
    }
    return pattern;
}

// Formats one name with a pattern. Empty pieces contribute nothing, including
// their surrounding literal text. For abbreviated pieces a leading '.' in the
// trailing text is the per-word abbreviation dot, not a suffix.
inline std::string format_name(const PersonName& name, const FormatPattern& pattern) {
    if (name.last.empty())
        throw std::invalid_argument("name has empty Last part");
    std::string out;
    for (const PatternSegment& segment : pattern.segments) {
        const std::vector<std::string>* part = nullptr;
        switch (segment.piece) {
        case NamePiece::First: part = &name.first; break;
        case NamePiece::Von: part = &name.von; break;
        case NamePiece::Last: part = &name.last; break;
        case NamePiece::Jr: part = &name.jr; break;
        }
        if (part->empty())
            continue;
        std::string joined;
        for (std::size_t i = 0; i < part->size(); ++i) {
            if (i > 0)
                joined += segment.tie ? '~' : ' ';
            joined += segment.abbreviate ? detail::abbreviate_token((*part)[i]) : (*part)[i];
        }
        std::string_view post = segment.post_text;
        if (segment.abbreviate && !post.empty() && post.front() == '.')
            post.remove_prefix(1);
        out += segment.pre_text;
        out += joined;
        out += post;
    }
    // A trailing tie or space would dangle before the next list separator.
    while (!out.empty() && (out.back() == '~' || out.back() == ' '))
        out.pop_back();
    return out;
}

// One display string per stacked line. Usually one per name; a trailing
// "others" sentinel is not its own line but an " et~al." glued onto the
// preceding name, matching how the list reads when joined.
inline std::vector<std::string> format_name_slots(const AuthorList& list,
                                                  const FormatPattern& pattern) {
    const std::size_t total = num_names(list);
    std::vector<std::string> slots;
    slots.reserve(total);
    for (std::size_t slot = 1; slot <= total; ++slot) {
        const std::string text = slot <= list.names.size()
                                     ? format_name(list.names[slot - 1], pattern)
                                     : "others";
        if (slot == total && slot > 1 && text == "others")
            slots.back() += " et~al.";
        else
            slots.push_back(text);
    }
    return slots;
}

namespace detail {

inline std::string join_formatted_names(const AuthorList& list, const FormatPattern& pattern) {
    const std::vector<std::string> slots = format_name_slots(list, pattern);
    std::string out;
    for (std::size_t i = 0; i < slots.size(); ++i) {
        if (i > 0)
            out += "; ";
        out += slots[i];
    }
    return out;
}

}  // namespace detail

// The bibliography name block: \namestack{...} plus the name count, with the
// "others" sentinel counted as one name.
inline std::string format_names(const AuthorList& list, const FormatPattern& pattern) {
    if (num_names(list) == 0)
        throw std::invalid_argument("empty author list");
    return "\\namestack{" + detail::join_formatted_names(list, pattern) + "} (" +
           std::to_string(num_names(list)) + ")";
}

// Citation-label names: von+Last forms joined by "; ". A trailing "others"
// joins literally, with no et-al. special case.
inline std::string format_full_names(const AuthorList& list) {
    if (num_names(list) == 0)
        throw std::invalid_argument("empty author list");
    static const FormatPattern full = parse_pattern("{vv }{ll}");
    const std::size_t total = num_names(list);
    std::string out;
    for (std::size_t slot = 1; slot <= total; ++slot) {
        if (slot > 1)
            out += "; ";
        out += slot <= list.names.size() ? format_name(list.names[slot - 1], full) : "others";
    }
    return out;
}

// Author-year label, concatenated with no space before the parenthesis.
inline std::string calc_label(const AuthorList& list, std::string_view year) {
    if (year.empty())
        throw std::invalid_argument("missing year for citation label");
    return format_full_names(list) + "(" + std::string(year) + ")";
}

struct BibitemOptions {
    FormatPattern pattern = parse_pattern("{f.~}{vv~}{ll}{, jj}");
    bool include_count = true;
    std::string year_fallback;  // used when the entry has no year
};

namespace detail {

inline AuthorList entry_names(const BibEntry& entry) {
    const std::string* field = entry.field("author");
    if (!field)
        field = entry.field("editor");
    if (!field)
        throw std::runtime_error("entry '" + entry.key + "' has no author or editor");
    return parse_name_list(*field);
}

inline std::string entry_year(const BibEntry& entry, const std::string& fallback) {
    if (!entry.year.empty())
        return entry.year;
    if (!fallback.empty())
        return fallback;
    throw std::runtime_error("entry '" + entry.key + "' has no year");
}

// "Title, Venue, Year." — whichever of title and journal/booktitle exist.
inline std::string entry_info_line(const BibEntry& entry, const std::string& year) {
    std::vector<std::string> info;
    if (const std::string* title = entry.field("title"))
        info.push_back(*title);
    if (const std::string* journal = entry.field("journal"))
        info.push_back(*journal);
    else if (const std::string* booktitle = entry.field("booktitle"))
        info.push_back(*booktitle);
    info.push_back(year);
    std::string out;
    for (std::size_t i = 0; i < info.size(); ++i) {
        if (i > 0)
            out += ", ";
        out += info[i];
    }
    out += '.';
    return out;
}

}  // namespace detail

// One bibliography item: the \bibitem line with the author-year label, the
// stacked name block, and a minimal title/venue/year line.
inline std::string emit_bibitem(const BibEntry& entry, const BibitemOptions& options = {}) {
    const AuthorList names = detail::entry_names(entry);
    const std::string year = detail::entry_year(entry, options.year_fallback);

    std::string out = "\\bibitem[" + calc_label(names, year) + "]{" + entry.key + "}\n";
    out += "\\namestack{" + detail::join_formatted_names(names, options.pattern) + "}";
    if (options.include_count)
        out += " (" + std::to_string(num_names(names)) + ")";
    out += ".\n";
    out += detail::entry_info_line(entry, year);
    return out;
}

}  // namespace namestack

#endif
