// BibTeX database and name-list parsing: entries, @string macros, and the
// classic First/von/Last/Jr name grammar.
//
// Scope notes: values are concatenated with '#' and macro-expanded at parse
// time; internal braces are preserved; whitespace runs inside values collapse
// to single spaces. Von detection is the first-character-lowercase test after
// skipping braces, a documented simplification of the full special-character
// rules (TeX sequences such as \'e pass through as opaque tokens).
#ifndef NAMESTACK_BIB_HPP
#define NAMESTACK_BIB_HPP

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace namestack {

// Input failure with the byte offset where parsing stopped making sense.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t offset, const std::string& message)
        : std::runtime_error("parse error at byte " + std::to_string(offset) + ": " + message),
          offset_(offset) {}

    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

struct PersonName {
    std::vector<std::string> first;
    std::vector<std::string> von;
    std::vector<std::string> last;  // never empty for a parsed name
    std::vector<std::string> jr;

    friend bool operator==(const PersonName&, const PersonName&) = default;
};

struct AuthorList {
    std::vector<PersonName> names;  // source order, never re-sorted
    bool ends_with_others = false;  // trailing "others" sentinel

    friend bool operator==(const AuthorList&, const AuthorList&) = default;
};

// num.names$ counts the "others" sentinel as one name.
inline std::size_t num_names(const AuthorList& list) {
    return list.names.size() + (list.ends_with_others ? 1 : 0);
}

struct BibEntry {
    std::string key;
    std::string entry_type;  // lowercase
    std::vector<std::pair<std::string, std::string>> fields;  // names lowercase, source order
    std::string year;  // copy of the "year" field, empty when absent

    const std::string* field(std::string_view name) const {
        for (const auto& [k, v] : fields)
            if (k == name)
                return &v;
        return nullptr;
    }
};

namespace detail {

inline bool is_space(char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r';
}

// Splits at brace depth 0. Ties ('~') separate tokens inside one name but do
// not delimit words for "and" splitting, matching BibTeX.
inline std::vector<std::string> split_tokens(std::string_view text, bool tie_splits) {
    std::vector<std::string> tokens;
    std::string current;
    int depth = 0;
    for (const char c : text) {
        if (c == '{') {
            ++depth;
            current += c;
        } else if (c == '}') {
            --depth;
            current += c;
        } else if (depth == 0 && (is_space(c) || (tie_splits && c == '~'))) {
            if (!current.empty()) {
                tokens.push_back(current);
                current.clear();
            }
        } else {
            current += c;
        }
    }
    if (!current.empty())
        tokens.push_back(current);
    return tokens;
}

// First-character lowercase test after skipping braces.
inline bool is_lowercase_word(std::string_view word) {
    std::size_t i = 0;
    while (i < word.size() && word[i] == '{')
        ++i;
    if (i == word.size())
        return false;
    const unsigned char c = static_cast<unsigned char>(word[i]);
    return c >= 'a' && c <= 'z';
}

inline std::string trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && is_space(s[b]))
        ++b;
    while (e > b && is_space(s[e - 1]))
        --e;
    return std::string(s.substr(b, e - b));
}

inline std::string to_lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

}  // namespace detail

// Parses one name in any of the three BibTeX forms:
//   First von Last | von Last, First | von Last, Jr, First
inline PersonName parse_person_name(std::string_view token) {
    if (detail::trim(token).empty())
        throw std::invalid_argument("empty name token");

    // Split into comma sections at brace depth 0.
    std::vector<std::string> sections;
    {
        std::string current;
        int depth = 0;
        for (const char c : token) {
            if (c == '{')
                ++depth;
            else if (c == '}')
                --depth;
            if (c == ',' && depth == 0) {
                sections.push_back(current);
                current.clear();
            } else {
                current += c;
            }
        }
        sections.push_back(current);
    }
    if (sections.size() > 3)
        throw std::invalid_argument("name has more than two commas: " +
                                    std::string(detail::trim(token)));

    // Last lowercase token index that still leaves a Last token, or npos.
    auto scan_von_end = [](const std::vector<std::string>& tokens, std::size_t von_begin) {
        std::size_t von_end = von_begin;
        for (std::size_t i = von_begin; i + 1 < tokens.size(); ++i)
            if (detail::is_lowercase_word(tokens[i]))
                von_end = i + 1;
        return von_end;  // exclusive; == von_begin when there is no von
    };

    PersonName name;
    if (sections.size() == 1) {
        // First von Last: von runs from the first lowercase token to the last
        // lowercase token that still leaves a Last token.
        const auto tokens = detail::split_tokens(sections[0], true);
        if (tokens.empty())
            throw std::invalid_argument("empty name token");
        std::size_t von_begin = tokens.size();
        for (std::size_t i = 0; i + 1 < tokens.size(); ++i) {
            if (detail::is_lowercase_word(tokens[i])) {
                von_begin = i;
                break;
            }
        }
        if (von_begin == tokens.size()) {
            // No von part; the final token is the Last part.
            name.first.assign(tokens.begin(), tokens.end() - 1);
            name.last.assign(tokens.end() - 1, tokens.end());
        } else {
            const std::size_t von_end = scan_von_end(tokens, von_begin);
            name.first.assign(tokens.begin(), tokens.begin() + von_begin);
            name.von.assign(tokens.begin() + von_begin, tokens.begin() + von_end);
            name.last.assign(tokens.begin() + von_end, tokens.end());
        }
    } else {
        // von Last[, Jr], First: in the comma forms the von part is a prefix of
        // the leading section, present only when its first token is lowercase.
        const auto head = detail::split_tokens(sections[0], true);
        if (head.empty())
            throw std::invalid_argument("name has empty Last part: " +
                                        std::string(detail::trim(token)));
        std::size_t von_end = 0;
        if (head.size() >= 2 && detail::is_lowercase_word(head[0]))
            von_end = scan_von_end(head, 0);
        name.von.assign(head.begin(), head.begin() + von_end);
        name.last.assign(head.begin() + von_end, head.end());
        name.first = detail::split_tokens(sections.back(), true);
        if (sections.size() == 3)
            name.jr = detail::split_tokens(sections[1], true);
    }
    if (name.last.empty())
        throw std::invalid_argument("name has empty Last part: " +
                                    std::string(detail::trim(token)));
    return name;
}

// Splits an author/editor field on the word "and" at brace depth 0
// (case-insensitive). A trailing "others" becomes the et-al. sentinel.
inline AuthorList parse_name_list(std::string_view field_value) {
    std::vector<std::string> segments;
    {
        std::string segment;
        std::string word;
        int depth = 0;
        auto flush_word = [&]() {
            if (word.empty())
                return;
            if (depth == 0 && detail::to_lower(word) == "and") {
                segments.push_back(segment);
                segment.clear();
            } else {
                if (!segment.empty())
                    segment += ' ';
                segment += word;
            }
            word.clear();
        };
        for (const char c : field_value) {
            if (c == '{') {
                ++depth;
                word += c;
            } else if (c == '}') {
                --depth;
                word += c;
            } else if (depth == 0 && detail::is_space(c)) {
                flush_word();
            } else {
                word += c;
            }
        }
        flush_word();
        segments.push_back(segment);
    }

    AuthorList list;
    for (std::size_t i = 0; i < segments.size(); ++i) {
        const std::string segment = detail::trim(segments[i]);
        if (segment.empty())
            throw std::invalid_argument("empty name between 'and' separators");
        if (i + 1 == segments.size() && segment == "others") {
            list.ends_with_others = true;
            break;
        }
        list.names.push_back(parse_person_name(segment));
    }
    if (list.names.empty() && !list.ends_with_others)
        throw std::invalid_argument("empty name list");
    return list;
}

// Canonical single-name serialization: comma form whenever First or Jr is
// present, so reparsing recovers the same parts.
inline std::string person_to_string(const PersonName& name) {
    auto join = [](const std::vector<std::string>& words) {
        std::string out;
        for (std::size_t i = 0; i < words.size(); ++i) {
            if (i > 0)
                out += ' ';
            out += words[i];
        }
        return out;
    };
    std::string head = join(name.von);
    if (!head.empty())
        head += ' ';
    head += join(name.last);
    if (!name.jr.empty())
        return head + ", " + join(name.jr) + ", " + join(name.first);
    if (!name.first.empty())
        return head + ", " + join(name.first);
    return head;
}

inline std::string author_list_to_string(const AuthorList& list) {
    std::string out;
    for (std::size_t i = 0; i < list.names.size(); ++i) {
        if (i > 0)
            out += " and ";
        out += person_to_string(list.names[i]);
    }
    if (list.ends_with_others) {
        if (!out.empty())
            out += " and ";
        out += "others";
    }
    return out;
}

namespace detail {

class BibReader {
public:
    explicit BibReader(std::string_view text) : text_(text) {}

    std::vector<BibEntry> parse() {
        std::vector<BibEntry> entries;
        while (skip_to_entry()) {
            ++pos_;  // consume '@'
            const std::string kind = to_lower(read_identifier("entry type"));
            if (kind == "comment" || kind == "preamble") {
                skip_balanced_group();
            } else if (kind == "string") {
                read_string_definition();
            } else {
                entries.push_back(read_entry(kind, entries));
            }
        }
        return entries;
    }

private:
    // Everything outside entries is commentary, as in classic BibTeX.
    bool skip_to_entry() {
        while (pos_ < text_.size() && text_[pos_] != '@')
            ++pos_;
        return pos_ < text_.size();
    }

    void skip_whitespace() {
        while (pos_ < text_.size() && is_space(text_[pos_]))
            ++pos_;
    }

    [[noreturn]] void fail(std::size_t offset, const std::string& message) const {
        throw ParseError(offset, message);
    }

    char peek() const {
        if (pos_ >= text_.size())
            fail(pos_, "unexpected end of input");
        return text_[pos_];
    }

    void expect(char c) {
        skip_whitespace();
        if (pos_ >= text_.size() || text_[pos_] != c)
            fail(pos_, std::string("expected '") + c + "'");
        ++pos_;
    }

    std::string read_identifier(const char* what) {
        skip_whitespace();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && !is_space(text_[pos_]) &&
               std::string_view("{}(),=\"#%'").find(text_[pos_]) == std::string_view::npos)
            ++pos_;
        if (pos_ == start)
            fail(pos_, std::string("expected ") + what);
        return std::string(text_.substr(start, pos_ - start));
    }

    void skip_balanced_group() {
        skip_whitespace();
        if (pos_ >= text_.size() || (text_[pos_] != '{' && text_[pos_] != '(')) {
            // @comment without a group: skip the rest of the line.
            while (pos_ < text_.size() && text_[pos_] != '\n')
                ++pos_;
            return;
        }
        const char open = text_[pos_];
        const char close = open == '{' ? '}' : ')';
        const std::size_t start = pos_;
        int depth = 0;
        for (; pos_ < text_.size(); ++pos_) {
            if (text_[pos_] == open)
                ++depth;
            else if (text_[pos_] == close && --depth == 0) {
                ++pos_;
                return;
            }
        }
        fail(start, "unbalanced braces");
    }

    void read_string_definition() {
        skip_whitespace();
        const char open = peek();
        if (open != '{' && open != '(')
            fail(pos_, "expected '{' after @string");
        const char close = open == '{' ? '}' : ')';
        ++pos_;
        const std::string name = to_lower(read_identifier("macro name"));
        expect('=');
        macros_[name] = read_value();
        skip_whitespace();
        if (pos_ >= text_.size() || text_[pos_] != close)
            fail(pos_, "expected end of @string definition");
        ++pos_;
    }

    BibEntry read_entry(const std::string& kind, const std::vector<BibEntry>& seen) {
        skip_whitespace();
        const char open = peek();
        if (open != '{' && open != '(')
            fail(pos_, "expected '{' after entry type");
        const char close = open == '{' ? '}' : ')';
        ++pos_;

        BibEntry entry;
        entry.entry_type = kind;
        skip_whitespace();
        const std::size_t key_start = pos_;
        while (pos_ < text_.size() && text_[pos_] != ',' && text_[pos_] != close)
            ++pos_;
        entry.key = trim(text_.substr(key_start, pos_ - key_start));
        if (entry.key.empty())
            fail(key_start, "missing citation key");
        for (const BibEntry& other : seen)
            if (other.key == entry.key)
                fail(key_start, "duplicate key '" + entry.key + "'");

        while (pos_ < text_.size() && text_[pos_] == ',') {
            ++pos_;
            skip_whitespace();
            if (pos_ < text_.size() && text_[pos_] == close)
                break;  // trailing comma
            const std::string field_name = to_lower(read_identifier("field name"));
            expect('=');
            const std::string value = read_value();
            entry.fields.emplace_back(field_name, value);
            skip_whitespace();
        }
        if (pos_ >= text_.size() || text_[pos_] != close)
            fail(pos_, "unterminated entry '" + entry.key + "'");
        ++pos_;

        if (const std::string* year = entry.field("year"))
            entry.year = trim(*year);
        return entry;
    }

    // value = token (# token)*, token = {braced} | "quoted" | number | macro.
    // Tokens keep boundary spaces so concatenation joints survive; the
    // assembled value is collapsed and trimmed once at the end.
    std::string read_value() {
        std::string value = read_value_token();
        for (;;) {
            skip_whitespace();
            if (pos_ >= text_.size() || text_[pos_] != '#')
                break;
            ++pos_;
            value += read_value_token();
        }
        std::string out;
        for (const char c : value) {
            if (c == ' ' && (out.empty() || out.back() == ' '))
                continue;
            out += c;
        }
        while (!out.empty() && out.back() == ' ')
            out.pop_back();
        return out;
    }

    std::string read_value_token() {
        skip_whitespace();
        if (pos_ >= text_.size())
            fail(pos_, "expected field value");
        const char c = text_[pos_];
        if (c == '{')
            return read_braced();
        if (c == '"')
            return read_quoted();
        const std::size_t start = pos_;
        const std::string word = read_identifier("field value");
        const bool numeric = std::all_of(word.begin(), word.end(), [](unsigned char ch) {
            return ch >= '0' && ch <= '9';
        });
        if (numeric)
            return word;
        const auto it = macros_.find(to_lower(word));
        if (it == macros_.end())
            fail(start, "undefined macro '" + word + "'");
        return it->second;
    }

    std::string read_braced() {
        const std::size_t start = pos_;
        ++pos_;  // consume '{'
        std::string out;
        int depth = 1;
        bool pending_space = false;
        for (; pos_ < text_.size(); ++pos_) {
            const char c = text_[pos_];
            if (c == '{') {
                ++depth;
            } else if (c == '}') {
                if (--depth == 0) {
                    ++pos_;
                    if (pending_space)
                        out += ' ';
                    return out;
                }
            } else if (is_space(c)) {
                pending_space = true;
                continue;
            }
            if (pending_space) {
                out += ' ';
                pending_space = false;
            }
            out += c;
        }
        fail(start, "unbalanced braces");
    }

    std::string read_quoted() {
        const std::size_t start = pos_;
        ++pos_;  // consume '"'
        std::string out;
        int depth = 0;
        bool pending_space = false;
        for (; pos_ < text_.size(); ++pos_) {
            const char c = text_[pos_];
            if (c == '{') {
                ++depth;
            } else if (c == '}') {
                if (--depth < 0)
                    fail(pos_, "unbalanced braces");
            } else if (c == '"' && depth == 0) {
                ++pos_;
                if (pending_space)
                    out += ' ';
                return out;
            } else if (is_space(c)) {
                pending_space = true;
                continue;
            }
            if (pending_space) {
                out += ' ';
                pending_space = false;
            }
            out += c;
        }
        fail(start, "unterminated quoted value");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    std::map<std::string, std::string> macros_;
};

}  // namespace detail

// Parses a BibTeX database. Entries come back in source order; text between
// entries is ignored.
inline std::vector<BibEntry> parse_bib(std::string_view text) {
    return detail::BibReader(text).parse();
}

}  // namespace namestack

#endif
