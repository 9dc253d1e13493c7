#include <catch2/catch_amalgamated.hpp>

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "namestack/bib.hpp"

using namespace namestack;

namespace {

std::string read_fixture(const std::string& name) {
    std::ifstream in(std::string(NAMESTACK_FIXTURES_DIR) + "/" + name, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::vector<std::string> words(std::initializer_list<const char*> list) {
    return {list.begin(), list.end()};
}

}  // namespace

TEST_CASE("plain First Last") {
    const PersonName n = parse_person_name("Erik D. Demaine");
    CHECK(n.first == words({"Erik", "D."}));
    CHECK(n.von.empty());
    CHECK(n.last == words({"Demaine"}));
    CHECK(n.jr.empty());
}

TEST_CASE("von part spans lowercase words") {
    const PersonName a = parse_person_name("Ludwig van Beethoven");
    CHECK(a.first == words({"Ludwig"}));
    CHECK(a.von == words({"van"}));
    CHECK(a.last == words({"Beethoven"}));

    const PersonName b = parse_person_name("Charles Jean de la Vall{\\'e}e Poussin");
    CHECK(b.first == words({"Charles", "Jean"}));
    CHECK(b.von == words({"de", "la"}));
    CHECK(b.last == words({"Vall{\\'e}e", "Poussin"}));

    // Uppercase words between lowercase ones stay inside the von span.
    const PersonName c = parse_person_name("Jean de Smith le Grand");
    CHECK(c.first == words({"Jean"}));
    CHECK(c.von == words({"de", "Smith", "le"}));
    CHECK(c.last == words({"Grand"}));
}

TEST_CASE("all-lowercase name keeps one Last word") {
    const PersonName n = parse_person_name("jean de la fontaine");
    CHECK(n.first.empty());
    CHECK(n.von == words({"jean", "de", "la"}));
    CHECK(n.last == words({"fontaine"}));
}

TEST_CASE("lowercase single word is a Last name") {
    const PersonName n = parse_person_name("others");
    CHECK(n.first.empty());
    CHECK(n.von.empty());
    CHECK(n.last == words({"others"}));
}

TEST_CASE("one-comma form") {
    const PersonName n = parse_person_name("van Beethoven, Ludwig");
    CHECK(n.first == words({"Ludwig"}));
    CHECK(n.von == words({"van"}));
    CHECK(n.last == words({"Beethoven"}));

    // von in comma form is a leading run only; inner lowercase words belong
    // to Last.
    const PersonName m = parse_person_name("Cruz van Ramos, Maria");
    CHECK(m.von.empty());
    CHECK(m.last == words({"Cruz", "van", "Ramos"}));
}

TEST_CASE("two-comma form carries a Jr part") {
    const PersonName n = parse_person_name("Davis, Jr, Sammy");
    CHECK(n.first == words({"Sammy"}));
    CHECK(n.last == words({"Davis"}));
    CHECK(n.jr == words({"Jr"}));
}

TEST_CASE("braced token is opaque") {
    const PersonName n = parse_person_name("{Barnes and Noble}");
    CHECK(n.last == words({"{Barnes and Noble}"}));

    // A braced token starting with a lowercase letter inside braces is not a
    // von word: the test looks past the brace at the first letter.
    const PersonName m = parse_person_name("X {de Arte} Y");
    CHECK(m.von == words({"{de Arte}"}));
}

TEST_CASE("ties separate words inside a name") {
    const PersonName n = parse_person_name("Erik~Demaine");
    CHECK(n.first == words({"Erik"}));
    CHECK(n.last == words({"Demaine"}));
}

TEST_CASE("name errors") {
    CHECK_THROWS_AS(parse_person_name("A, B, C, D"), std::invalid_argument);
    CHECK_THROWS_AS(parse_person_name(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_person_name(", Erik"), std::invalid_argument);
}

TEST_CASE("name lists split on standalone and") {
    const AuthorList list = parse_name_list("Erik D. Demaine and Martin L. Demaine");
    REQUIRE(list.names.size() == 2);
    CHECK(list.names[0].last == words({"Demaine"}));
    CHECK_FALSE(list.ends_with_others);
    CHECK(num_names(list) == 2);
}

TEST_CASE("and matching is case-insensitive and word-bounded") {
    CHECK(parse_name_list("A B AND C D").names.size() == 2);
    CHECK(parse_name_list("A B and C D").names.size() == 2);
    // "Anderson" and "Randall" contain 'and' but are single names.
    CHECK(parse_name_list("Wanda Anderson").names.size() == 1);
    // Ties do not create word boundaries for the separator scan.
    CHECK(parse_name_list("A~and~B").names.size() == 1);
}

TEST_CASE("braces protect and from splitting") {
    const AuthorList list = parse_name_list("{Barnes and Noble} and X Y");
    REQUIRE(list.names.size() == 2);
    CHECK(list.names[0].last == words({"{Barnes and Noble}"}));
}

TEST_CASE("trailing others sets the flag") {
    const AuthorList list = parse_name_list("J. Craig Venter and others");
    CHECK(list.names.size() == 1);
    CHECK(list.ends_with_others);
    CHECK(num_names(list) == 2);
}

TEST_CASE("others not in final position is a literal name") {
    const AuthorList list = parse_name_list("others and X Y");
    REQUIRE(list.names.size() == 2);
    CHECK(list.names[0].last == words({"others"}));
    CHECK_FALSE(list.ends_with_others);
}

TEST_CASE("empty segment between separators is an error") {
    CHECK_THROWS_AS(parse_name_list("A B and and C D"), std::invalid_argument);
    CHECK_THROWS_AS(parse_name_list(""), std::invalid_argument);
}

TEST_CASE("canonical string round-trip") {
    const char* cases[] = {
        "Erik D. Demaine",
        "Ludwig van Beethoven",
        "van Beethoven, Ludwig",
        "Davis, Jr, Sammy",
        "jean de la fontaine",
        "{Barnes and Noble}",
        "Charles Jean de la Vall{\\'e}e Poussin",
    };
    for (const char* text : cases) {
        const PersonName once = parse_person_name(text);
        const PersonName twice = parse_person_name(person_to_string(once));
        CHECK(once == twice);
    }

    const AuthorList list = parse_name_list("Erik D. Demaine and van Beethoven, Ludwig and others");
    const AuthorList again = parse_name_list(author_list_to_string(list));
    CHECK(list == again);
}

TEST_CASE("database fixture parses with macros and numeric values") {
    const std::vector<BibEntry> entries = parse_bib(read_fixture("demo.bib"));
    REQUIRE(entries.size() == 2);

    CHECK(entries[0].key == "dd2001");
    CHECK(entries[0].entry_type == "article");
    REQUIRE(entries[0].field("journal") != nullptr);
    CHECK(*entries[0].field("journal") == "Theory of Computing Systems");  // @string expansion
    CHECK(entries[0].year == "2001");

    CHECK(entries[1].key == "vs1999");
    CHECK(entries[1].year == "1999");  // bare numeric literal
    REQUIRE(entries[1].field("author") != nullptr);
    CHECK(parse_name_list(*entries[1].field("author")).ends_with_others);
}

TEST_CASE("field whitespace collapses to single spaces") {
    const auto entries = parse_bib("@misc{k, title = {a\n    b\tc}, year = {2000}}");
    REQUIRE(entries.size() == 1);
    CHECK(*entries[0].field("title") == "a b c");
}

TEST_CASE("concatenation with #") {
    const auto entries =
        parse_bib("@string{a = {Alpha}}\n@misc{k, title = a # { and } # \"Beta\", year = {1}}");
    CHECK(*entries[0].field("title") == "Alpha and Beta");
}

TEST_CASE("comments preambles and stray text are skipped") {
    const auto entries = parse_bib(
        "stray prose\n@comment{anything {nested} here}\n@preamble{\"\\mac\"}\n"
        "more prose\n@misc{k, year = {1}}");
    REQUIRE(entries.size() == 1);
    CHECK(entries[0].key == "k");
}

TEST_CASE("database errors carry byte offsets") {
    try {
        parse_bib("@article{x, author = {A B}");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("parse error at byte") != std::string::npos);
        CHECK(e.offset() > 0);
    }

    CHECK_THROWS_AS(parse_bib("@misc{k, title = {unbalanced}, year = {1}}\n@misc{k, year = {2}}"),
                    ParseError);  // duplicate key
    CHECK_THROWS_AS(parse_bib("@misc{k, title = undefinedmacro}"), ParseError);
    CHECK_THROWS_AS(parse_bib("@misc{k, title = {a {b} }"), ParseError);
}

TEST_CASE("empty database") {
    CHECK(parse_bib("").empty());
    CHECK(parse_bib("% just a comment line\n").empty());
}

TEST_CASE("human genome fixture has 274 authors") {
    const std::vector<BibEntry> entries = parse_bib(read_fixture("human_genome.bib"));
    REQUIRE(entries.size() == 1);
    const AuthorList authors = parse_name_list(*entries[0].field("author"));
    CHECK(authors.names.size() == 274);
    CHECK_FALSE(authors.ends_with_others);
    CHECK(authors.names.front().last == words({"Venter"}));
}
