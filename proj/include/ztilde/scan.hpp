/*
   Copyright 2026 The ztilde authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/
#ifndef ZTILDE_SCAN_HPP
#define ZTILDE_SCAN_HPP

#include <string>
#include <string_view>
#include <vector>

#include "ztilde/errors.hpp"

namespace zt::detail {

/* Tiny cursor shared by the textual parsers.  `line` is the 1-based line of
   the text's origin in its containing file (0 if standalone), so diagnostics
   from embedded expressions still point at the right file line. */
struct Scanner {
    std::string_view s;
    size_t pos = 0;
    int line = 0;

    explicit Scanner(std::string_view text, int line_no = 0) : s(text), line(line_no) {}

    bool eof() const { return pos >= s.size(); }
    char peek() const { return eof() ? '\0' : s[pos]; }
    char get() { return eof() ? '\0' : s[pos++]; }

    void skip_ws() {
        while (!eof() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
    }

    bool accept(char c) {
        skip_ws();
        if (peek() == c) { ++pos; return true; }
        return false;
    }

    void expect(char c, const char* what) {
        if (!accept(c)) fail(std::string("expected '") + c + "' " + what);
    }

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(msg, line, static_cast<int>(pos) + 1);
    }

    /* [0-9]+ with optional leading '-' */
    std::string take_int() {
        skip_ws();
        size_t start = pos;
        if (peek() == '-') ++pos;
        while (!eof() && s[pos] >= '0' && s[pos] <= '9') ++pos;
        if (pos == start || (pos == start + 1 && s[start] == '-'))
            fail("expected integer");
        return std::string(s.substr(start, pos - start));
    }

    /* integer or fraction: -?[0-9]+(/[0-9]+)? */
    std::string take_rational() {
        std::string num = take_int();
        if (!eof() && peek() == '/') {
            ++pos;
            num += '/';
            num += take_int();
        }
        return num;
    }
};

/* Consumes `word` (after whitespace) only when it is not a prefix of a longer
   identifier; otherwise leaves the scanner untouched. */
inline bool take_word(Scanner& sc, const char* word) {
    sc.skip_ws();
    size_t save = sc.pos;
    for (const char* p = word; *p; ++p) {
        if (sc.peek() != *p) {
            sc.pos = save;
            return false;
        }
        sc.get();
    }
    char c = sc.peek();
    if ((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_') {
        sc.pos = save;
        return false;
    }
    return true;
}

/* [A-Za-z_][A-Za-z0-9_]* */
inline std::string take_ident(Scanner& sc) {
    sc.skip_ws();
    size_t start = sc.pos;
    char c = sc.peek();
    if (!((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_'))
        sc.fail("expected a name");
    while (true) {
        c = sc.peek();
        if ((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_')
            sc.get();
        else
            break;
    }
    return std::string(sc.s.substr(start, sc.pos - start));
}

inline int take_small_int(Scanner& sc, const char* what) {
    std::string w = sc.take_int();
    try {
        return std::stoi(w);
    } catch (const std::exception&) {
        sc.fail(std::string("bad ") + what + " '" + w + "'");
    }
}

inline void expect_end(Scanner& sc) {
    sc.skip_ws();
    if (!sc.eof()) sc.fail("trailing text");
}

/* Non-blank, non-comment ('#') lines with their 1-based file line numbers,
   trimmed.  The standard first step of every line-oriented parser here. */
struct SourceLine {
    int no = 0;
    std::string text;
};

inline std::vector<SourceLine> meaningful_lines(std::string_view text, int first_line_no = 1) {
    std::vector<SourceLine> out;
    int no = first_line_no;
    size_t start = 0;
    while (start <= text.size()) {
        size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view raw = text.substr(start, end - start);
        size_t a = raw.find_first_not_of(" \t\r");
        if (a != std::string_view::npos && raw[a] != '#') {
            size_t b = raw.find_last_not_of(" \t\r");
            out.push_back({no, std::string(raw.substr(a, b - a + 1))});
        }
        if (end == text.size()) break;
        start = end + 1;
        ++no;
    }
    return out;
}

} // namespace zt::detail

#endif
