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
#include "ztilde/io.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "ztilde/errors.hpp"
#include "ztilde/scan.hpp"

namespace zt {

using detail::Scanner;
using detail::SourceLine;
using detail::expect_end;
using detail::meaningful_lines;
using detail::take_ident;
using detail::take_small_int;
using detail::take_word;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path + "' for reading");
    std::ostringstream os;
    os << in.rdbuf();
    if (in.bad()) throw IoError("error while reading '" + path + "'");
    return os.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    out << text;
    out.flush();
    if (!out) throw IoError("error while writing '" + path + "'");
}

std::string fnv1a_hex(std::string_view text) {
    uint64_t h = 14695981039346656037ull;
    for (char ch : text) {
        h ^= static_cast<unsigned char>(ch);
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string dir_of(const std::string& path) {
    size_t p = path.find_last_of('/');
    return p == std::string::npos ? std::string() : path.substr(0, p);
}

std::string join_path(const std::string& base_dir, const std::string& path) {
    if (path.empty()) throw IoError("empty path");
    if (path[0] == '/' || base_dir.empty() || base_dir == ".") return path;
    return base_dir + "/" + path;
}

/* ---- shared line-parsing helpers ---------------------------------------- */

namespace {

std::vector<std::string> parse_name_list(Scanner& sc) {
    std::vector<std::string> names;
    sc.skip_ws();
    if (sc.eof()) return names;
    for (;;) {
        names.push_back(take_ident(sc));
        if (!sc.accept(',')) break;
    }
    expect_end(sc);
    return names;
}

int bracket_index(Scanner& sc, int lo, int hi) {
    sc.expect('[', "before the index");
    int i = take_small_int(sc, "index");
    sc.expect(']', "after the index");
    sc.expect(':', "after the section header");
    if (i < lo || i > hi)
        sc.fail("index must lie in " + std::to_string(lo) + ".." + std::to_string(hi));
    return i;
}

template <class T, class F>
std::vector<T> parse_row(const SourceLine& ln, int expect_cols, F parse_entry) {
    std::vector<T> out;
    size_t start = 0;
    for (;;) {
        size_t comma = ln.text.find(',', start);
        size_t len = comma == std::string::npos ? std::string::npos : comma - start;
        out.push_back(parse_entry(std::string_view(ln.text).substr(start, len), ln.no));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    if (static_cast<int>(out.size()) != expect_cols)
        throw ParseError("matrix row has " + std::to_string(out.size()) + " entries, expected " +
                             std::to_string(expect_cols),
                         ln.no);
    return out;
}

int cdim(const TwistedComplex& c, int i) { return (i >= 0 && i <= 3) ? c.dim(i) : 0; }

std::string take_path(Scanner& sc, bool stop_at_colon = false) {
    sc.skip_ws();
    size_t start = sc.pos;
    while (!sc.eof()) {
        char ch = sc.peek();
        if (ch == ' ' || ch == '\t' || (stop_at_colon && ch == ':')) break;
        sc.get();
    }
    if (sc.pos == start) sc.fail("expected a path");
    return std::string(sc.s.substr(start, sc.pos - start));
}

} // namespace

/* ---- complexes and endomorphisms ----------------------------------------- */

TwistedComplex parse_complex(const std::string& text) {
    auto lines = meaningful_lines(text);
    TwistedComplex c;
    bool have_gens[4] = {false, false, false, false};
    bool have_b[4] = {false, false, false, false};
    bool matrices_started = false;
    size_t li = 0;
    while (li < lines.size()) {
        Scanner sc(lines[li].text, lines[li].no);
        if (take_word(sc, "generators")) {
            if (matrices_started) sc.fail("generator sections must precede boundary sections");
            int i = bracket_index(sc, 0, 3);
            if (have_gens[i]) sc.fail("duplicate generators[" + std::to_string(i) + "] section");
            have_gens[i] = true;
            c.gens[i] = parse_name_list(sc);
            ++li;
        } else if (take_word(sc, "boundary")) {
            matrices_started = true;
            int i = bracket_index(sc, 1, 3);
            if (have_b[i]) sc.fail("duplicate boundary[" + std::to_string(i) + "] section");
            have_b[i] = true;
            expect_end(sc);
            const int rows = c.dim(i - 1), cols = c.dim(i);
            if (rows == 0 || cols == 0) sc.fail("boundary block between empty generator lists");
            c.d[i] = Matrix<LaurentPoly>(cols, rows);
            for (int r = 0; r < rows; ++r) {
                ++li;
                if (li >= lines.size())
                    throw ParseError("boundary block ends after " + std::to_string(r) +
                                         " of " + std::to_string(rows) + " rows",
                                     lines.back().no);
                auto row = parse_row<LaurentPoly>(lines[li], cols, [](std::string_view piece, int no) {
                    return LaurentPoly::parse(piece, no);
                });
                for (int cc = 0; cc < cols; ++cc) c.d[i].at(cc, r) = row[cc];
            }
            ++li;
        } else {
            sc.fail("expected a 'generators[i]:' or 'boundary[i]:' section");
        }
    }
    for (int i = 1; i <= 3; ++i)
        if (!have_b[i]) c.d[i] = Matrix<LaurentPoly>(c.dim(i), c.dim(i - 1));
    return c;
}

std::string complex_text(const TwistedComplex& c) {
    std::ostringstream os;
    for (int i = 0; i < 4; ++i) {
        os << "generators[" << i << "]:";
        for (size_t j = 0; j < c.gens[i].size(); ++j) os << (j ? ", " : " ") << c.gens[i][j];
        os << "\n";
    }
    for (int i = 1; i <= 3; ++i) {
        const int rows = c.dim(i - 1), cols = c.dim(i);
        if (c.d[i].rows() != cols || c.d[i].cols() != rows)
            throw ValidationError("boundary matrix " + std::to_string(i) +
                                  " does not match the generator counts");
        if (rows == 0 || cols == 0) continue;
        os << "boundary[" << i << "]:\n";
        for (int r = 0; r < rows; ++r) {
            os << "  ";
            for (int cc = 0; cc < cols; ++cc) os << (cc ? ", " : "") << c.d[i].at(cc, r).str();
            os << "\n";
        }
    }
    return os.str();
}

Endo parse_endo(const std::string& text, const TwistedComplex& c) {
    auto lines = meaningful_lines(text);
    if (lines.empty()) throw ParseError("empty endomorphism text", 1);
    Scanner first(lines[0].text, lines[0].no);
    if (!take_word(first, "degree")) first.fail("expected 'degree: <int>' on the first line");
    first.expect(':', "after 'degree'");
    int degree = take_small_int(first, "degree");
    expect_end(first);
    if (degree < -3 || degree > 3) first.fail("degree must lie in -3..3");

    Endo e = Endo::zero(c, degree);
    bool have_gens[4] = {false, false, false, false};
    bool have_g[4] = {false, false, false, false};
    bool matrices_started = false;
    size_t li = 1;
    while (li < lines.size()) {
        Scanner sc(lines[li].text, lines[li].no);
        if (take_word(sc, "generators")) {
            if (matrices_started) sc.fail("generator sections must precede matrix sections");
            int i = bracket_index(sc, 0, 3);
            if (have_gens[i]) sc.fail("duplicate generators[" + std::to_string(i) + "] section");
            have_gens[i] = true;
            if (parse_name_list(sc) != c.gens[i])
                sc.fail("generators[" + std::to_string(i) + "] does not match the complex");
            ++li;
        } else if (take_word(sc, "g")) {
            matrices_started = true;
            int i = bracket_index(sc, 0, 3);
            if (have_g[i]) sc.fail("duplicate g[" + std::to_string(i) + "] section");
            have_g[i] = true;
            expect_end(sc);
            const int rows = cdim(c, i + degree), cols = c.dim(i);
            if (rows == 0 || cols == 0) sc.fail("matrix block between empty generator lists");
            for (int r = 0; r < rows; ++r) {
                ++li;
                if (li >= lines.size())
                    throw ParseError("matrix block ends after " + std::to_string(r) + " of " +
                                         std::to_string(rows) + " rows",
                                     lines.back().no);
                auto row = parse_row<RatFn>(lines[li], cols, [](std::string_view piece, int no) {
                    return RatFn::parse(piece, no);
                });
                for (int cc = 0; cc < cols; ++cc) e.m[i].at(cc, r) = row[cc];
            }
            ++li;
        } else {
            sc.fail("expected a 'generators[i]:' or 'g[i]:' section");
        }
    }
    for (int i = 0; i < 4; ++i)
        if (!have_gens[i] && !c.gens[i].empty())
            throw ParseError("missing generators[" + std::to_string(i) + "] section",
                             lines[0].no);
    return e;
}

std::string endo_text(const Endo& e, const TwistedComplex& c) {
    std::ostringstream os;
    os << "degree: " << e.degree << "\n";
    for (int i = 0; i < 4; ++i) {
        os << "generators[" << i << "]:";
        for (size_t j = 0; j < c.gens[i].size(); ++j) os << (j ? ", " : " ") << c.gens[i][j];
        os << "\n";
    }
    for (int i = 0; i < 4; ++i) {
        const int rows = cdim(c, i + e.degree), cols = c.dim(i);
        if (e.m[i].rows() != cols || e.m[i].cols() != rows)
            throw ValidationError("endomorphism matrix " + std::to_string(i) +
                                  " does not match the generator counts");
        if (rows == 0 || cols == 0) continue;
        os << "g[" << i << "]:\n";
        for (int r = 0; r < rows; ++r) {
            os << "  ";
            for (int cc = 0; cc < cols; ++cc) os << (cc ? ", " : "") << e.m[i].at(cc, r).str();
            os << "\n";
        }
    }
    return os.str();
}

/* ---- slot bindings -------------------------------------------------------- */

namespace {

struct SlotLine {
    bool star = false;
    int slot = 0;
    std::string cpath, ppath;
};

SlotLine parse_slot_line(Scanner& sc, const std::string& base_dir) {
    SlotLine out;
    sc.skip_ws();
    if (sc.accept('*')) {
        out.star = true;
    } else {
        out.slot = take_small_int(sc, "slot number");
        if (out.slot < 1) sc.fail("slot numbers are 1-based");
    }
    sc.expect(':', "after the slot");
    for (int field = 0; field < 2; ++field) {
        if (take_word(sc, "complex")) {
            sc.expect('=', "after 'complex'");
            if (!out.cpath.empty()) sc.fail("duplicate complex=");
            out.cpath = take_path(sc);
        } else if (take_word(sc, "propagator")) {
            sc.expect('=', "after 'propagator'");
            if (!out.ppath.empty()) sc.fail("duplicate propagator=");
            out.ppath = take_path(sc);
        } else {
            sc.fail("expected complex=<path> propagator=<path>");
        }
    }
    expect_end(sc);
    out.cpath = join_path(base_dir, out.cpath);
    out.ppath = join_path(base_dir, out.ppath);
    return out;
}

struct SlotAccum {
    bool star = false;
    std::string star_c, star_p;
    std::map<int, std::pair<std::string, std::string>> by_slot;

    void add(const SlotLine& sl, Scanner& sc) {
        if (sl.star) {
            if (star) sc.fail("duplicate 'slot *' line");
            if (!by_slot.empty()) sc.fail("cannot mix 'slot *' with numbered slots");
            star = true;
            star_c = sl.cpath;
            star_p = sl.ppath;
            return;
        }
        if (star) sc.fail("cannot mix numbered slots with 'slot *'");
        if (!by_slot.emplace(sl.slot, std::make_pair(sl.cpath, sl.ppath)).second)
            sc.fail("duplicate slot " + std::to_string(sl.slot));
    }

    /* expected_ne < 0 means "whatever the largest slot says" */
    SlotBindings finish(int expected_ne, int err_line) const {
        SlotBindings b;
        if (star) {
            b.complex_paths = {star_c};
            b.propagator_paths = {star_p};
            return b;
        }
        if (by_slot.empty()) return b;
        int n = expected_ne >= 0 ? expected_ne : by_slot.rbegin()->first;
        for (int i = 1; i <= n; ++i) {
            auto it = by_slot.find(i);
            if (it == by_slot.end())
                throw ParseError("missing binding for slot " + std::to_string(i), err_line);
            b.complex_paths.push_back(it->second.first);
            b.propagator_paths.push_back(it->second.second);
        }
        if (static_cast<int>(by_slot.size()) != n)
            throw ParseError("slot numbers exceed the edge count " + std::to_string(n), err_line);
        return b;
    }
};

} // namespace

SlotBindings parse_bindings(const std::string& text, const std::string& base_dir) {
    auto lines = meaningful_lines(text);
    SlotAccum acc;
    for (const SourceLine& ln : lines) {
        Scanner sc(ln.text, ln.no);
        if (!take_word(sc, "slot")) sc.fail("expected a 'slot <n|*>: ...' line");
        acc.add(parse_slot_line(sc, base_dir), sc);
    }
    return acc.finish(-1, lines.empty() ? 1 : lines.back().no);
}

std::string bindings_text(const SlotBindings& b) {
    std::ostringstream os;
    if (b.empty()) return os.str();
    if (b.complex_paths.size() == 1) {
        os << "slot *: complex=" << b.complex_paths[0] << " propagator=" << b.propagator_paths[0]
           << "\n";
        return os.str();
    }
    for (size_t i = 0; i < b.complex_paths.size(); ++i)
        os << "slot " << (i + 1) << ": complex=" << b.complex_paths[i]
           << " propagator=" << b.propagator_paths[i] << "\n";
    return os.str();
}

/* ---- count tables --------------------------------------------------------- */

CountTableFile parse_count_table(const std::string& text, const std::string& base_dir) {
    auto lines = meaningful_lines(text);
    if (lines.empty()) throw ParseError("empty count table (need at least 'k: <int>')", 1);
    CountTableFile out;

    Scanner first(lines[0].text, lines[0].no);
    if (!take_word(first, "k")) first.fail("expected 'k: <int>' on the first line");
    first.expect(':', "after 'k'");
    out.table.k = take_small_int(first, "k");
    expect_end(first);
    if (out.table.k < 1) first.fail("k must be positive");
    const int ne = 3 * out.table.k;

    SlotAccum slots;
    bool have_pattern = false;
    size_t li = 1;
    while (li < lines.size()) {
        Scanner sc(lines[li].text, lines[li].no);
        if (take_word(sc, "pattern")) {
            sc.expect(':', "after 'pattern'");
            if (have_pattern) sc.fail("duplicate pattern line");
            have_pattern = true;
            sc.skip_ws();
            std::string pat;
            while (sc.peek() == '+' || sc.peek() == '-') pat += sc.get();
            expect_end(sc);
            if (static_cast<int>(pat.size()) != ne)
                sc.fail("pattern must have one sign per edge (" + std::to_string(ne) + ")");
            out.table.pattern = pat;
            ++li;
        } else if (take_word(sc, "slot")) {
            slots.add(parse_slot_line(sc, base_dir), sc);
            ++li;
        } else if (take_word(sc, "count")) {
            const int entry_line = lines[li].no;
            CGraph g;
            MultiWeight w(ne);
            sc.skip_ws();
            if (sc.accept('@')) {
                std::string ref = take_path(sc, /*stop_at_colon=*/true);
                sc.expect(':', "after the graph reference");
                w = MultiWeight::parse(sc, ne);
                expect_end(sc);
                ParsedGraph pg;
                try {
                    pg = parse_graph_text(read_file(join_path(base_dir, ref)));
                } catch (const ParseError& e) {
                    throw ParseError("in graph file '" + ref + "': " + e.what(), entry_line);
                }
                if (!pg.colors.empty())
                    throw ParseError("count-entry graph '" + ref + "' carries colorings", entry_line);
                g = std::move(pg.graph);
                ++li;
            } else {
                sc.expect('{', "to open an inline graph");
                expect_end(sc);
                std::string block;
                int block_first = 0;
                ++li;
                for (;;) {
                    if (li >= lines.size())
                        throw ParseError("inline graph block never closed", entry_line);
                    if (lines[li].text[0] == '}') break;
                    if (block.empty()) block_first = lines[li].no;
                    block += lines[li].text;
                    block += '\n';
                    ++li;
                }
                Scanner close(lines[li].text, lines[li].no);
                close.expect('}', "to close the inline graph");
                close.expect(':', "after the inline graph");
                w = MultiWeight::parse(close, ne);
                expect_end(close);
                if (block.empty()) throw ParseError("empty inline graph block", entry_line);
                ParsedGraph pg = parse_graph_text(block, block_first);
                if (!pg.colors.empty())
                    throw ParseError("count entries carry weights, not colorings", block_first);
                g = std::move(pg.graph);
                ++li;
            }
            if (g.k != out.table.k)
                throw ParseError("count entry has k=" + std::to_string(g.k) +
                                     " but the table has k=" + std::to_string(out.table.k),
                                 entry_line);
            out.table.entries.emplace_back(std::move(g), std::move(w));
        } else {
            sc.fail("expected 'pattern:', 'slot ...', or 'count ...'");
        }
    }
    out.bindings = slots.finish(ne, lines.back().no);
    return out;
}

std::string count_table_text(const CountTableFile& f) {
    std::ostringstream os;
    os << "k: " << f.table.k << "\n";
    if (!f.table.pattern.empty()) os << "pattern: " << f.table.pattern << "\n";
    os << bindings_text(f.bindings);
    for (const auto& [g, w] : f.table.entries)
        os << "count {\n" << graph_text(g) << "}: " << w.str() << "\n";
    return os.str();
}

/* ---- anomaly data ---------------------------------------------------------- */

namespace {

bool is_anomaly_section(const std::string& text) {
    Scanner sc(text, 0);
    return take_word(sc, "z_anomaly") || take_word(sc, "mu_k") || take_word(sc, "sign_W");
}

} // namespace

AnomalyData parse_anomaly(const std::string& text) {
    auto lines = meaningful_lines(text);
    AnomalyData a;
    bool have_z = false, have_mu = false, have_sign = false;
    size_t li = 0;
    while (li < lines.size()) {
        Scanner sc(lines[li].text, lines[li].no);
        auto read_block = [&](const char* what) {
            sc.expect(':', "after the section name");
            expect_end(sc);
            const int header_line = lines[li].no;
            std::string block;
            int block_first = 0;
            ++li;
            while (li < lines.size() && !is_anomaly_section(lines[li].text)) {
                if (block.empty()) block_first = lines[li].no;
                block += lines[li].text;
                block += '\n';
                ++li;
            }
            if (block.empty())
                throw ParseError(std::string(what) + " block is empty (write '0' for zero)",
                                 header_line);
            return DiagramSum::parse(block, block_first);
        };
        if (take_word(sc, "z_anomaly")) {
            if (have_z) sc.fail("duplicate z_anomaly section");
            have_z = true;
            a.z_anom = read_block("z_anomaly");
        } else if (take_word(sc, "mu_k")) {
            if (have_mu) sc.fail("duplicate mu_k section");
            have_mu = true;
            a.mu = read_block("mu_k");
            a.mu_defaulted = false;
        } else if (take_word(sc, "sign_W")) {
            if (have_sign) sc.fail("duplicate sign_W line");
            have_sign = true;
            sc.expect(':', "after 'sign_W'");
            a.sign_w = take_small_int(sc, "sign_W");
            expect_end(sc);
            ++li;
        } else {
            sc.fail("expected 'z_anomaly:', 'mu_k:', or 'sign_W:'");
        }
    }
    if (!have_z) throw ParseError("missing z_anomaly section", lines.empty() ? 1 : lines[0].no);
    if (!have_sign) throw ParseError("missing sign_W line", lines.empty() ? 1 : lines[0].no);
    return a;
}

std::string anomaly_text(const AnomalyData& a) {
    std::string out = "z_anomaly:\n" + a.z_anom.str();
    if (!a.mu_defaulted) out += "mu_k:\n" + a.mu.str();
    out += "sign_W: " + std::to_string(a.sign_w) + "\n";
    return out;
}

/* ---- colorings ------------------------------------------------------------- */

ColorSpec parse_colors(const std::string& text, int ne) {
    if (ne < 1) throw ValidationError("parse_colors: need a positive edge count");
    auto lines = meaningful_lines(text);
    if (lines.empty()) throw ParseError("empty coloring text", 1);
    ColorSpec cs;
    Scanner first(lines[0].text, lines[0].no);
    if (take_word(first, "weight")) {
        first.expect(':', "after 'weight'");
        cs.is_weight = true;
        cs.weight = MultiWeight::parse(first, ne);
        expect_end(first);
        if (lines.size() > 1)
            throw ParseError("unexpected line after the weight", lines[1].no);
        return cs;
    }
    std::vector<RatFn> cols(static_cast<size_t>(ne));
    std::vector<bool> seen(static_cast<size_t>(ne), false);
    for (const SourceLine& ln : lines) {
        Scanner sc(ln.text, ln.no);
        if (!take_word(sc, "color"))
            sc.fail("expected 'color <label>: <value>' lines or a single 'weight:' line");
        int label = take_small_int(sc, "edge label");
        if (label < 1 || label > ne)
            sc.fail("edge label must lie in 1.." + std::to_string(ne));
        sc.expect(':', "after the label");
        if (seen[label - 1]) sc.fail("duplicate color for edge " + std::to_string(label));
        seen[label - 1] = true;
        cols[label - 1] = RatFn::parse(sc);
        expect_end(sc);
    }
    for (int i = 0; i < ne; ++i)
        if (!seen[i])
            throw ParseError("missing color for edge " + std::to_string(i + 1), lines.back().no);
    cs.colors = std::move(cols);
    return cs;
}

std::string colors_text(const ColorSpec& cs) {
    std::ostringstream os;
    if (cs.is_weight) {
        os << "weight: " << cs.weight.str() << "\n";
        return os.str();
    }
    for (size_t i = 0; i < cs.colors.size(); ++i)
        os << "color " << (i + 1) << ": " << cs.colors[i].str() << "\n";
    return os.str();
}

/* ---- diagram sums and graph lists ------------------------------------------ */

DiagramSum parse_diagram_sum_file(const std::string& text) {
    std::string_view sv(text);
    int no = 1;
    size_t start = 0;
    while (start <= sv.size()) {
        size_t end = sv.find('\n', start);
        if (end == std::string_view::npos) end = sv.size();
        std::string_view raw = sv.substr(start, end - start);
        size_t a = raw.find_first_not_of(" \t\r");
        if (a != std::string_view::npos) {
            size_t b = raw.find_last_not_of(" \t\r");
            if (raw.substr(a, b - a + 1) == "---")
                return DiagramSum::parse(sv.substr(end == sv.size() ? end : end + 1), no + 1);
        }
        if (end == sv.size()) break;
        start = end + 1;
        ++no;
    }
    return DiagramSum::parse(sv, 1);
}

std::vector<ParsedGraph> parse_graph_list(const std::string& text) {
    auto lines = meaningful_lines(text);
    if (lines.empty()) throw ParseError("empty graph list", 1);
    auto starts_block = [](const std::string& t) {
        Scanner sc(t, 0);
        return take_word(sc, "k");
    };
    if (!starts_block(lines[0].text))
        throw ParseError("expected a 'k:' line to start the first graph", lines[0].no);
    std::vector<ParsedGraph> out;
    size_t li = 0;
    while (li < lines.size()) {
        std::string block = lines[li].text + "\n";
        const int block_first = lines[li].no;
        ++li;
        while (li < lines.size() && !starts_block(lines[li].text)) {
            block += lines[li].text;
            block += '\n';
            ++li;
        }
        out.push_back(parse_graph_text(block, block_first));
    }
    return out;
}

std::string graph_list_text(const std::vector<CGraph>& graphs) {
    std::string out;
    for (size_t i = 0; i < graphs.size(); ++i) {
        if (i) out += "\n";
        out += graph_text(graphs[i]);
    }
    return out;
}

/* ---- reports and loading ---------------------------------------------------- */

std::string RunReport::str() const {
    std::string out;
    for (const auto& [k, v] : fields) out += k + ": " + v + "\n";
    return out;
}

LoadedSlots load_slots(const SlotBindings& b) {
    LoadedSlots out;
    for (size_t i = 0; i < b.complex_paths.size(); ++i) {
        TwistedComplex c;
        try {
            c = parse_complex(read_file(b.complex_paths[i]));
        } catch (const ParseError& e) {
            throw ParseError("in complex file '" + b.complex_paths[i] + "': " + e.what());
        }
        Endo g;
        try {
            g = parse_endo(read_file(b.propagator_paths[i]), c);
        } catch (const ParseError& e) {
            throw ParseError("in propagator file '" + b.propagator_paths[i] + "': " + e.what());
        }
        out.complexes.push_back(std::move(c));
        out.propagators.push_back(std::move(g));
    }
    return out;
}

} // namespace zt
