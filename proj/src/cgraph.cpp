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
#include "ztilde/cgraph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "ztilde/scan.hpp"

namespace zt {

namespace {

std::string edge_ctx(int label) { return "edge " + std::to_string(label) + ": "; }

/* Name of the half-edge occupying an edge end, e.g. "3t" or "3i". */
std::string end_name(int label, const CEdge& e, bool at_tail) {
    const char suffix = e.separated ? (at_tail ? 'i' : 'o') : (at_tail ? 't' : 'h');
    return std::to_string(label) + suffix;
}

void check_attach(const CGraph& g, int label, const CAttach& a, const char* which) {
    if (a.vertex < 0 || a.vertex >= g.nv())
        throw ValidationError(edge_ctx(label) + std::string(which) + " vertex out of range");
    if (a.slot < 0 || a.slot > 2)
        throw ValidationError(edge_ctx(label) + std::string(which) + " slot out of range");
}

int uf_find(std::vector<int>& parent, int x) {
    while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    return x;
}

} // namespace

void validate_cgraph_structure(const CGraph& g) {
    if (g.k <= 0) throw ValidationError("k must be a positive integer");
    if (g.ne() != 3 * g.k)
        throw ValidationError("expected " + std::to_string(3 * g.k) + " edges, found " +
                              std::to_string(g.ne()));
    std::vector<std::string> occupant(size_t(3) * g.nv());
    auto place = [&](const CAttach& a, const std::string& name) {
        std::string& cell = occupant[size_t(3) * a.vertex + a.slot];
        if (!cell.empty())
            throw ValidationError("vertex " + std::to_string(a.vertex + 1) + " slot " +
                                  std::to_string(a.slot + 1) + " claimed by both " + cell +
                                  " and " + name);
        cell = name;
    };
    for (int i = 0; i < g.ne(); ++i) {
        const CEdge& e = g.edges[i];
        const int label = i + 1;
        check_attach(g, label, e.tail, e.separated ? "in" : "tail");
        check_attach(g, label, e.head, e.separated ? "out" : "head");
        if (e.separated) {
            if (e.in_gen.empty() || e.out_gen.empty())
                throw ValidationError(edge_ctx(label) + "separated edge needs both decorations");
        } else {
            if (!e.in_gen.empty() || !e.out_gen.empty())
                throw ValidationError(edge_ctx(label) + "compact edge cannot carry decorations");
        }
        place(e.tail, end_name(label, e, true));
        place(e.head, end_name(label, e, false));
    }
    for (int v = 0; v < g.nv(); ++v)
        for (int s = 0; s < 3; ++s)
            if (occupant[size_t(3) * v + s].empty())
                throw ValidationError("vertex " + std::to_string(v + 1) + " has an empty slot " +
                                      std::to_string(s + 1) + "; every black vertex is trivalent");
    /* Connectivity of the underlying trivalent graph (each edge, separated or
       not, joins its two black attachments). */
    std::vector<int> parent(g.nv());
    std::iota(parent.begin(), parent.end(), 0);
    for (const CEdge& e : g.edges) {
        int a = uf_find(parent, e.tail.vertex), b = uf_find(parent, e.head.vertex);
        if (a != b) parent[a] = b;
    }
    for (int v = 1; v < g.nv(); ++v)
        if (uf_find(parent, v) != uf_find(parent, 0))
            throw ValidationError("graph is not connected");
}

std::vector<int> validate_cgraph(const CGraph& g, const std::vector<TwistedComplex>& complexes) {
    validate_cgraph_structure(g);
    if (complexes.size() != 1 && static_cast<int>(complexes.size()) != g.ne())
        throw ValidationError("need one complex per edge (" + std::to_string(g.ne()) +
                              ") or a single shared complex, got " +
                              std::to_string(complexes.size()));
    std::vector<int> deg(g.ne());
    for (int i = 0; i < g.ne(); ++i) {
        const CEdge& e = g.edges[i];
        if (!e.separated) {
            deg[i] = 1;
            continue;
        }
        const TwistedComplex& c = complexes[complexes.size() == 1 ? 0 : i];
        if (!c.has_gen(e.in_gen))
            throw ValidationError(edge_ctx(i + 1) + "unknown generator '" + e.in_gen + "'");
        if (!c.has_gen(e.out_gen))
            throw ValidationError(edge_ctx(i + 1) + "unknown generator '" + e.out_gen + "'");
        deg[i] = c.find_gen(e.in_gen).first - c.find_gen(e.out_gen).first;
    }
    return deg;
}

namespace {

using detail::expect_end;
using detail::take_ident;
using detail::take_small_int;
using detail::take_word;

/* `<vertex>.<slot>`, both 1-based in text. */
CAttach take_attach(detail::Scanner& sc) {
    CAttach a;
    a.vertex = take_small_int(sc, "vertex id") - 1;
    sc.expect('.', "between vertex and slot");
    a.slot = take_small_int(sc, "slot") - 1;
    return a;
}

} // namespace

ParsedGraph parse_graph_text(std::string_view text, int first_line_no) {
    std::vector<detail::SourceLine> lines = detail::meaningful_lines(text, first_line_no);
    if (lines.empty()) throw ParseError("empty graph text", first_line_no);

    int k = -1;
    std::map<int, std::pair<std::vector<std::string>, int>> vertex_lines; // id -> (names, line)
    std::map<int, std::pair<CEdge, int>> edge_lines;                      // label -> (edge, line)
    std::map<int, RatFn> color_lines;

    for (const detail::SourceLine& ln : lines) {
        detail::Scanner sc(ln.text, ln.no);
        if (take_word(sc, "k")) {
            sc.expect(':', "after k");
            if (k >= 0) sc.fail("duplicate k line");
            k = take_small_int(sc, "k");
            if (k <= 0) sc.fail("k must be positive");
            expect_end(sc);
        } else if (take_word(sc, "vertex")) {
            int id = take_small_int(sc, "vertex id");
            sc.expect(':', "after vertex id");
            std::vector<std::string> names;
            sc.skip_ws();
            while (!sc.eof()) {
                size_t start = sc.pos;
                while (!sc.eof() && sc.peek() != ' ' && sc.peek() != '\t') sc.get();
                names.push_back(std::string(sc.s.substr(start, sc.pos - start)));
                sc.skip_ws();
            }
            if (names.size() != 3)
                sc.fail("vertex " + std::to_string(id) + " lists " +
                        std::to_string(names.size()) + " half-edges; need exactly 3");
            if (!vertex_lines.emplace(id, std::make_pair(names, ln.no)).second)
                sc.fail("duplicate vertex " + std::to_string(id));
        } else if (take_word(sc, "edge")) {
            int label = take_small_int(sc, "edge label");
            sc.expect(':', "after edge label");
            CEdge e;
            if (take_word(sc, "compact")) {
                e.separated = false;
                e.tail = take_attach(sc);
                e.head = take_attach(sc);
            } else if (take_word(sc, "separated")) {
                e.separated = true;
                if (!take_word(sc, "in")) sc.fail("expected in=");
                sc.expect('=', "after in");
                e.tail = take_attach(sc);
                sc.expect('@', "before the in decoration");
                e.in_gen = take_ident(sc);
                if (!take_word(sc, "out")) sc.fail("expected out=");
                sc.expect('=', "after out");
                e.head = take_attach(sc);
                sc.expect('@', "before the out decoration");
                e.out_gen = take_ident(sc);
            } else {
                sc.fail("edge kind must be 'compact' or 'separated'");
            }
            expect_end(sc);
            if (!edge_lines.emplace(label, std::make_pair(e, ln.no)).second)
                sc.fail("duplicate edge " + std::to_string(label));
        } else if (take_word(sc, "color")) {
            int label = take_small_int(sc, "edge label");
            sc.expect(':', "after color label");
            RatFn c = RatFn::parse(sc);
            expect_end(sc);
            if (!color_lines.emplace(label, c).second)
                sc.fail("duplicate color " + std::to_string(label));
        } else {
            sc.fail("expected a k, vertex, edge or color line");
        }
    }

    if (k < 0) throw ParseError("missing k line", lines.front().no);
    ParsedGraph out;
    out.graph.k = k;
    out.graph.edges.resize(size_t(3) * k);
    for (int label = 1; label <= 3 * k; ++label) {
        auto it = edge_lines.find(label);
        if (it == edge_lines.end())
            throw ParseError("missing edge " + std::to_string(label), lines.front().no);
        out.graph.edges[label - 1] = it->second.first;
    }
    if (static_cast<int>(edge_lines.size()) != 3 * k) {
        int bad = edge_lines.rbegin()->first;
        throw ParseError("edge label " + std::to_string(bad) + " outside 1.." +
                             std::to_string(3 * k),
                         edge_lines.rbegin()->second.second);
    }

    try {
        validate_cgraph_structure(out.graph);
    } catch (const ValidationError& e) {
        throw ParseError(e.what(), lines.front().no);
    }

    /* Cross-check the vertex lines against the attachments. */
    std::vector<std::string> occupant(size_t(3) * out.graph.nv());
    for (int i = 0; i < out.graph.ne(); ++i) {
        const CEdge& e = out.graph.edges[i];
        occupant[size_t(3) * e.tail.vertex + e.tail.slot] = end_name(i + 1, e, true);
        occupant[size_t(3) * e.head.vertex + e.head.slot] = end_name(i + 1, e, false);
    }
    if (static_cast<int>(vertex_lines.size()) != out.graph.nv())
        throw ParseError("expected " + std::to_string(out.graph.nv()) + " vertex lines, found " +
                             std::to_string(vertex_lines.size()),
                         lines.front().no);
    for (const auto& [id, names_line] : vertex_lines) {
        if (id < 1 || id > out.graph.nv())
            throw ParseError("vertex id " + std::to_string(id) + " outside 1.." +
                                 std::to_string(out.graph.nv()),
                             names_line.second);
        for (int s = 0; s < 3; ++s) {
            const std::string& want = occupant[size_t(3) * (id - 1) + s];
            if (names_line.first[s] != want)
                throw ParseError("vertex " + std::to_string(id) + " slot " + std::to_string(s + 1) +
                                     " is " + names_line.first[s] + " but the edge lines put " +
                                     want + " there",
                                 names_line.second);
        }
    }

    if (!color_lines.empty()) {
        out.colors.resize(size_t(3) * k);
        for (int label = 1; label <= 3 * k; ++label) {
            auto it = color_lines.find(label);
            if (it == color_lines.end())
                throw ParseError("color lines must cover every edge; missing color " +
                                     std::to_string(label),
                                 lines.front().no);
            out.colors[label - 1] = it->second;
        }
        if (static_cast<int>(color_lines.size()) != 3 * k)
            throw ParseError("color label " + std::to_string(color_lines.rbegin()->first) +
                                 " outside 1.." + std::to_string(3 * k),
                             lines.front().no);
    }
    return out;
}

std::string graph_text(const CGraph& g, const std::vector<RatFn>* colors) {
    validate_cgraph_structure(g);
    if (colors && static_cast<int>(colors->size()) != g.ne())
        throw ValidationError("need one color per edge");
    std::vector<std::string> occupant(size_t(3) * g.nv());
    for (int i = 0; i < g.ne(); ++i) {
        const CEdge& e = g.edges[i];
        occupant[size_t(3) * e.tail.vertex + e.tail.slot] = end_name(i + 1, e, true);
        occupant[size_t(3) * e.head.vertex + e.head.slot] = end_name(i + 1, e, false);
    }
    std::ostringstream os;
    os << "k: " << g.k << "\n";
    for (int v = 0; v < g.nv(); ++v) {
        os << "vertex " << (v + 1) << ":";
        for (int s = 0; s < 3; ++s) os << ' ' << occupant[size_t(3) * v + s];
        os << "\n";
    }
    for (int i = 0; i < g.ne(); ++i) {
        const CEdge& e = g.edges[i];
        os << "edge " << (i + 1) << ": ";
        if (e.separated) {
            os << "separated in=" << (e.tail.vertex + 1) << '.' << (e.tail.slot + 1) << '@'
               << e.in_gen << " out=" << (e.head.vertex + 1) << '.' << (e.head.slot + 1) << '@'
               << e.out_gen;
        } else {
            os << "compact " << (e.tail.vertex + 1) << '.' << (e.tail.slot + 1) << ' '
               << (e.head.vertex + 1) << '.' << (e.head.slot + 1);
        }
        os << "\n";
    }
    if (colors)
        for (int i = 0; i < g.ne(); ++i) os << "color " << (i + 1) << ": " << (*colors)[i].str() << "\n";
    return os.str();
}

} // namespace zt
