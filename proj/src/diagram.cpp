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
#include "ztilde/diagram.hpp"

#include <algorithm>
#include <array>
#include <climits>
#include <functional>
#include <numeric>

#include "ztilde/scan.hpp"

namespace zt {

void validate_diagram(const ColoredDiagram& d) {
    if (d.nv < 0) throw ValidationError("negative vertex count");
    if (d.edges.size() * 2 != size_t(3) * d.nv)
        throw ValidationError("a trivalent diagram on " + std::to_string(d.nv) +
                              " vertices needs " + std::to_string(3 * d.nv) +
                              "/2 edges, found " + std::to_string(d.edges.size()));
    std::vector<char> used(size_t(3) * d.nv, 0);
    for (const DiagEdge& e : d.edges) {
        for (int h : {e.tail, e.head}) {
            if (h < 0 || h >= 3 * d.nv)
                throw ValidationError("half-edge id " + std::to_string(h) + " out of range");
            if (used[h]++)
                throw ValidationError("half-edge " + std::to_string(h) + " used twice");
        }
    }
}

ColoredDiagram holonomy_move(const ColoredDiagram& d, int v, int n) {
    if (v < 0 || v >= d.nv) throw ValidationError("holonomy move at a vertex out of range");
    ColoredDiagram r = d;
    for (DiagEdge& e : r.edges) {
        int shift = 0;
        if (e.head / 3 == v) shift += n;
        if (e.tail / 3 == v) shift -= n;
        if (shift != 0) e.color = e.color.shifted(shift);
    }
    return r;
}

ColoredDiagram flip_edge(const ColoredDiagram& d, int e) {
    if (e < 0 || e >= static_cast<int>(d.edges.size()))
        throw ValidationError("edge index out of range");
    ColoredDiagram r = d;
    std::swap(r.edges[e].tail, r.edges[e].head);
    r.edges[e].color = r.edges[e].color.bar();
    return r;
}

namespace {

int uf_find(std::vector<int>& parent, int x) {
    while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    return x;
}

/* bar of an atomic color is +/-1 times an atomic color (only the sign
   normalization of the reversed denominator can leak a factor); replaces col
   and returns that sign. */
int bar_unit(RatFn& col) {
    auto as = col.bar().atoms();
    col = as.at(0).second;
    return sgn(as.at(0).first) >= 0 ? 1 : -1;
}

std::string make_key(int nv, const std::vector<std::array<int, 2>>& th,
                     const std::vector<RatFn>& cols) {
    std::string s = "graph{" + std::to_string(nv) + ";";
    for (size_t j = 0; j < th.size(); ++j) {
        s += (j ? ", " : " ");
        s += std::to_string(th[j][0]);
        s += '>';
        s += std::to_string(th[j][1]);
    }
    s += "} colors{";
    for (size_t j = 0; j < cols.size(); ++j) {
        if (j) s += ", ";
        s += cols[j].str();
    }
    s += "}";
    return s;
}

/* The reference realization of a key: vertices in order, each vertex's slots
   filled in ascending (edge, end) order.  Canonical reps are exactly the
   diagrams this produces, which makes normalization idempotent. */
ColoredDiagram build_reference_diagram(int nv, const std::vector<std::array<int, 2>>& th,
                                       const std::vector<RatFn>& cols) {
    ColoredDiagram r;
    r.nv = nv;
    r.edges.resize(th.size());
    std::vector<int> fill(nv, 0);
    auto slot = [&](int v) {
        if (v < 0 || v >= nv) throw ValidationError("vertex out of range in diagram key");
        if (fill[v] > 2)
            throw ValidationError("vertex " + std::to_string(v) + " has more than 3 ends");
        return 3 * v + fill[v]++;
    };
    for (size_t j = 0; j < th.size(); ++j) {
        r.edges[j].tail = slot(th[j][0]);
        r.edges[j].head = slot(th[j][1]);
        r.edges[j].color = cols[j];
    }
    for (int v = 0; v < nv; ++v)
        if (fill[v] != 3)
            throw ValidationError("vertex " + std::to_string(v) + " has " +
                                  std::to_string(fill[v]) + " ends; diagrams are trivalent");
    return r;
}

struct Rec {
    int a = 0, b = 0;   // endpoint vertices under the current relabeling
    int as = 0, bs = 0; // original slots of the tail/head half-edges
    RatFn col;
    int f = 1; // orientation-flip factor
    bool loop = false;
};

} // namespace

CanonicalForm canonicalize(const ColoredDiagram& d) {
    validate_diagram(d);
    if (d.nv > 8)
        throw ValidationError("refusing to canonicalize a diagram with more than 8 vertices");
    for (const DiagEdge& e : d.edges) {
        if (e.color.is_zero())
            throw ValidationError("zero color on an edge; normalize_diagram drops such terms");
        if (!e.color.num().is_monomial() || e.color.num().leading_coeff() != Rational(1))
            throw ValidationError(
                "canonicalize needs atomic colors (numerator a unit monomial); "
                "use normalize_diagram");
    }

    const int nv = d.nv;
    const int ne = static_cast<int>(d.edges.size());
    std::vector<int> loops;
    for (int i = 0; i < ne; ++i)
        if (d.edges[i].tail / 3 == d.edges[i].head / 3) loops.push_back(i);

    bool have = false, ambiguous = false;
    std::string best_key;
    int best_sign = 0;
    std::vector<std::array<int, 2>> best_th;
    std::vector<RatFn> best_cols;

    std::vector<Rec> recs(ne);
    std::vector<int> ord(ne), desc(size_t(3) * nv, -1), parent(nv), gauge(nv);
    std::vector<char> tree(ne);
    std::vector<std::array<int, 2>> th(ne);
    std::vector<RatFn> cols(ne);

    auto evaluate = [&](int flip_sign) {
        int sign = flip_sign;
        for (int j = 0; j < ne; ++j) {
            const Rec& r = recs[ord[j]];
            desc[size_t(3) * r.a + r.as] = 2 * j;
            desc[size_t(3) * r.b + r.bs] = 2 * j + 1;
        }
        for (int v = 0; v < nv; ++v) {
            int x = desc[size_t(3) * v], y = desc[size_t(3) * v + 1], z = desc[size_t(3) * v + 2];
            int p, q;
            if (x < y && x < z) {
                p = y;
                q = z;
            } else if (y < x && y < z) {
                p = z;
                q = x;
            } else {
                p = x;
                q = y;
            }
            if (p > q) sign = -sign;
        }
        /* holonomy gauge along a first-come spanning forest */
        std::iota(parent.begin(), parent.end(), 0);
        for (int j = 0; j < ne; ++j) {
            const Rec& r = recs[ord[j]];
            tree[j] = 0;
            if (r.loop) continue;
            int ra = uf_find(parent, r.a), rb = uf_find(parent, r.b);
            if (ra != rb) {
                parent[ra] = rb;
                tree[j] = 1;
            }
        }
        std::fill(gauge.begin(), gauge.end(), INT_MIN);
        for (int v0 = 0; v0 < nv; ++v0) {
            if (gauge[v0] != INT_MIN) continue;
            gauge[v0] = 0;
            /* settle the component by sweeping the tree edges */
            bool grew = true;
            while (grew) {
                grew = false;
                for (int j = 0; j < ne; ++j) {
                    if (!tree[j]) continue;
                    const Rec& r = recs[ord[j]];
                    bool ka = gauge[r.a] != INT_MIN, kb = gauge[r.b] != INT_MIN;
                    if (ka == kb) continue;
                    int tord = r.col.t_order();
                    if (ka)
                        gauge[r.b] = gauge[r.a] - tord;
                    else
                        gauge[r.a] = gauge[r.b] + tord;
                    grew = true;
                }
            }
        }
        for (int j = 0; j < ne; ++j) {
            const Rec& r = recs[ord[j]];
            th[j] = {r.a, r.b};
            int shift = gauge[r.b] - gauge[r.a];
            cols[j] = shift ? r.col.shifted(shift) : r.col;
        }
        std::string key = make_key(nv, th, cols);
        if (!have || key < best_key) {
            have = true;
            best_key = std::move(key);
            best_sign = sign;
            ambiguous = false;
            best_th = th;
            best_cols = cols;
        } else if (key == best_key && sign != best_sign) {
            ambiguous = true;
        }
    };

    std::vector<std::pair<int, int>> groups;
    std::function<void(size_t, int)> over_groups = [&](size_t gi, int flip_sign) {
        if (gi == groups.size()) {
            evaluate(flip_sign);
            return;
        }
        auto [lo, hi] = groups[gi];
        std::sort(ord.begin() + lo, ord.begin() + hi);
        do {
            over_groups(gi + 1, flip_sign);
        } while (std::next_permutation(ord.begin() + lo, ord.begin() + hi));
    };

    std::vector<int> sigma(nv);
    std::iota(sigma.begin(), sigma.end(), 0);
    do {
        for (unsigned mask = 0; mask < (1u << loops.size()); ++mask) {
            int flip_sign = 1;
            for (int i = 0; i < ne; ++i) {
                const DiagEdge& e = d.edges[i];
                Rec& r = recs[i];
                r.a = sigma[e.tail / 3];
                r.as = e.tail % 3;
                r.b = sigma[e.head / 3];
                r.bs = e.head % 3;
                r.col = e.color;
                r.f = 1;
                r.loop = (r.a == r.b) && (e.tail / 3 == e.head / 3);
            }
            for (size_t li = 0; li < loops.size(); ++li) {
                if (mask & (1u << li)) {
                    Rec& r = recs[loops[li]];
                    std::swap(r.as, r.bs);
                    r.f = bar_unit(r.col);
                }
            }
            for (int i = 0; i < ne; ++i) {
                Rec& r = recs[i];
                if (!r.loop && r.a > r.b) {
                    std::swap(r.a, r.b);
                    std::swap(r.as, r.bs);
                    r.f = bar_unit(r.col);
                }
                flip_sign *= r.f;
            }
            std::iota(ord.begin(), ord.end(), 0);
            std::sort(ord.begin(), ord.end(), [&](int x, int y) {
                const Rec& rx = recs[x];
                const Rec& ry = recs[y];
                if (rx.a != ry.a) return rx.a < ry.a;
                if (rx.b != ry.b) return rx.b < ry.b;
                return x < y;
            });
            groups.clear();
            for (int lo = 0; lo < ne;) {
                int hi = lo + 1;
                while (hi < ne && recs[ord[hi]].a == recs[ord[lo]].a &&
                       recs[ord[hi]].b == recs[ord[lo]].b)
                    ++hi;
                if (hi - lo > 1) groups.push_back({lo, hi});
                lo = hi;
            }
            over_groups(0, flip_sign);
        }
    } while (std::next_permutation(sigma.begin(), sigma.end()));

    CanonicalForm cf;
    if (!have || ambiguous) return cf; // sign 0: the class is zero
    cf.sign = best_sign;
    cf.key = std::move(best_key);
    cf.rep = build_reference_diagram(nv, best_th, best_cols);
    return cf;
}

void DiagramSum::add_canonical(const Rational& coeff, const CanonicalForm& cf) {
    if (cf.sign == 0 || coeff == 0) return;
    Rational c = cf.sign > 0 ? coeff : Rational(-coeff);
    auto it = terms_.find(cf.key);
    if (it == terms_.end()) {
        terms_.emplace(cf.key, std::make_pair(c, cf.rep));
    } else {
        it->second.first += c;
        if (it->second.first == 0) terms_.erase(it);
    }
}

DiagramSum DiagramSum::operator-() const {
    DiagramSum r = *this;
    for (auto& [k, t] : r.terms_) t.first = -t.first;
    return r;
}

DiagramSum& DiagramSum::operator+=(const DiagramSum& o) {
    for (const auto& [k, t] : o.terms_) {
        auto it = terms_.find(k);
        if (it == terms_.end()) {
            terms_.emplace(k, t);
        } else {
            it->second.first += t.first;
            if (it->second.first == 0) terms_.erase(it);
        }
    }
    return *this;
}

DiagramSum& DiagramSum::operator-=(const DiagramSum& o) { return *this += -o; }

DiagramSum DiagramSum::operator+(const DiagramSum& o) const {
    DiagramSum r = *this;
    r += o;
    return r;
}

DiagramSum DiagramSum::operator-(const DiagramSum& o) const {
    DiagramSum r = *this;
    r -= o;
    return r;
}

DiagramSum DiagramSum::operator*(const Rational& c) const {
    DiagramSum r;
    if (c == 0) return r;
    r = *this;
    for (auto& [k, t] : r.terms_) t.first *= c;
    return r;
}

bool DiagramSum::operator==(const DiagramSum& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    auto a = terms_.begin();
    auto b = o.terms_.begin();
    for (; a != terms_.end(); ++a, ++b)
        if (a->first != b->first || a->second.first != b->second.first) return false;
    return true;
}

std::string DiagramSum::str() const {
    if (terms_.empty()) return "0\n";
    std::string out;
    for (const auto& [k, t] : terms_) {
        out += to_string(t.first);
        out += " * ";
        out += k;
        out += "\n";
    }
    return out;
}

namespace {

void parse_key(detail::Scanner& sc, int& nv, std::vector<std::array<int, 2>>& th,
               std::vector<RatFn>& cols) {
    if (!detail::take_word(sc, "graph")) sc.fail("expected graph{...}");
    sc.expect('{', "after graph");
    nv = detail::take_small_int(sc, "vertex count");
    sc.expect(';', "after the vertex count");
    if (!sc.accept('}')) {
        do {
            int t = detail::take_small_int(sc, "tail vertex");
            sc.expect('>', "between the endpoints of an edge");
            int h = detail::take_small_int(sc, "head vertex");
            th.push_back({t, h});
        } while (sc.accept(','));
        sc.expect('}', "closing graph{");
    }
    if (!detail::take_word(sc, "colors")) sc.fail("expected colors{...}");
    sc.expect('{', "after colors");
    if (!sc.accept('}')) {
        do {
            cols.push_back(RatFn::parse(sc));
        } while (sc.accept(','));
        sc.expect('}', "closing colors{");
    }
    if (cols.size() != th.size()) sc.fail("need exactly one color per edge");
}

} // namespace

DiagramSum DiagramSum::parse(std::string_view text, int first_line_no) {
    std::vector<detail::SourceLine> lines = detail::meaningful_lines(text, first_line_no);
    DiagramSum out;
    if (lines.empty())
        throw ParseError("empty diagram sum (write the single line '0' for zero)", first_line_no);
    if (lines.size() == 1 && lines[0].text == "0") return out;
    for (const detail::SourceLine& ln : lines) {
        detail::Scanner sc(ln.text, ln.no);
        Rational c;
        try {
            c = parse_rational(sc.take_rational());
        } catch (const ParseError& e) {
            throw ParseError(e.what(), ln.no);
        }
        sc.expect('*', "after the coefficient");
        int nv = 0;
        std::vector<std::array<int, 2>> th;
        std::vector<RatFn> cols;
        parse_key(sc, nv, th, cols);
        detail::expect_end(sc);
        try {
            out += normalize_diagram(build_reference_diagram(nv, th, cols), c);
        } catch (const ValidationError& e) {
            throw ParseError(e.what(), ln.no);
        }
    }
    return out;
}

DiagramSum normalize_diagram(const ColoredDiagram& d, const Rational& coeff) {
    validate_diagram(d);
    DiagramSum out;
    if (coeff == 0) return out;
    const size_t ne = d.edges.size();
    std::vector<std::vector<std::pair<Rational, RatFn>>> parts(ne);
    for (size_t i = 0; i < ne; ++i) {
        parts[i] = d.edges[i].color.atoms();
        if (parts[i].empty()) return out; // zero color
    }
    std::vector<size_t> idx(ne, 0);
    ColoredDiagram a = d;
    while (true) {
        Rational c = coeff;
        for (size_t i = 0; i < ne; ++i) {
            c *= parts[i][idx[i]].first;
            a.edges[i].color = parts[i][idx[i]].second;
        }
        out.add_canonical(c, canonicalize(a));
        size_t i = 0;
        for (; i < ne; ++i) {
            if (++idx[i] < parts[i].size()) break;
            idx[i] = 0;
        }
        if (i == ne) break;
    }
    return out;
}

bool within_truncation(const RatFn& color, const Truncation& tr) {
    if (color.is_zero()) return true;
    if (color.den().degree() > tr.max_den_deg) return false;
    for (const auto& [c, atom] : color.atoms()) {
        (void)c;
        int e = atom.t_order();
        if (e > tr.max_abs_exp || -e > tr.max_abs_exp) return false;
    }
    return true;
}

bool within_truncation(const ColoredDiagram& d, const Truncation& tr) {
    for (const DiagEdge& e : d.edges)
        if (!within_truncation(e.color, tr)) return false;
    return true;
}

bool within_truncation(const DiagramSum& d, const Truncation& tr) {
    for (const auto& [k, t] : d.terms())
        if (!within_truncation(t.second, tr)) return false;
    return true;
}

Truncation containing_truncation(const DiagramSum& d) {
    Truncation tr;
    for (const auto& [k, t] : d.terms()) {
        (void)k;
        for (const DiagEdge& e : t.second.edges) {
            if (e.color.is_zero()) continue;
            tr.max_den_deg = std::max(tr.max_den_deg, e.color.den().degree());
            for (const auto& [c, atom] : e.color.atoms()) {
                (void)c;
                int ex = atom.t_order();
                tr.max_abs_exp = std::max(tr.max_abs_exp, ex < 0 ? -ex : ex);
            }
        }
    }
    return tr;
}

} // namespace zt
