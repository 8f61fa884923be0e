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
#include "ztilde/testkit.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>

#include "ztilde/errors.hpp"

namespace zt {

namespace {

int nonzero_int(Rng& rng, int max_abs) {
    int v = rng.range(1, max_abs);
    return rng.chance(1, 2) ? v : -v;
}

} // namespace

Rational random_rational(Rng& rng, int max_abs_num, int max_den) {
    Rational q(rng.range(-max_abs_num, max_abs_num), rng.range(1, max_den));
    q.canonicalize();
    return q;
}

Rational random_nonzero_rational(Rng& rng, int max_abs_num, int max_den) {
    Rational q(nonzero_int(rng, max_abs_num), rng.range(1, max_den));
    q.canonicalize();
    return q;
}

LaurentPoly random_laurent(Rng& rng, int max_abs_exp, int max_terms) {
    int nterms = rng.range(0, max_terms);
    std::set<int> exps;
    while (static_cast<int>(exps.size()) < nterms && static_cast<int>(exps.size()) < 2 * max_abs_exp + 1)
        exps.insert(rng.range(-max_abs_exp, max_abs_exp));
    std::vector<LaurentPoly::Term> terms;
    for (int e : exps) terms.emplace_back(e, random_nonzero_rational(rng, 3, 2));
    return LaurentPoly::from_terms(std::move(terms));
}

LaurentPoly random_nonzero_laurent(Rng& rng, int max_abs_exp, int max_terms) {
    LaurentPoly p = random_laurent(rng, max_abs_exp, std::max(1, max_terms));
    if (p.is_zero()) p = LaurentPoly(random_nonzero_rational(rng, 3, 2), rng.range(-max_abs_exp, max_abs_exp));
    return p;
}

RatFn random_ratfn(Rng& rng, int max_abs_exp, int max_den_deg) {
    LaurentPoly num = random_nonzero_laurent(rng, max_abs_exp, 3);
    int deg = max_den_deg > 0 ? rng.range(0, max_den_deg) : 0;
    std::vector<LaurentPoly::Term> dt;
    dt.emplace_back(0, random_nonzero_rational(rng, 2, 1));
    for (int i = 1; i <= deg; ++i)
        if (rng.chance(2, 3)) dt.emplace_back(i, random_nonzero_rational(rng, 2, 1));
    return RatFn(num, LaurentPoly::from_terms(std::move(dt)));
}

MultiWeight random_multiweight(Rng& rng, int nvars, int max_abs_exp, int max_terms) {
    MultiWeight w(nvars);
    std::set<std::vector<int>> seen;
    int nterms = rng.range(1, std::max(1, max_terms));
    for (int t = 0; t < nterms; ++t) {
        std::vector<int> exps(nvars);
        for (int& e : exps) e = rng.range(-max_abs_exp, max_abs_exp);
        if (!seen.insert(exps).second) continue;
        w.add_term(exps, random_nonzero_rational(rng, 3, 2));
    }
    if (w.is_zero()) w.add_term(std::vector<int>(nvars, 0), Rational(1));
    return w;
}

/* ---- random acyclic complexes ------------------------------------------- */

namespace {

/* Multiply an accumulated pair (T, U) with T*U = I by a fresh invertible
 * factor: either I + c t^m E_{uv} (u != v) or a unit diagonal tweak. */
void apply_elementary(Rng& rng, Matrix<LaurentPoly>& T, Matrix<LaurentPoly>& U, int& twists) {
    const int n = T.rows();
    if (n == 0) return;
    int m = 0;
    if (twists > 0 && rng.chance(1, 2)) {
        m = rng.chance(1, 2) ? 1 : -1;
        --twists;
    }
    if (n < 2 || rng.chance(1, 4)) {
        int j = rng.range(0, n - 1);
        Rational s(rng.chance(1, 2) ? 1 : -1);
        Matrix<LaurentPoly> F = Matrix<LaurentPoly>::identity(n);
        Matrix<LaurentPoly> Finv = F;
        F.at(j, j) = LaurentPoly(s, m);
        Finv.at(j, j) = LaurentPoly(s, -m);
        T = T * F;
        U = Finv * U;
    } else {
        int u = rng.range(0, n - 1);
        int v = rng.range(0, n - 2);
        if (v >= u) ++v;
        LaurentPoly entry(random_nonzero_rational(rng, 2, 2), m);
        Matrix<LaurentPoly> F = Matrix<LaurentPoly>::identity(n);
        Matrix<LaurentPoly> Finv = F;
        F.at(u, v) = entry;
        Finv.at(u, v) = -entry;
        T = T * F;
        U = Finv * U;
    }
}

} // namespace

std::pair<TwistedComplex, Propagator> random_acyclic_complex(uint64_t seed,
                                                             const std::array<int, 4>& sizes,
                                                             int degree_bound) {
    for (int s : sizes)
        if (s < 0) throw ValidationError("random_acyclic_complex: negative generator count");
    if (degree_bound < 0) throw ValidationError("random_acyclic_complex: negative degree bound");
    const int a1 = sizes[0];
    const int a2 = sizes[1] - a1;
    const int a3 = sizes[2] - a2;
    if (a2 < 0 || a3 < 0 || sizes[3] != a3)
        throw ValidationError(
            "random_acyclic_complex: sizes admit no acyclic complex "
            "(need n1 >= n0, n2 >= n1 - n0, and n3 == n2 - (n1 - n0))");

    Rng rng(seed);

    TwistedComplex c;
    for (int i = 0; i < 4; ++i) {
        c.gens[i].resize(sizes[i]);
        for (int j = 0; j < sizes[i]; ++j)
            c.gens[i][j] = "p" + std::to_string(i) + "_" + std::to_string(j);
    }
    for (int i = 1; i <= 3; ++i) c.d[i] = Matrix<LaurentPoly>(sizes[i], sizes[i - 1]);
    for (int j = 0; j < a1; ++j) c.d[1].at(j, j) = LaurentPoly::one();
    for (int j = 0; j < a2; ++j) c.d[2].at(j, a1 + j) = LaurentPoly::one();
    for (int j = 0; j < a3; ++j) c.d[3].at(j, a2 + j) = LaurentPoly::one();

    Propagator g = Endo::zero(c, 1);
    for (int j = 0; j < a1; ++j) g.m[0].at(j, j) = RatFn(1);
    for (int j = 0; j < a2; ++j) g.m[1].at(a1 + j, j) = RatFn(1);
    for (int j = 0; j < a3; ++j) g.m[2].at(a2 + j, j) = RatFn(1);

    /* conjugate by random invertible matrices, one per index */
    std::array<Matrix<LaurentPoly>, 5> T, U;
    for (int i = 0; i < 4; ++i) {
        T[i] = Matrix<LaurentPoly>::identity(sizes[i]);
        U[i] = T[i];
        int twists = degree_bound;
        int nops = sizes[i] + 2;
        for (int op = 0; op < nops; ++op) apply_elementary(rng, T[i], U[i], twists);
    }
    T[4] = Matrix<LaurentPoly>::identity(0);
    U[4] = T[4];

    for (int i = 1; i <= 3; ++i) c.d[i] = T[i] * c.d[i] * U[i - 1];
    for (int i = 0; i < 4; ++i) g.m[i] = to_ratfn(T[i]) * g.m[i] * to_ratfn(U[i + 1]);

    auto rep = validate_complex(c);
    if (!rep.ok) throw ValidationError("random_acyclic_complex: postcondition failed: " + rep.message);
    if (!check_acyclic(c)) throw ValidationError("random_acyclic_complex: postcondition failed: not acyclic");
    if (!is_propagator(c, g))
        throw ValidationError("random_acyclic_complex: postcondition failed: propagator identity");
    return {c, g};
}

Endo random_endo(Rng& rng, const TwistedComplex& c, int degree) {
    Endo e = Endo::zero(c, degree);
    for (int i = 0; i < 4; ++i)
        for (int r = 0; r < e.m[i].rows(); ++r)
            for (int col = 0; col < e.m[i].cols(); ++col)
                if (rng.chance(2, 3)) e.m[i].at(r, col) = random_ratfn(rng, 1, 1);
    return e;
}

/* ---- random diagrams and C-graphs --------------------------------------- */

namespace {

std::vector<int> random_pairing(Rng& rng, int n_stubs) {
    std::vector<int> stubs(n_stubs);
    std::iota(stubs.begin(), stubs.end(), 0);
    for (int i = n_stubs - 1; i > 0; --i) std::swap(stubs[i], stubs[rng.range(0, i)]);
    return stubs;
}

bool pairing_connected(const std::vector<int>& stubs, int nv) {
    std::vector<int> parent(nv);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (size_t i = 0; i + 1 < stubs.size(); i += 2)
        parent[find(stubs[i] / 3)] = find(stubs[i + 1] / 3);
    for (int v = 1; v < nv; ++v)
        if (find(v) != find(0)) return false;
    return true;
}

} // namespace

ColoredDiagram random_diagram(Rng& rng, int nv, int max_abs_exp, int max_den_deg) {
    if (nv <= 0 || nv % 2 != 0) throw ValidationError("random_diagram: nv must be positive and even");
    ColoredDiagram d;
    d.nv = nv;
    auto stubs = random_pairing(rng, 3 * nv);
    for (int i = 0; i + 1 < 3 * nv; i += 2) {
        DiagEdge e;
        e.tail = stubs[i];
        e.head = stubs[i + 1];
        e.color = random_ratfn(rng, max_abs_exp, max_den_deg);
        d.edges.push_back(e);
    }
    return d;
}

namespace {

/* connected pairing of the 6k stubs, as (vertex, slot) attachments */
std::vector<std::pair<CAttach, CAttach>> random_connected_pairing(Rng& rng, int k) {
    if (k < 1) throw ValidationError("random C-graph: k must be positive");
    const int nv = 2 * k;
    for (int attempt = 0; attempt < 10000; ++attempt) {
        auto stubs = random_pairing(rng, 3 * nv);
        if (!pairing_connected(stubs, nv)) continue;
        std::vector<std::pair<CAttach, CAttach>> out;
        for (int i = 0; i + 1 < 3 * nv; i += 2)
            out.push_back({CAttach{stubs[i] / 3, stubs[i] % 3}, CAttach{stubs[i + 1] / 3, stubs[i + 1] % 3}});
        return out;
    }
    throw ValidationError("random C-graph: failed to sample a connected pairing");
}

} // namespace

CGraph random_cgraph(Rng& rng, int k) {
    CGraph g;
    g.k = k;
    for (const auto& [a, b] : random_connected_pairing(rng, k)) {
        CEdge e;
        e.tail = a;
        e.head = b;
        if (rng.chance(1, 2)) {
            e.separated = true;
            e.in_gen = "q" + std::to_string(rng.range(0, 9));
            e.out_gen = "q" + std::to_string(rng.range(0, 9));
        }
        g.edges.push_back(e);
    }
    validate_cgraph_structure(g);
    return g;
}

CGraph random_cgraph_for_complex(Rng& rng, int k, const TwistedComplex& c, int zero_edges) {
    if (zero_edges < 0 || zero_edges > 3 * k)
        throw ValidationError("random C-graph: bad degree-0 edge count");
    std::vector<int> zero_js, one_js;
    for (int j = 0; j <= 3; ++j) {
        if (c.dim(j) > 0) zero_js.push_back(j);
        if (j <= 2 && c.dim(j) > 0 && c.dim(j + 1) > 0) one_js.push_back(j);
    }
    if (zero_edges > 0 && zero_js.empty())
        throw ValidationError("random C-graph: degree-0 decorations need a nonempty complex");

    CGraph g;
    g.k = k;
    auto pairs = random_connected_pairing(rng, k);
    std::vector<int> order(pairs.size());
    std::iota(order.begin(), order.end(), 0);
    for (int i = static_cast<int>(order.size()) - 1; i > 0; --i)
        std::swap(order[i], order[rng.range(0, i)]);

    g.edges.resize(pairs.size());
    for (size_t i = 0; i < pairs.size(); ++i) {
        CEdge e;
        e.tail = pairs[i].first;
        e.head = pairs[i].second;
        g.edges[i] = e;
    }
    for (size_t oi = 0; oi < order.size(); ++oi) {
        CEdge& e = g.edges[order[oi]];
        if (static_cast<int>(oi) < zero_edges) {
            int j = zero_js[rng.range(0, static_cast<int>(zero_js.size()) - 1)];
            e.separated = true;
            e.in_gen = c.gens[j][rng.range(0, c.dim(j) - 1)];
            e.out_gen = c.gens[j][rng.range(0, c.dim(j) - 1)];
        } else if (!one_js.empty() && rng.chance(1, 2)) {
            int j = one_js[rng.range(0, static_cast<int>(one_js.size()) - 1)];
            e.separated = true;
            e.in_gen = c.gens[j + 1][rng.range(0, c.dim(j + 1) - 1)];
            e.out_gen = c.gens[j][rng.range(0, c.dim(j) - 1)];
        }
    }
    validate_cgraph_structure(g);
    return g;
}

/* ---- trivalent skeleton enumeration ------------------------------------- */

namespace {

struct Multigraph {
    int n = 0;
    std::vector<int> loops;          // per vertex, 0 or 1
    std::vector<std::vector<int>> m; // multiplicity, upper triangle used
};

bool multigraph_connected(const Multigraph& g) {
    std::vector<int> parent(g.n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v)
            if (g.m[u][v] > 0) parent[find(u)] = find(v);
    for (int v = 1; v < g.n; ++v)
        if (find(v) != find(0)) return false;
    return true;
}

std::string multigraph_key(const Multigraph& g) {
    std::vector<int> perm(g.n);
    std::iota(perm.begin(), perm.end(), 0);
    std::string best;
    do {
        std::string key;
        key.reserve(g.n * (g.n + 1) / 2);
        for (int u = 0; u < g.n; ++u)
            for (int v = u; v < g.n; ++v) {
                int pu = perm[u], pv = perm[v];
                int val = (u == v) ? g.loops[pu] : g.m[std::min(pu, pv)][std::max(pu, pv)];
                key.push_back(static_cast<char>('0' + val));
            }
        if (best.empty() || key < best) best = key;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

CGraph multigraph_to_cgraph(const Multigraph& g, int k) {
    CGraph out;
    out.k = k;
    std::vector<int> slot(g.n, 0);
    for (int v = 0; v < g.n; ++v)
        if (g.loops[v]) {
            CEdge e;
            e.tail = CAttach{v, slot[v]++};
            e.head = CAttach{v, slot[v]++};
            out.edges.push_back(e);
        }
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v)
            for (int rep = 0; rep < g.m[u][v]; ++rep) {
                CEdge e;
                e.tail = CAttach{u, slot[u]++};
                e.head = CAttach{v, slot[v]++};
                out.edges.push_back(e);
            }
    validate_cgraph_structure(out);
    return out;
}

} // namespace

std::vector<CGraph> enumerate_trivalent_graphs(int k) {
    if (k < 1) throw ValidationError("enumerate_trivalent_graphs: k must be positive");
    if (k > 3) throw ValidationError("enumerate_trivalent_graphs: k is limited to 3");
    const int n = 2 * k;

    Multigraph g;
    g.n = n;
    g.loops.assign(n, 0);
    g.m.assign(n, std::vector<int>(n, 0));
    std::vector<int> deg(n, 0);

    std::set<std::string> seen;
    std::vector<CGraph> out;

    /* cells in blocks: block v decides the loop at v and the edges to all
     * w > v, after which deg[v] is final */
    struct Cell {
        int u, v;
    };
    std::vector<Cell> cells;
    for (int v = 0; v < n; ++v) {
        cells.push_back({v, v});
        for (int w = v + 1; w < n; ++w) cells.push_back({v, w});
    }

    auto rec = [&](auto&& self, size_t ci) -> void {
        if (ci == cells.size()) {
            if (!multigraph_connected(g)) return;
            if (seen.insert(multigraph_key(g)).second) out.push_back(multigraph_to_cgraph(g, k));
            return;
        }
        const auto [u, v] = cells[ci];
        const bool closes_u = (v == n - 1) || (u == n - 1 && u == v);
        if (u == v) {
            for (int L = 0; L <= 1 && 2 * L + deg[u] <= 3; ++L) {
                g.loops[u] = L;
                deg[u] += 2 * L;
                if (!(closes_u && deg[u] != 3)) self(self, ci + 1);
                deg[u] -= 2 * L;
                g.loops[u] = 0;
            }
            return;
        }
        int cap = std::min(3 - deg[u], 3 - deg[v]);
        for (int mult = 0; mult <= cap; ++mult) {
            g.m[u][v] = mult;
            deg[u] += mult;
            deg[v] += mult;
            if (!(closes_u && deg[u] != 3)) self(self, ci + 1);
            deg[u] -= mult;
            deg[v] -= mult;
            g.m[u][v] = 0;
        }
    };
    rec(rec, 0);
    return out;
}

int count_trivalent_classes_by_matchings(int k) {
    if (k < 1) throw ValidationError("matchings oracle: k must be positive");
    if (k > 2) throw ValidationError("matchings oracle: k is limited to 2");
    const int n = 2 * k;
    const int stubs = 6 * k;

    Multigraph g;
    g.n = n;
    std::set<std::string> seen;
    std::vector<int> partner(stubs, -1);

    auto rec = [&](auto&& self) -> void {
        int first = -1;
        for (int s = 0; s < stubs; ++s)
            if (partner[s] < 0) {
                first = s;
                break;
            }
        if (first < 0) {
            g.loops.assign(n, 0);
            g.m.assign(n, std::vector<int>(n, 0));
            for (int s = 0; s < stubs; ++s) {
                int t = partner[s];
                if (t < s) continue;
                int u = s / 3, v = t / 3;
                if (u == v)
                    g.loops[u] += 1;
                else
                    g.m[std::min(u, v)][std::max(u, v)] += 1;
            }
            if (multigraph_connected(g)) seen.insert(multigraph_key(g));
            return;
        }
        for (int t = first + 1; t < stubs; ++t) {
            if (partner[t] >= 0) continue;
            partner[first] = t;
            partner[t] = first;
            self(self);
            partner[first] = -1;
            partner[t] = -1;
        }
    };
    rec(rec);
    return static_cast<int>(seen.size());
}

ColoredDiagram skeleton_diagram(const CGraph& g) {
    ColoredDiagram d;
    d.nv = g.nv();
    for (const auto& e : g.edges) {
        DiagEdge de;
        de.tail = 3 * e.tail.vertex + e.tail.slot;
        de.head = 3 * e.head.vertex + e.head.slot;
        de.color = RatFn::one();
        d.edges.push_back(de);
    }
    validate_diagram(d);
    return d;
}

RelationSpanOracle brute_force_relation_span(int k, const Truncation& tr) {
    if (k < 1 || k > 2) throw ValidationError("brute_force_relation_span: k is limited to 1 or 2");
    if (tr.max_den_deg != 0)
        throw ValidationError("brute_force_relation_span: only denominator-free truncations are supported");
    if (tr.max_abs_exp < 0) throw ValidationError("brute_force_relation_span: negative exponent bound");

    RelationSpanOracle oracle;
    oracle.tr = tr;

    std::set<std::string> seen;
    std::vector<ColoredDiagram> reps;
    const int A = tr.max_abs_exp;

    for (const auto& skel : enumerate_trivalent_graphs(k)) {
        ColoredDiagram base = skeleton_diagram(skel);
        const int ne = static_cast<int>(base.edges.size());
        std::vector<int> exps(ne, -A);
        for (;;) {
            ColoredDiagram d = base;
            for (int i = 0; i < ne; ++i) d.edges[i].color = RatFn::t(exps[i]);
            DiagramSum nd = normalize_diagram(d);
            for (const auto& [key, term] : nd.terms()) {
                if (!within_truncation(term.second, tr)) continue;
                if (seen.insert(key).second) reps.push_back(term.second);
            }
            int i = 0;
            while (i < ne && exps[i] == A) exps[i++] = -A;
            if (i == ne) break;
            ++exps[i];
        }
    }

    for (const auto& rep : reps)
        for (size_t e = 0; e < rep.edges.size(); ++e) {
            if (rep.edges[e].tail / 3 == rep.edges[e].head / 3) continue;
            DiagramSum r = ihx_relation(rep, static_cast<int>(e));
            if (!r.is_zero() && within_truncation(r, tr)) oracle.basis.insert(r);
        }
    return oracle;
}

} // namespace zt
