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
#include "ztilde/trace.hpp"

namespace zt {

namespace {

template <class T>
const T& per_edge(const std::vector<T>& xs, int i) {
    return xs[xs.size() == 1 ? 0 : size_t(i)];
}

void check_binding_size(size_t n, int ne, const char* what) {
    if (n != 1 && static_cast<int>(n) != ne)
        throw ValidationError(std::string("need one ") + what + " per edge (" +
                              std::to_string(ne) + ") or a single shared one, got " +
                              std::to_string(n));
}

std::string entry_name(size_t n, const CGraph& g) {
    return "entry " + std::to_string(n + 1) + ":\n" + graph_text(g);
}

} // namespace

DiagramSum trace_colored(const CGraph& g, const std::vector<RatFn>& colors, const Rational& coeff,
                         const std::vector<TwistedComplex>& cs, const std::vector<Endo>& endos) {
    check_binding_size(endos.size(), g.ne(), "endomorphism");
    validate_cgraph(g, cs);
    if (static_cast<int>(colors.size()) != g.ne())
        throw ValidationError("need one color per edge");

    ColoredDiagram out;
    out.nv = g.nv();
    out.edges.resize(g.ne());
    for (int i = 0; i < g.ne(); ++i) {
        const CEdge& e = g.edges[i];
        RatFn col = colors[i];
        if (e.separated) {
            const TwistedComplex& c = per_edge(cs, i);
            const Endo& endo = per_edge(endos, i);
            auto [ji, pi] = c.find_gen(e.in_gen);
            auto [jo, po] = c.find_gen(e.out_gen);
            if (ji - jo != endo.degree)
                throw ValidationError(
                    "edge " + std::to_string(i + 1) + ": no endomorphism entry for decorations (" +
                    e.in_gen + ", " + e.out_gen + "): index difference " + std::to_string(ji - jo) +
                    " does not match the endomorphism degree " + std::to_string(endo.degree));
            const Matrix<RatFn>& block = endo.m[jo];
            if (block.rows() != c.dim(jo) || block.cols() != c.dim(ji))
                throw ValidationError("edge " + std::to_string(i + 1) +
                                      ": endomorphism block shape mismatch");
            col = -(col * block.at(po, pi));
        }
        out.edges[i].tail = 3 * e.tail.vertex + e.tail.slot;
        out.edges[i].head = 3 * e.head.vertex + e.head.slot;
        out.edges[i].color = col;
    }
    return normalize_diagram(out, coeff);
}

DiagramSum trace(const CGraph& g, const MultiWeight& w, const std::vector<TwistedComplex>& cs,
                 const std::vector<Endo>& endos) {
    if (w.nvars() != g.ne())
        throw ValidationError("weight has " + std::to_string(w.nvars()) + " variables but the graph has " +
                              std::to_string(g.ne()) + " edges");
    DiagramSum out;
    std::vector<RatFn> colors(g.ne());
    for (const auto& [exps, c] : w.terms()) {
        for (int i = 0; i < g.ne(); ++i) colors[i] = RatFn::t(exps[i]);
        out += trace_colored(g, colors, c, cs, endos);
    }
    if (w.is_zero()) validate_cgraph(g, cs); // still surface structural errors
    return out;
}

MultiWeight sp_weight_action(const CGraph& g, const MultiWeight& w, int edge,
                             const std::string& p, int sign) {
    if (edge < 0 || edge >= g.ne()) throw ValidationError("edge index out of range");
    if (sign != 1 && sign != -1) throw ValidationError("sign must be +1 or -1");
    if (w.nvars() != g.ne()) throw ValidationError("weight arity mismatch");
    const CEdge& e = g.edges[edge];
    int delta = 0;
    if (e.separated && e.out_gen == p) delta += sign;
    if (e.separated && e.in_gen == p) delta -= sign;
    if (delta == 0) return w;
    MultiWeight r(w.nvars());
    for (const auto& [exps, c] : w.terms()) {
        std::vector<int> e2 = exps;
        e2[edge] += delta;
        r.add_term(e2, c);
    }
    return r;
}

DiagramSum assemble_z(const FlowCountTable& counts, const std::vector<TwistedComplex>& cs,
                      const std::vector<Propagator>& gs) {
    DiagramSum z;
    for (size_t n = 0; n < counts.entries.size(); ++n) {
        const auto& [graph, w] = counts.entries[n];
        if (graph.k != counts.k)
            throw ValidationError(entry_name(n, graph) + "graph k differs from the table k");
        std::vector<int> deg = validate_cgraph(graph, cs);
        for (int i = 0; i < graph.ne(); ++i)
            if (deg[i] != 1)
                throw ValidationError(entry_name(n, graph) + "edge " + std::to_string(i + 1) +
                                      " has degree " + std::to_string(deg[i]) +
                                      "; the degree vector must be all ones");
        z += trace(graph, w, cs, gs);
    }
    return z;
}

DiagramSum correct_anomaly(const DiagramSum& z, const AnomalyData& a) {
    return z - a.z_anom + a.mu * Rational(a.sign_w);
}

void validate_anomaly(const AnomalyData& a, int k) {
    if (k <= 0) throw ValidationError("k must be positive");
    for (const auto& [key, term] : a.z_anom.terms()) {
        (void)key;
        const ColoredDiagram& d = term.second;
        if (d.nv != 2 * k)
            throw ValidationError("z_anomaly term has " + std::to_string(d.nv) +
                                  " vertices, expected " + std::to_string(2 * k));
        for (const DiagEdge& e : d.edges)
            if (!e.color.is_one())
                throw ValidationError("z_anomaly terms must carry unit colors");
    }
    for (const auto& [key, term] : a.mu.terms()) {
        (void)key;
        if (term.second.nv != 2 * k)
            throw ValidationError("mu_k term has " + std::to_string(term.second.nv) +
                                  " vertices, expected " + std::to_string(2 * k));
    }
}

DiagramSum sum_over_orientations(const std::map<std::string, PatternData>& patterns) {
    if (patterns.empty()) throw ValidationError("no sign patterns supplied");
    const int k = patterns.begin()->second.counts.k;
    if (k <= 0) throw ValidationError("k must be positive");
    const int ne = 3 * k;
    const size_t expect = size_t(1) << ne;
    if (patterns.size() != expect)
        throw ValidationError("need all " + std::to_string(expect) + " sign patterns, got " +
                              std::to_string(patterns.size()));
    auto base_it = patterns.find(std::string(size_t(ne), '+'));
    if (base_it == patterns.end()) throw ValidationError("missing the all-plus base pattern");
    const PatternData& base = base_it->second;
    check_binding_size(base.complexes.size(), ne, "complex");
    if (base.propagators.size() != base.complexes.size())
        throw ValidationError("base pattern: complexes and propagators disagree in number");

    for (const auto& [pat, data] : patterns) {
        if (static_cast<int>(pat.size()) != ne)
            throw ValidationError("pattern '" + pat + "' must have length " + std::to_string(ne));
        for (char ch : pat)
            if (ch != '+' && ch != '-')
                throw ValidationError("pattern '" + pat + "' may only contain + and -");
        if (data.counts.k != k)
            throw ValidationError("pattern '" + pat + "': table k differs");
        if (!data.counts.pattern.empty() && data.counts.pattern != pat)
            throw ValidationError("pattern '" + pat + "': table declares pattern '" +
                                  data.counts.pattern + "'");
        check_binding_size(data.complexes.size(), ne, "complex");
        if (data.propagators.size() != data.complexes.size())
            throw ValidationError("pattern '" + pat +
                                  "': complexes and propagators disagree in number");
        for (int i = 0; i < ne; ++i) {
            const TwistedComplex& have = per_edge(data.complexes, i);
            const TwistedComplex& base_c = per_edge(base.complexes, i);
            if (pat[size_t(i)] == '+') {
                if (!(have == base_c))
                    throw ValidationError("pattern '" + pat + "' slot " + std::to_string(i + 1) +
                                          ": complex differs from the base pattern");
            } else {
                const Propagator& base_g = per_edge(base.propagators, i);
                auto [rc, rg] = reverse_complex(base_c, base_g);
                (void)rg;
                if (!(have == rc))
                    throw ValidationError("pattern '" + pat + "' slot " + std::to_string(i + 1) +
                                          ": complex is not the exact reversal of the base");
            }
        }
        for (size_t j = 0; j < data.propagators.size(); ++j)
            if (!is_propagator(data.complexes[j], data.propagators[j]))
                throw ValidationError("pattern '" + pat + "': propagator " + std::to_string(j + 1) +
                                      " fails the propagator identity");
        try {
            validate_anomaly(data.anomaly, k);
        } catch (const ValidationError& e) {
            throw ValidationError("pattern '" + pat + "': " + e.what());
        }
    }

    DiagramSum out;
    for (const auto& [pat, data] : patterns) {
        (void)pat;
        out += correct_anomaly(assemble_z(data.counts, data.complexes, data.propagators),
                               data.anomaly);
    }
    return out;
}

bool verify_degree_zero_cancellation(const FlowCountTable& degenerate,
                                     const std::vector<TwistedComplex>& cs,
                                     const std::vector<Propagator>& gs, DiagramSum* residual) {
    bool ok = true;
    DiagramSum bad;
    for (size_t n = 0; n < degenerate.entries.size(); ++n) {
        const auto& [graph, w] = degenerate.entries[n];
        std::vector<int> deg = validate_cgraph(graph, cs);
        int zero_edge = -1;
        for (int i = 0; i < graph.ne(); ++i) {
            if (deg[i] == 1) continue;
            if (deg[i] == 0 && zero_edge < 0 && graph.edges[i].separated) {
                zero_edge = i;
                continue;
            }
            throw ValidationError(entry_name(n, graph) +
                                  "need exactly one separated degree-0 edge and degree 1 elsewhere");
        }
        if (zero_edge < 0)
            throw ValidationError(entry_name(n, graph) + "no degree-0 edge found");
        const CEdge& e = graph.edges[zero_edge];
        const TwistedComplex& c = per_edge(cs, zero_edge);
        const auto [j, ppos] = c.find_gen(e.in_gen);
        const int qpos = c.find_gen(e.out_gen).second;

        DiagramSum group;
        if (j + 1 <= 3) {
            for (int x = 0; x < c.dim(j + 1); ++x) {
                const LaurentPoly& coeff = c.d[j + 1].at(x, ppos);
                if (coeff.is_zero()) continue;
                CGraph g2 = graph;
                g2.edges[zero_edge].in_gen = c.gens[j + 1][x];
                group += trace(g2, w * MultiWeight::embed(coeff, zero_edge, w.nvars()), cs, gs);
            }
        }
        if (j - 1 >= 0) {
            for (int y = 0; y < c.dim(j - 1); ++y) {
                const LaurentPoly& coeff = c.d[j].at(qpos, y);
                if (coeff.is_zero()) continue;
                CGraph g2 = graph;
                g2.edges[zero_edge].out_gen = c.gens[j - 1][y];
                group += trace(g2, w * MultiWeight::embed(coeff, zero_edge, w.nvars()), cs, gs);
            }
        }
        if (e.in_gen == e.out_gen) {
            CGraph g2 = graph;
            g2.edges[zero_edge].separated = false;
            g2.edges[zero_edge].in_gen.clear();
            g2.edges[zero_edge].out_gen.clear();
            group += trace(g2, w, cs, gs);
        }
        if (!group.is_zero()) {
            ok = false;
            bad += group;
        }
    }
    if (residual) *residual = bad;
    return ok;
}

bool verify_propagator_independence(const FlowCountTable& counts,
                                    const std::vector<TwistedComplex>& cs,
                                    const std::vector<Propagator>& ga,
                                    const std::vector<Propagator>& gb, const Truncation& tr,
                                    DiagramSum* residual) {
    auto check = [&](const std::vector<Propagator>& gs, const char* which) {
        if (gs.size() != cs.size() && gs.size() != 1 && cs.size() != 1)
            throw ValidationError(std::string(which) +
                                  ": propagator count does not match the complexes");
        const size_t n = std::max(gs.size(), cs.size());
        for (size_t i = 0; i < n; ++i)
            if (!is_propagator(cs[cs.size() == 1 ? 0 : i], gs[gs.size() == 1 ? 0 : i]))
                throw ValidationError(std::string(which) + "[" + std::to_string(i + 1) +
                                      "] fails the propagator identity");
    };
    check(ga, "first family");
    check(gb, "second family");
    DiagramSum red = reduce_modulo_ihx(assemble_z(counts, cs, ga) - assemble_z(counts, cs, gb), tr);
    if (residual) *residual = red;
    return red.is_zero();
}

} // namespace zt
