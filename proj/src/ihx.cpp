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
#include <algorithm>
#include <map>

#include "ztilde/diagram.hpp"

namespace zt {

namespace {

struct EndRef {
    int edge = -1;
    int end = -1; // 0 = tail, 1 = head
};

int& end_slot(ColoredDiagram& d, const EndRef& r) {
    return r.end == 0 ? d.edges[r.edge].tail : d.edges[r.edge].head;
}

} // namespace

/* Re-pairings of the four strands around a compact edge e = (u -> v).  Write
 * the cyclic orders as u: (e, A, B) and v: (e, C, D), with e's color gauged
 * to a constant.  The three local configurations are
 *
 *   I: u = (e, A, B)  v = (e, C, D)   (the input)
 *   H: u = (e, A, C)  v = (e, B, D)   (swap B and C)
 *   X: u = (e, A, D)  v = (e, B, C)   (B, C, D cycle one step)
 *
 * and I - H + X vanishes in the quotient.  Only the slot assignments move;
 * every strand keeps its own orientation and color.
 */
DiagramSum ihx_relation(const ColoredDiagram& d, int e) {
    validate_diagram(d);
    if (e < 0 || e >= static_cast<int>(d.edges.size()))
        throw ValidationError("edge index out of range");
    const DiagEdge& me = d.edges[e];
    const int u = me.tail / 3, v = me.head / 3;
    if (u == v) throw ValidationError("no IHX relation at a self-loop");
    if (me.color.is_zero()) return DiagramSum();
    if (!me.color.is_laurent() || !me.color.num().is_monomial())
        throw ValidationError(
            "the contracted edge must carry a monomial color; a nontrivial "
            "denominator cannot be gauged away");

    /* gauge the t-power of the middle color into the edges at u */
    ColoredDiagram base = holonomy_move(d, u, me.color.num().min_exp());

    const int su = me.tail % 3, sv = me.head % 3;
    const int hu2 = 3 * u + (su + 2) % 3; // slot of B
    const int hv1 = 3 * v + (sv + 1) % 3; // slot of C
    const int hv2 = 3 * v + (sv + 2) % 3; // slot of D

    std::map<int, EndRef> at;
    for (int j = 0; j < static_cast<int>(base.edges.size()); ++j) {
        at[base.edges[j].tail] = {j, 0};
        at[base.edges[j].head] = {j, 1};
    }
    const EndRef B = at.at(hu2), C = at.at(hv1), D = at.at(hv2);

    ColoredDiagram h = base;
    end_slot(h, B) = hv1;
    end_slot(h, C) = hu2;

    ColoredDiagram x = base;
    end_slot(x, D) = hu2;
    end_slot(x, B) = hv1;
    end_slot(x, C) = hv2;

    return normalize_diagram(base) - normalize_diagram(h) + normalize_diagram(x);
}

void RelationBasis::insert(const DiagramSum& row) {
    DiagramSum r = reduce(row);
    if (r.is_zero()) return;
    const auto& lead = *r.terms().begin();
    r = r * (Rational(1) / lead.second.first);
    const std::string lk = r.terms().begin()->first;
    for (DiagramSum& old : rows_) {
        auto it = old.terms().find(lk);
        if (it != old.terms().end()) old = old - r * it->second.first;
    }
    auto pos = std::lower_bound(rows_.begin(), rows_.end(), lk,
                                [](const DiagramSum& a, const std::string& k) {
                                    return a.terms().begin()->first < k;
                                });
    rows_.insert(pos, std::move(r));
}

DiagramSum RelationBasis::reduce(const DiagramSum& d) const {
    DiagramSum res = d;
    for (const DiagramSum& r : rows_) {
        if (res.is_zero()) break;
        const std::string& lk = r.terms().begin()->first;
        auto it = res.terms().find(lk);
        if (it != res.terms().end()) res = res - r * it->second.first;
    }
    return res;
}

DiagramSum reduce_modulo_ihx(const DiagramSum& d, const Truncation& tr) {
    if (!within_truncation(d, tr))
        throw ValidationError("sum lies outside the truncation; increase the bound");
    std::map<std::string, ColoredDiagram> seen;
    std::vector<std::string> queue;
    auto enqueue = [&](const std::string& key, const ColoredDiagram& rep) {
        if (seen.emplace(key, rep).second) queue.push_back(key);
    };
    for (const auto& [key, term] : d.terms()) enqueue(key, term.second);

    RelationBasis basis;
    for (size_t qi = 0; qi < queue.size(); ++qi) {
        const ColoredDiagram rep = seen.at(queue[qi]);
        for (int e = 0; e < static_cast<int>(rep.edges.size()); ++e) {
            const DiagEdge& ed = rep.edges[e];
            if (ed.tail / 3 == ed.head / 3) continue; // loop
            if (!ed.color.is_laurent()) continue;     // denominator blocks the gauge
            DiagramSum r = ihx_relation(rep, e);
            if (r.is_zero() || !within_truncation(r, tr)) continue;
            for (const auto& [k2, t2] : r.terms()) enqueue(k2, t2.second);
            basis.insert(r);
        }
    }
    return basis.reduce(d);
}

} // namespace zt
