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
#ifndef ZTILDE_TRACE_HPP
#define ZTILDE_TRACE_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ztilde/cgraph.hpp"
#include "ztilde/complex.hpp"
#include "ztilde/diagram.hpp"
#include "ztilde/multiweight.hpp"

namespace zt {

/* Weighted flow-count data: each entry pairs a C-graph with the multi-variable
 * Laurent weight counting its flow configurations (variable i records the
 * winding of edge i).  The same shape serves two roles: tables whose graphs
 * have degree vector (1,...,1) feed assemble_z; tables with exactly one
 * degree-0 separated edge per graph feed verify_degree_zero_cancellation. */
struct FlowCountTable {
    int k = 0;
    std::string pattern; // "+"/"-" per edge; empty means unspecified
    std::vector<std::pair<CGraph, MultiWeight>> entries;

    bool operator==(const FlowCountTable& o) const {
        return k == o.k && pattern == o.pattern && entries == o.entries;
    }
};

/* Correction data supplied from outside: the anomaly sum (unit colors), the
 * constant mu (defaults to zero with a recorded warning), and the signature
 * term. */
struct AnomalyData {
    DiagramSum z_anom;
    DiagramSum mu;
    bool mu_defaulted = true;
    int sign_w = 0;

    bool operator==(const AnomalyData& o) const {
        return z_anom == o.z_anom && mu == o.mu && mu_defaulted == o.mu_defaulted &&
               sign_w == o.sign_w;
    }
};

/* Anomaly terms live in the closed-diagram space for this k: every term of
 * z_anomaly must have 2k vertices and unit colors, every term of mu 2k
 * vertices.  Throws ValidationError otherwise. */
void validate_anomaly(const AnomalyData& a, int k);

/* Everything one sign pattern contributes to the orientation sum.  complexes
 * and propagators hold one element per edge or a single shared element. */
struct PatternData {
    std::vector<TwistedComplex> complexes;
    std::vector<Propagator> propagators;
    FlowCountTable counts;
    AnomalyData anomaly;
};

/* Trace of an explicitly colored C-graph, scaled by coeff: each separated
 * edge with decorations (p, q) multiplies its color by -E_{qp} (the entry of
 * the endomorphism bound to that edge, requiring ind p - ind q = deg E) and
 * is glued into a single edge from the in attachment to the out attachment;
 * the closed diagram is then normalized.  Throws ValidationError when a
 * decorated pair does not type-check against the endomorphism degree. */
DiagramSum trace_colored(const CGraph& g, const std::vector<RatFn>& colors, const Rational& coeff,
                         const std::vector<TwistedComplex>& cs, const std::vector<Endo>& endos);

/* Q-linear extension: each weight monomial c*t1^n1*...*t_{3k}^n_{3k} colors
   edge i with t^{n_i} and contributes c times its trace. */
DiagramSum trace(const CGraph& g, const MultiWeight& w, const std::vector<TwistedComplex>& cs,
                 const std::vector<Endo>& endos);

/* Weight-side action matching the basis change that multiplies generator p
 * by t^sign: on separated edge `edge`, the weight variable picks up t^{+sign}
 * when the out decoration is p and t^{-sign} when the in decoration is p (a
 * (p, p) edge is untouched).  Tr_{conjugated g}(acted weight) equals
 * Tr_g(original weight). */
MultiWeight sp_weight_action(const CGraph& g, const MultiWeight& w, int edge,
                             const std::string& p, int sign);

/* Sum of traces over a table whose degree vectors are all ones; the error for
   a violating entry names it and the offending edge. */
DiagramSum assemble_z(const FlowCountTable& counts, const std::vector<TwistedComplex>& cs,
                      const std::vector<Propagator>& gs);

/* z - z_anom + sign_w * mu. */
DiagramSum correct_anomaly(const DiagramSum& z, const AnomalyData& a);

/* Sum of corrected traces over all 2^{3k} sign patterns.  Patterns are keyed
 * by their +/- string; all must be present; for each '-' position the
 * pattern's complex must equal the exact reversal of the all-plus pattern's
 * complex in that slot, and '+' positions must match the base complex; all
 * supplied propagator families must satisfy the propagator identity. */
DiagramSum sum_over_orientations(const std::map<std::string, PatternData>& patterns);

/* For each entry of a table whose graphs carry exactly one degree-0
 * separated edge i with decorations (p, q) of equal index j: evaluates the
 * traced sum of boundary-substituted graphs
 *     sum_x d_{xp} (in := x)  +  sum_y d_{qy} (out := y)  +  [p == q] (edge
 * made compact), weighted by the entry, and reports whether every entry's
 * sum normalizes to zero — which the propagator identity forces.  A nonzero
 * total is accumulated into *residual when given. */
bool verify_degree_zero_cancellation(const FlowCountTable& degenerate,
                                     const std::vector<TwistedComplex>& cs,
                                     const std::vector<Propagator>& gs,
                                     DiagramSum* residual = nullptr);

/* True iff assemble_z with the two propagator families differs by an element
 * of the truncated relation span.  The reduced difference lands in *residual
 * when given.  Both families must pass is_propagator. */
bool verify_propagator_independence(const FlowCountTable& counts,
                                    const std::vector<TwistedComplex>& cs,
                                    const std::vector<Propagator>& ga,
                                    const std::vector<Propagator>& gb, const Truncation& tr,
                                    DiagramSum* residual = nullptr);

} // namespace zt

#endif
