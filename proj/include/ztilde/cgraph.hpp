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
#ifndef ZTILDE_CGRAPH_HPP
#define ZTILDE_CGRAPH_HPP

#include <string>
#include <string_view>
#include <vector>

#include "ztilde/complex.hpp"
#include "ztilde/ratfn.hpp"

namespace zt {

/* Attachment of an edge end to a black vertex: `vertex` is 0-based in
   0..2k-1, `slot` in 0..2 is the position in that vertex's cyclic order of
   incident half-edges (the vertex orientation). */
struct CAttach {
    int vertex = -1;
    int slot = -1;
    bool operator==(const CAttach& o) const { return vertex == o.vertex && slot == o.slot; }
    bool operator!=(const CAttach& o) const { return !(*this == o); }
};

/* One edge of a C-graph, label = 1 + its position in CGraph::edges.
 *
 * Compact: a single oriented interval, attachments tail -> head.
 *
 * Separated: two arcs interrupted by a pair of valence-one white endpoints.
 * The in arc runs from the black attachment `tail` down to the white vertex
 * decorated `in_gen`; the out arc runs from the white vertex decorated
 * `out_gen` up to the black attachment `head`.  Gluing the white pair (as the
 * trace does) therefore produces an edge oriented tail -> head.  A closed
 * edge (tail.vertex == head.vertex) is allowed.
 */
struct CEdge {
    bool separated = false;
    CAttach tail, head;
    std::string in_gen, out_gen; // empty on compact edges

    bool operator==(const CEdge& o) const {
        return separated == o.separated && tail == o.tail && head == o.head &&
               in_gen == o.in_gen && out_gen == o.out_gen;
    }
};

/* Trivalent graph with 2k black vertices, 3k labeled edges, and a cyclic
 * order of the three half-edges at each vertex (encoded by slots). */
struct CGraph {
    int k = 0;
    std::vector<CEdge> edges; // edges[i] has label i+1

    int nv() const { return 2 * k; }
    int ne() const { return static_cast<int>(edges.size()); }

    bool operator==(const CGraph& o) const { return k == o.k && edges == o.edges; }
    bool operator!=(const CGraph& o) const { return !(*this == o); }
};

/* Structural validation: 3k edges, every (vertex, slot) pair filled exactly
   once, decorations present exactly on separated edges, and the underlying
   trivalent graph (each edge read as tail--head) connected.  Throws
   ValidationError. */
void validate_cgraph_structure(const CGraph& g);

/* Structural validation plus the degree vector: compact edges contribute 1,
   separated edge i contributes ind(in_gen) - ind(out_gen) resolved against
   the complex bound to edge i.  `complexes` holds one complex per edge or a
   single complex bound to every edge.  Throws ValidationError. */
std::vector<int> validate_cgraph(const CGraph& g, const std::vector<TwistedComplex>& complexes);

/* Text form.
 *
 *   k: 2
 *   vertex 1: 1t 2t 3i
 *   vertex 2: 1h 2h 3o
 *   edge 1: compact 1.1 2.1
 *   edge 2: compact 1.2 2.2
 *   edge 3: separated in=1.3@a out=2.3@b
 *   color 1: (t)/(1)            (optional; all edges or none)
 *
 * Vertex and edge ids and slots are 1-based in text.  A vertex line lists the
 * names of the half-edges sitting in its slots 1..3 in cyclic order; names
 * are the edge label followed by t (compact tail), h (compact head), i
 * (separated in arc) or o (separated out arc).  The vertex lines and the
 * attachment fields of the edge lines describe the same data and are
 * cross-checked.  Blank lines and lines starting with '#' are skipped.
 */
struct ParsedGraph {
    CGraph graph;
    std::vector<RatFn> colors; // empty when the text had no color lines
};

ParsedGraph parse_graph_text(std::string_view text, int first_line_no = 1);

std::string graph_text(const CGraph& g, const std::vector<RatFn>* colors = nullptr);

} // namespace zt

#endif
