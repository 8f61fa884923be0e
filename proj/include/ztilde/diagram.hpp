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
#ifndef ZTILDE_DIAGRAM_HPP
#define ZTILDE_DIAGRAM_HPP

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ztilde/ratfn.hpp"

namespace zt {

/* Closed trivalent diagram with oriented, Q(t)-colored edges and vertex
 * orientations.  Vertex v owns the half-edges 3v, 3v+1, 3v+2; their numeric
 * order is the cyclic order at v.  Every half-edge is used by exactly one
 * edge end; loops (tail and head at one vertex) are allowed; connectivity is
 * not required.
 */
struct DiagEdge {
    int tail = -1, head = -1; // half-edge ids
    RatFn color;

    bool operator==(const DiagEdge& o) const {
        return tail == o.tail && head == o.head && color == o.color;
    }
};

struct ColoredDiagram {
    int nv = 0;
    std::vector<DiagEdge> edges;

    bool operator==(const ColoredDiagram& o) const { return nv == o.nv && edges == o.edges; }
    bool operator!=(const ColoredDiagram& o) const { return !(*this == o); }
};

/* Shape checks (ids in range, each half-edge used exactly once).  Throws
   ValidationError. */
void validate_diagram(const ColoredDiagram& d);

/* Multiplies the colors of the edges at black vertex v by t^{n·eps}, eps = +1
   for an end pointing into v, -1 for an end leaving v (a loop at v is
   untouched).  The canonical form is unchanged. */
ColoredDiagram holonomy_move(const ColoredDiagram& d, int v, int n);

/* Reverses edge e, replacing its color by the bar involution.  The canonical
   form is unchanged. */
ColoredDiagram flip_edge(const ColoredDiagram& d, int e);

/* Canonical form of a diagram whose colors are atomic (numerator a monomial
 * t^a with coefficient exactly 1, denominator canonical): the class of the
 * input equals sign times the class of rep, where rep realizes the
 * lexicographically least serialization over all vertex relabelings, loop
 * reorientations and orderings of parallel edges, with non-loop edges
 * oriented small vertex -> large vertex, holonomy gauge-fixed along a
 * deterministic spanning forest, and vertex orientations in reference
 * position (anti-symmetry tracked in the sign).  sign == 0 means the diagram
 * is identified with its own negative and is zero in the quotient.
 */
struct CanonicalForm {
    int sign = 0;
    std::string key;
    ColoredDiagram rep;
};

CanonicalForm canonicalize(const ColoredDiagram& d);

/* Finite Q-linear combination of canonical diagrams, keyed by their
 * canonical serialization; no zero coefficients.  This represents an element
 * of the diagram space modulo anti-symmetry, orientation reversal, holonomy
 * and Q-linearity of colors; IHX is handled separately by
 * reduce_modulo_ihx. */
class DiagramSum {
public:
    using Terms = std::map<std::string, std::pair<Rational, ColoredDiagram>>;

    DiagramSum() = default;

    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }
    const Terms& terms() const { return terms_; }

    /* coeff * (the class encoded by cf); no-op when cf.sign == 0 or coeff
       vanishes after accumulation. */
    void add_canonical(const Rational& coeff, const CanonicalForm& cf);

    DiagramSum operator-() const;
    DiagramSum operator+(const DiagramSum& o) const;
    DiagramSum operator-(const DiagramSum& o) const;
    DiagramSum operator*(const Rational& c) const;
    DiagramSum& operator+=(const DiagramSum& o);
    DiagramSum& operator-=(const DiagramSum& o);
    bool operator==(const DiagramSum& o) const;
    bool operator!=(const DiagramSum& o) const { return !(*this == o); }

    /* One term per line, in key order:
     *   -2/3 * graph{2; 0>1, 0>1, 0>1} colors{(1)/(1), (t^2)/(1), (1)/(t - 1)}
     * Zero is the single line "0".  parse() re-normalizes every term, so
     * hand-edited files land in canonical form. */
    std::string str() const;
    static DiagramSum parse(std::string_view text, int first_line_no = 1);

private:
    Terms terms_;
};

/* normalize: expand colors Q-linearly into atomic parts, canonicalize each
   piece and collect.  Zero colors kill their term. */
DiagramSum normalize_diagram(const ColoredDiagram& d, const Rational& coeff = Rational(1));

/* Truncated coloring space: every atomic color t^a/q must satisfy
   |a| <= max_abs_exp and deg q <= max_den_deg. */
struct Truncation {
    int max_abs_exp = 0;
    int max_den_deg = 0;
};

bool within_truncation(const RatFn& color, const Truncation& tr);
bool within_truncation(const ColoredDiagram& d, const Truncation& tr);
bool within_truncation(const DiagramSum& d, const Truncation& tr);

/* Tightest truncation that contains every color of d. */
Truncation containing_truncation(const DiagramSum& d);

/* Three-term relation at a compact edge e = (u -> v, color c·t^m with unit
 * denominator) joining distinct vertices: returns I' - H + X, where I' is d
 * gauge-shifted so e carries the constant color c, and H, X re-pair the four
 * strands adjacent to e according to the local relation.  The returned sum
 * is zero in the full quotient.  Throws ValidationError when e is a loop or
 * its color has a nontrivial denominator. */
DiagramSum ihx_relation(const ColoredDiagram& d, int e);

/* Exact reduced-row-echelon span of relation rows over Q, with variables the
 * canonical keys in lex order.  Insertion order never changes the final
 * basis. */
class RelationBasis {
public:
    void insert(const DiagramSum& row);
    DiagramSum reduce(const DiagramSum& d) const;
    size_t rank() const { return rows_.size(); }
    const std::vector<DiagramSum>& rows() const { return rows_; }

private:
    std::vector<DiagramSum> rows_; // sorted by leading key, pairwise reduced
};

/* Deterministic representative of d in the quotient by all IHX relations
 * whose terms stay inside the truncation: relations are generated by closure
 * from the support of d, row-reduced exactly, and d is reduced against them.
 * Throws ValidationError when d itself does not fit in the truncation. */
DiagramSum reduce_modulo_ihx(const DiagramSum& d, const Truncation& tr);

} // namespace zt

#endif
