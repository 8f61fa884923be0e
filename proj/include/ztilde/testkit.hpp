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
#ifndef ZTILDE_TESTKIT_HPP
#define ZTILDE_TESTKIT_HPP

#include <array>
#include <cstdint>
#include <random>
#include <vector>

#include "ztilde/cgraph.hpp"
#include "ztilde/complex.hpp"
#include "ztilde/diagram.hpp"
#include "ztilde/multiweight.hpp"

namespace zt {

/* Seeded generator with hand-rolled reductions: the mt19937_64 stream is
 * pinned by the standard, so identical seeds give identical objects on every
 * platform (std::uniform_int_distribution would not). */
class Rng {
public:
    explicit Rng(uint64_t seed) : eng_(seed) {}

    uint64_t next() { return eng_(); }

    /* uniform-ish in [lo, hi], inclusive */
    int range(int lo, int hi) {
        return lo + static_cast<int>(next() % static_cast<uint64_t>(hi - lo + 1));
    }

    bool chance(int num, int den) { return range(0, den - 1) < num; }

private:
    std::mt19937_64 eng_;
};

Rational random_rational(Rng& rng, int max_abs_num, int max_den);
Rational random_nonzero_rational(Rng& rng, int max_abs_num, int max_den);
LaurentPoly random_laurent(Rng& rng, int max_abs_exp, int max_terms);
LaurentPoly random_nonzero_laurent(Rng& rng, int max_abs_exp, int max_terms);
/* nonzero; denominator degree up to max_den_deg with nonzero constant term */
RatFn random_ratfn(Rng& rng, int max_abs_exp, int max_den_deg);
MultiWeight random_multiweight(Rng& rng, int nvars, int max_abs_exp, int max_terms);

/* Acyclic twisted complex with the given per-index generator counts,
 * produced by conjugating a direct sum of elementary acyclic pairs by random
 * invertible matrices (products of elementary and unit-diagonal factors with
 * tracked exact inverses), plus the transported propagator.  degree_bound
 * caps the number of t-twisted factors per conjugator, each of exponent
 * +/-1, so entries stay within Laurent degree 2*degree_bound.  Throws
 * ValidationError when the sizes admit no acyclic complex. */
std::pair<TwistedComplex, Propagator> random_acyclic_complex(uint64_t seed,
                                                             const std::array<int, 4>& sizes,
                                                             int degree_bound);

/* Random endomorphism of c with small rational-function entries. */
Endo random_endo(Rng& rng, const TwistedComplex& c, int degree);

/* Random trivalent diagram on nv vertices (uniform random pairing of half
 * edges, nonzero random colors); not necessarily connected. */
ColoredDiagram random_diagram(Rng& rng, int nv, int max_abs_exp, int max_den_deg);

/* Random connected C-graph structure; separated edges get syntactically
 * valid placeholder decorations (for parser round-trips only). */
CGraph random_cgraph(Rng& rng, int k);

/* Random connected C-graph resolvable against c: `zero_edges` of its edges
 * are separated with equal-index decorations (degree 0) and the rest are
 * compact or separated with index difference 1 (degree 1).  Falls back to
 * compact edges when c has no suitable generator pair; throws when a
 * degree-0 edge is requested and c is empty. */
CGraph random_cgraph_for_complex(Rng& rng, int k, const TwistedComplex& c, int zero_edges = 0);

/* All connected trivalent multigraph skeletons with 2k vertices, one CGraph
 * (compact edges only) per isomorphism class.  k <= 3. */
std::vector<CGraph> enumerate_trivalent_graphs(int k);

/* Forget decorations: half edge 3*vertex+slot, unit colors. */
ColoredDiagram skeleton_diagram(const CGraph& g);

/* Independent count of the same classes by brute force over all perfect
 * matchings of the 6k half-edge stubs.  k <= 2. */
int count_trivalent_classes_by_matchings(int k);

/* Row-reduced basis of every relation vector that fits in the truncation,
 * generated exhaustively over all skeletons and all monomial colorings; the
 * oracle behind reduce_modulo_ihx.  Requires tr.max_den_deg == 0 (monomial
 * colorings carry no denominators) and k <= 2. */
struct RelationSpanOracle {
    Truncation tr;
    RelationBasis basis;

    bool contains(const DiagramSum& d) const { return basis.reduce(d).is_zero(); }
};

RelationSpanOracle brute_force_relation_span(int k, const Truncation& tr);

} // namespace zt

#endif
