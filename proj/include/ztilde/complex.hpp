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
#ifndef ZTILDE_COMPLEX_HPP
#define ZTILDE_COMPLEX_HPP

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "ztilde/linalg.hpp"
#include "ztilde/matrix.hpp"

namespace zt {

/* Free complex over Q[t,t^-1] concentrated in degrees 0..3, the algebraic
 * shape of a Morse complex twisted by a degree-1 local system on a manifold
 * with first Betti number one.
 *
 * d[i] is the matrix of the boundary C_i -> C_{i-1} acting on row vectors:
 * entry (p, q) is the coefficient of target generator q in the boundary of
 * source generator p.  d[0] is unused and stays empty.
 */
struct TwistedComplex {
    std::array<std::vector<std::string>, 4> gens;
    std::array<Matrix<LaurentPoly>, 4> d;

    int dim(int i) const { return static_cast<int>(gens[i].size()); }
    int total_dim() const { return dim(0) + dim(1) + dim(2) + dim(3); }

    bool has_gen(const std::string& name) const;
    /* (index, position); throws ValidationError for unknown names. */
    std::pair<int, int> find_gen(const std::string& name) const;

    /* Boundary converted to the field; i outside 1..3 gives the zero map of
       the correct shape. */
    Matrix<RatFn> d_ratfn(int i) const;

    bool operator==(const TwistedComplex& o) const { return gens == o.gens && d == o.d; }
};

/* Degree-k endomorphism of a TwistedComplex: m[i] maps C_i -> C_{i+k} and is
 * an empty matrix when the target degree is out of range. */
struct Endo {
    int degree = 0;
    std::array<Matrix<RatFn>, 4> m;

    static Endo zero(const TwistedComplex& c, int degree);
    static Endo identity(const TwistedComplex& c);

    bool operator==(const Endo& o) const { return degree == o.degree && m == o.m; }
};

/* A combinatorial propagator is a degree +1 endomorphism g with dg + gd = 1. */
using Propagator = Endo;

struct ValidationReport {
    bool ok = true;
    std::string message; // empty when ok
};

/* Structural checks: shapes of boundary matrices, generator names unique and
 * well formed, and d∘d = 0. */
ValidationReport validate_complex(const TwistedComplex& c);

/* Acyclicity over the fraction field Q(t): rank d_{i+1} + rank d_i = dim C_i
 * for every i. */
bool check_acyclic(const TwistedComplex& c);

/* delta(g) = d∘g − (−1)^k g∘d for k = deg g; delta∘delta = 0. */
Endo delta(const TwistedComplex& c, const Endo& g);

bool is_propagator(const TwistedComplex& c, const Endo& g);

/* Solves dg + gd = 1 degree by degree; free variables are set to zero.
 * Throws NotAcyclicError when the complex is not acyclic over Q(t). */
Propagator find_propagator(const TwistedComplex& c);

/* Degree-2 h with d∘h − h∘d = g2 − g1, for two propagators of the same
 * complex.  Throws ValidationError when an input is not a propagator. */
Endo propagator_homotopy(const TwistedComplex& c, const Propagator& g1, const Propagator& g2);

/* Basis change induced by sliding the reference hypersurface across the
 * generator p: entries pick up t^{sign} on column p and t^{-sign} on row p.
 * Applies the same conjugation to the complex and the propagator. */
std::pair<TwistedComplex, Propagator> conjugate_by_sp(const TwistedComplex& c,
                                                      const Propagator& g,
                                                      const std::string& p, int sign);

/* Complex of the reversed flow: index i becomes 3-i, boundaries and the
 * propagator become bar-involuted transposes. */
std::pair<TwistedComplex, Propagator> reverse_complex(const TwistedComplex& c,
                                                      const Propagator& g);

/* Degree-0 endomorphism with the single off-diagonal entry coeff at
 * (from, to); from and to must be distinct generators of the same index and
 * coeff must lie in Q[t,t^-1] so the slid boundary stays over the group ring. */
Endo elementary_slide(const TwistedComplex& c, const std::string& from,
                      const std::string& to, const RatFn& coeff);

/* Handle-slide update: d' = (1+h)∘d∘(1−h), g' = (1+h)∘g∘(1−h).  Validates
 * that h is elementary with h² = 0; the returned pair satisfies d'² = 0,
 * d'g' + g'd' = 1, and g' − g = hg − gh exactly. */
std::pair<TwistedComplex, Propagator> handle_slide_update(const TwistedComplex& c,
                                                          const Propagator& g, const Endo& h);

/* Coefficient of each generator in the boundary of the propagator one-chain:
 * for p of index k the value is
 *   −Σ_{ind q = k−1} (−1)^{k−1} g_{qp} d_{pq} + Σ_{ind r = k+1} (−1)^k g_{pr} d_{rp},
 * which equals (−1)^k whenever g is a propagator.  Returned in declared
 * generator order, indices ascending. */
std::vector<std::pair<std::string, RatFn>> boundary_of_O(const TwistedComplex& c,
                                                         const Propagator& g);

/* Checks that the coefficients from (c, g) and from reverse_complex(c, g)
 * cancel generator by generator, i.e. the flow and its reverse assemble to a
 * one-cycle. */
bool verify_O_cycle(const TwistedComplex& c, const Propagator& g);

struct HomologySummary {
    struct Piece {
        int free_rank = 0;
        std::vector<LaurentPoly> torsion; // monic nonunit invariant factors
    };
    std::array<Piece, 4> h;
};

/* Homology as a Q[t,t^-1]-module, computed from Smith normal forms after
 * clearing t-powers columnwise. */
HomologySummary homology_over_lambda(const TwistedComplex& c);

} // namespace zt

#endif
