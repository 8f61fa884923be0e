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
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ztilde/complex.hpp"
#include "ztilde/io.hpp"
#include "ztilde/testkit.hpp"

using namespace zt;

namespace {

// 0 -> Lambda --(t-1)--> Lambda -> 0 in indices 1, 0.
TwistedComplex circle_complex() {
    TwistedComplex c;
    c.gens[0] = {"q"};
    c.gens[1] = {"p"};
    c.d[1] = Matrix<LaurentPoly>(1, 1);
    c.d[1].at(0, 0) = LaurentPoly::parse("-1 + t");
    c.d[2] = Matrix<LaurentPoly>(0, 1);
    c.d[3] = Matrix<LaurentPoly>(0, 0);
    return c;
}

Endo sample_propagator(uint64_t seed, const std::array<int, 4>& sizes, TwistedComplex& c) {
    auto [cc, g] = random_acyclic_complex(seed, sizes, 1);
    c = cc;
    return g;
}

} // namespace

TEST_CASE("validate_complex accepts the circle and rejects malformed data") {
    TwistedComplex c = circle_complex();
    CHECK(validate_complex(c).ok);
    CHECK(check_acyclic(c));

    SUBCASE("shape mismatch") {
        c.d[1] = Matrix<LaurentPoly>(2, 1);
        CHECK(!validate_complex(c).ok);
    }
    SUBCASE("duplicate generator names") {
        c.gens[1] = {"q"};
        CHECK(!validate_complex(c).ok);
    }
    SUBCASE("dd != 0") {
        TwistedComplex b;
        b.gens[0] = {"a"};
        b.gens[1] = {"b"};
        b.gens[2] = {"c"};
        b.d[1] = Matrix<LaurentPoly>(1, 1);
        b.d[1].at(0, 0) = LaurentPoly::one();
        b.d[2] = Matrix<LaurentPoly>(1, 1);
        b.d[2].at(0, 0) = LaurentPoly::one();
        b.d[3] = Matrix<LaurentPoly>(0, 1);
        ValidationReport r = validate_complex(b);
        CHECK(!r.ok);
        CHECK(r.message.find("d") != std::string::npos);
    }
}

TEST_CASE("acyclicity is a field-rank condition") {
    TwistedComplex c;
    c.gens[0] = {"a"};
    c.gens[1] = {"b"};
    c.d[1] = Matrix<LaurentPoly>(1, 1); // zero boundary: not acyclic
    c.d[2] = Matrix<LaurentPoly>(0, 1);
    c.d[3] = Matrix<LaurentPoly>(0, 0);
    CHECK(validate_complex(c).ok);
    CHECK(!check_acyclic(c));
    CHECK_THROWS_AS(find_propagator(c), NotAcyclicError);

    // empty complex is acyclic
    TwistedComplex e;
    e.d[3] = Matrix<LaurentPoly>(0, 0);
    CHECK(check_acyclic(e));
}

TEST_CASE("find_propagator solves dg + gd = 1 on the circle") {
    TwistedComplex c = circle_complex();
    Propagator g = find_propagator(c);
    CHECK(g.degree == 1);
    CHECK(is_propagator(c, g));
    CHECK(g.m[0].at(0, 0) == RatFn::parse("(1)/(-1 + t)"));
}

TEST_CASE("propagator identity on seeded complexes") {
    for (uint64_t seed = 1; seed <= 25; ++seed) {
        std::array<int, 4> sizes{2, 4, 4, 2};
        auto [c, g] = random_acyclic_complex(seed, sizes, 2);
        CHECK(validate_complex(c).ok);
        CHECK(check_acyclic(c));
        CHECK(is_propagator(c, g));
        Propagator g2 = find_propagator(c);
        CHECK(is_propagator(c, g2));
    }
}

TEST_CASE("delta squares to zero and detects non-propagators") {
    Rng rng(21);
    TwistedComplex c;
    Endo g0 = sample_propagator(31, {1, 3, 3, 1}, c);
    for (int degree = -3; degree <= 3; ++degree) {
        for (int it = 0; it < 10; ++it) {
            Endo e = random_endo(rng, c, degree);
            Endo de = delta(c, e);
            CHECK(de.degree == degree - 1);
            CHECK(delta(c, de) == Endo::zero(c, degree - 2));
        }
    }
    // is_propagator means delta(g) vanishes against the identity shift
    CHECK(is_propagator(c, g0));
    Endo bad = g0;
    bad.m[0].at(0, 0) += RatFn::one();
    CHECK(!is_propagator(c, bad));
}

TEST_CASE("propagator_homotopy connects two propagators") {
    TwistedComplex c;
    Endo g1 = sample_propagator(32, {2, 3, 3, 2}, c);
    Endo g2 = find_propagator(c);
    Endo h = propagator_homotopy(c, g1, g2);
    CHECK(h.degree == 2);
    Endo dh = delta(c, h);
    for (int i = 0; i < 4; ++i) CHECK(dh.m[i] == (g2.m[i] - g1.m[i]));

    Endo notg = g1;
    notg.m[1].at(0, 0) += RatFn::t(1);
    CHECK_THROWS_AS(propagator_homotopy(c, g1, notg), ValidationError);
}

TEST_CASE("boundary coefficients are (-1)^index and assemble to a cycle") {
    for (uint64_t seed = 40; seed < 48; ++seed) {
        TwistedComplex c;
        Endo g = sample_propagator(seed, {2, 3, 3, 2}, c);
        auto coeffs = boundary_of_O(c, g);
        CHECK(coeffs.size() == size_t(c.total_dim()));
        size_t at = 0;
        for (int k = 0; k < 4; ++k)
            for (int p = 0; p < c.dim(k); ++p, ++at) {
                CHECK(coeffs[at].first == c.gens[k][p]);
                CHECK(coeffs[at].second == RatFn(Rational(k % 2 ? -1 : 1)));
            }
        CHECK(verify_O_cycle(c, g));
    }
}

TEST_CASE("corrupting a boundary-visible propagator entry breaks the cycle") {
    for (uint64_t seed = 50; seed < 56; ++seed) {
        TwistedComplex c;
        Endo g = sample_propagator(seed, {2, 3, 3, 2}, c);
        int flipped = 0, tried = 0;
        for (int j = 0; j < 3; ++j) {
            Matrix<RatFn> dj1 = c.d_ratfn(j + 1);
            for (int x = 0; x < c.dim(j); ++x)
                for (int y = 0; y < c.dim(j + 1); ++y) {
                    if (dj1.at(y, x).is_zero()) continue;
                    // t^m * entry must not be bar-invariant; m = 0 or 1 works
                    const LaurentPoly& d = dj1.at(y, x).num();
                    int m = (d == d.bar()) ? 1 : 0;
                    Endo bad = g;
                    bad.m[j].at(x, y) += RatFn(LaurentPoly(Rational(1), m));
                    ++tried;
                    if (!verify_O_cycle(c, bad)) ++flipped;
                }
        }
        CHECK(tried > 0);
        CHECK(flipped == tried);
    }
}

TEST_CASE("reverse_complex is an involution preserving all structure") {
    for (uint64_t seed = 60; seed < 68; ++seed) {
        TwistedComplex c;
        Endo g = sample_propagator(seed, {1, 4, 4, 1}, c);
        auto [rc, rg] = reverse_complex(c, g);
        CHECK(validate_complex(rc).ok);
        CHECK(check_acyclic(rc));
        CHECK(is_propagator(rc, rg));
        for (int i = 0; i < 4; ++i) CHECK(rc.dim(i) == c.dim(3 - i));
        auto [cc, gg] = reverse_complex(rc, rg);
        CHECK(cc == c);
        CHECK(gg == g);
    }
}

TEST_CASE("basis rescaling conjugation") {
    for (uint64_t seed = 70; seed < 76; ++seed) {
        TwistedComplex c;
        Endo g = sample_propagator(seed, {2, 3, 3, 2}, c);
        for (int sign : {1, -1}) {
            const std::string p = c.gens[1][0];
            auto [c2, g2] = conjugate_by_sp(c, g, p, sign);
            CHECK(validate_complex(c2).ok);
            CHECK(is_propagator(c2, g2));
            // undo
            auto [c3, g3] = conjugate_by_sp(c2, g2, p, -sign);
            CHECK(c3 == c);
            CHECK(g3 == g);
            // the complex genuinely changes when p has incident boundary
            if (!(c2 == c)) CHECK(c2.gens == c.gens);
        }
        CHECK_THROWS_AS(conjugate_by_sp(c, g, "no_such_gen", 1), ValidationError);
    }
}

TEST_CASE("handle slides update the propagator by the exact commutator") {
    Rng rng(22);
    for (uint64_t seed = 80; seed < 92; ++seed) {
        TwistedComplex c;
        Endo g = sample_propagator(seed, {2, 3, 3, 2}, c);
        // random same-index pair and Laurent coefficient
        int idx = rng.range(0, 3);
        if (c.dim(idx) < 2) idx = 1;
        int a = rng.range(0, c.dim(idx) - 1);
        int b = rng.range(0, c.dim(idx) - 1);
        if (a == b) b = (b + 1) % c.dim(idx);
        RatFn coeff = RatFn(random_nonzero_laurent(rng, 2, 3));
        Endo h = elementary_slide(c, c.gens[idx][a], c.gens[idx][b], coeff);
        CHECK(h.degree == 0);

        auto [c2, g2] = handle_slide_update(c, g, h);
        CHECK(validate_complex(c2).ok);
        CHECK(is_propagator(c2, g2));
        // g' - g = hg - gh, blockwise
        for (int i = 0; i < 4; ++i) {
            Matrix<RatFn> hg = (i < 3) ? g.m[i] * h.m[i + 1] : Matrix<RatFn>(c.dim(3), 0);
            Matrix<RatFn> gh = h.m[i] * g.m[i];
            CHECK(g2.m[i] - g.m[i] == hg - gh);
        }
    }

    TwistedComplex c = circle_complex();
    Propagator g = find_propagator(c);
    CHECK_THROWS_AS(elementary_slide(c, "p", "p", RatFn::one()), ValidationError);
    CHECK_THROWS_AS(elementary_slide(c, "p", "q", RatFn::one()), ValidationError);
}

TEST_CASE("homology over the Laurent ring") {
    SUBCASE("circle: H0 is torsion (t - 1)") {
        HomologySummary h = homology_over_lambda(circle_complex());
        CHECK(h.h[0].free_rank == 0);
        REQUIRE(h.h[0].torsion.size() == 1);
        CHECK(h.h[0].torsion[0] == LaurentPoly::parse("-1 + t"));
        for (int i = 1; i < 4; ++i) {
            CHECK(h.h[i].free_rank == 0);
            CHECK(h.h[i].torsion.empty());
        }
    }
    SUBCASE("zero boundaries give free pieces") {
        TwistedComplex c;
        c.gens[0] = {"a"};
        c.gens[3] = {"z"};
        c.d[1] = Matrix<LaurentPoly>(0, 1);
        c.d[3] = Matrix<LaurentPoly>(0, 0);
        HomologySummary h = homology_over_lambda(c);
        CHECK(h.h[0].free_rank == 1);
        CHECK(h.h[3].free_rank == 1);
        CHECK(h.h[1].free_rank == 0);
        CHECK(h.h[0].torsion.empty());
    }
    SUBCASE("unit boundary kills homology") {
        TwistedComplex c = circle_complex();
        c.d[1].at(0, 0) = LaurentPoly::parse("2*t^3"); // a unit of the Laurent ring
        HomologySummary h = homology_over_lambda(c);
        for (int i = 0; i < 4; ++i) {
            CHECK(h.h[i].free_rank == 0);
            CHECK(h.h[i].torsion.empty());
        }
    }
    SUBCASE("acyclic complexes have trivial field homology but may carry torsion") {
        for (uint64_t seed = 95; seed < 99; ++seed) {
            TwistedComplex c;
            sample_propagator(seed, {2, 3, 3, 2}, c);
            HomologySummary h = homology_over_lambda(c);
            for (int i = 0; i < 4; ++i) CHECK(h.h[i].free_rank == 0);
        }
    }
}

TEST_CASE("generator lookup") {
    TwistedComplex c = circle_complex();
    CHECK(c.has_gen("p"));
    CHECK(!c.has_gen("r"));
    auto [idx, pos] = c.find_gen("p");
    CHECK(idx == 1);
    CHECK(pos == 0);
    CHECK_THROWS_AS(c.find_gen("r"), ValidationError);
}

TEST_CASE("infeasible size vectors are rejected") {
    CHECK_THROWS_AS(random_acyclic_complex(1, {1, 0, 0, 0}, 1), ValidationError);
    CHECK_THROWS_AS(random_acyclic_complex(1, {0, 0, 1, 0}, 1), ValidationError);
    CHECK_THROWS_AS(random_acyclic_complex(1, {2, 1, 0, 0}, 1), ValidationError);
    // all-empty is fine
    auto [c, g] = random_acyclic_complex(1, {0, 0, 0, 0}, 1);
    CHECK(c.total_dim() == 0);
    CHECK(is_propagator(c, g));
}
