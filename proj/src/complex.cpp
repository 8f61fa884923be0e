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
#include "ztilde/complex.hpp"

#include <set>

namespace zt {

namespace {

int cdim(const TwistedComplex& c, int i) { return (i < 0 || i > 3) ? 0 : c.dim(i); }

/* g's block C_i -> C_{i+deg}, with empty matrices outside 0..3. */
Matrix<RatFn> endo_block(const TwistedComplex& c, const Endo& g, int i) {
    if (i >= 0 && i <= 3) return g.m[i];
    return Matrix<RatFn>(cdim(c, i), cdim(c, i + g.degree));
}

int parity_sign(int k) { return ((k % 2) + 2) % 2 == 0 ? 1 : -1; }

bool valid_name(const std::string& s) {
    if (s.empty()) return false;
    if (!(isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
    for (char ch : s)
        if (!(isalnum(static_cast<unsigned char>(ch)) || ch == '_')) return false;
    return true;
}

} // namespace

bool TwistedComplex::has_gen(const std::string& name) const {
    for (int i = 0; i < 4; ++i)
        for (const auto& g : gens[i])
            if (g == name) return true;
    return false;
}

std::pair<int, int> TwistedComplex::find_gen(const std::string& name) const {
    for (int i = 0; i < 4; ++i)
        for (size_t j = 0; j < gens[i].size(); ++j)
            if (gens[i][j] == name) return {i, static_cast<int>(j)};
    throw ValidationError("unknown generator '" + name + "'");
}

Matrix<RatFn> TwistedComplex::d_ratfn(int i) const {
    if (i >= 1 && i <= 3) return to_ratfn(d[i]);
    return Matrix<RatFn>(cdim(*this, i), cdim(*this, i - 1));
}

Endo Endo::zero(const TwistedComplex& c, int degree) {
    Endo e;
    e.degree = degree;
    for (int i = 0; i < 4; ++i) e.m[i] = Matrix<RatFn>(c.dim(i), cdim(c, i + degree));
    return e;
}

Endo Endo::identity(const TwistedComplex& c) {
    Endo e;
    e.degree = 0;
    for (int i = 0; i < 4; ++i) e.m[i] = Matrix<RatFn>::identity(c.dim(i));
    return e;
}

ValidationReport validate_complex(const TwistedComplex& c) {
    std::set<std::string> seen;
    for (int i = 0; i < 4; ++i)
        for (const auto& g : c.gens[i]) {
            if (!valid_name(g))
                return {false, "bad generator name '" + g + "'"};
            if (!seen.insert(g).second)
                return {false, "duplicate generator name '" + g + "'"};
        }
    if (c.d[0].rows() != 0 || c.d[0].cols() != 0)
        return {false, "boundary[0] must be empty"};
    for (int i = 1; i <= 3; ++i)
        if (c.d[i].rows() != c.dim(i) || c.d[i].cols() != c.dim(i - 1))
            return {false, "boundary[" + std::to_string(i) + "] has shape " +
                               std::to_string(c.d[i].rows()) + "x" + std::to_string(c.d[i].cols()) +
                               ", expected " + std::to_string(c.dim(i)) + "x" +
                               std::to_string(c.dim(i - 1))};
    for (int i = 2; i <= 3; ++i)
        if (!(c.d[i] * c.d[i - 1]).is_zero())
            return {false, "boundary squared is nonzero in degree " + std::to_string(i)};
    return {};
}

bool check_acyclic(const TwistedComplex& c) {
    std::array<int, 5> r{};
    for (int i = 1; i <= 3; ++i) r[i] = rank(c.d_ratfn(i));
    for (int i = 0; i <= 3; ++i)
        if (r[i] + r[i + 1] != c.dim(i)) return false;
    return true;
}

Endo delta(const TwistedComplex& c, const Endo& g) {
    int k = g.degree;
    int sgn = parity_sign(k);
    Endo r = Endo::zero(c, k - 1);
    for (int i = 0; i < 4; ++i) {
        Matrix<RatFn> term = endo_block(c, g, i) * c.d_ratfn(i + k);
        Matrix<RatFn> term2 = c.d_ratfn(i) * endo_block(c, g, i - 1);
        r.m[i] = (sgn == 1) ? term - term2 : term + term2;
    }
    return r;
}

bool is_propagator(const TwistedComplex& c, const Endo& g) {
    if (g.degree != 1) return false;
    for (int i = 0; i < 4; ++i) {
        Matrix<RatFn> lhs =
            g.m[i] * c.d_ratfn(i + 1) + c.d_ratfn(i) * endo_block(c, g, i - 1);
        if (lhs != Matrix<RatFn>::identity(c.dim(i))) return false;
    }
    return true;
}

Propagator find_propagator(const TwistedComplex& c) {
    ValidationReport rep = validate_complex(c);
    if (!rep.ok) throw ValidationError("find_propagator: " + rep.message);

    Propagator g = Endo::zero(c, 1);
    try {
        // n0-by-n1 G0 with G0 d1 = 1
        g.m[0] = solve_linear(c.d_ratfn(1).transpose(),
                              Matrix<RatFn>::identity(c.dim(0))).x.transpose();
        // G1 d2 = 1 − d1 G0
        Matrix<RatFn> r1 = Matrix<RatFn>::identity(c.dim(1)) - c.d_ratfn(1) * g.m[0];
        g.m[1] = solve_linear(c.d_ratfn(2).transpose(), r1.transpose()).x.transpose();
        // G2 d3 = 1 − d2 G1
        Matrix<RatFn> r2 = Matrix<RatFn>::identity(c.dim(2)) - c.d_ratfn(2) * g.m[1];
        g.m[2] = solve_linear(c.d_ratfn(3).transpose(), r2.transpose()).x.transpose();
    } catch (const NoSolutionError&) {
        throw NotAcyclicError("find_propagator: complex is not acyclic over Q(t)");
    }
    // d3 G2 = 1 holds automatically iff ker d3 = 0; surface failures honestly.
    if (!is_propagator(c, g))
        throw NotAcyclicError("find_propagator: complex is not acyclic over Q(t)");
    return g;
}

Endo propagator_homotopy(const TwistedComplex& c, const Propagator& g1, const Propagator& g2) {
    if (!is_propagator(c, g1) || !is_propagator(c, g2))
        throw ValidationError("propagator_homotopy: inputs must both satisfy dg + gd = 1");
    Endo h = Endo::zero(c, 2);
    // e = g2 − g1 is delta-closed of degree 1; solve dh − hd = e degree by degree.
    std::array<Matrix<RatFn>, 4> e;
    for (int i = 0; i < 4; ++i) e[i] = g2.m[i] - g1.m[i];
    // H0 d2 = e0
    h.m[0] = solve_linear(c.d_ratfn(2).transpose(), e[0].transpose()).x.transpose();
    // H1 d3 = e1 + d1 H0
    Matrix<RatFn> r1 = e[1] + c.d_ratfn(1) * h.m[0];
    h.m[1] = solve_linear(c.d_ratfn(3).transpose(), r1.transpose()).x.transpose();
    // degrees 2 and 3 map into C_4, C_5 = 0; the remaining equations follow.
    Endo dh = delta(c, h);
    for (int i = 0; i < 4; ++i)
        if (dh.m[i] != e[i])
            throw NoSolutionError("propagator_homotopy: no homotopy found");
    return h;
}

std::pair<TwistedComplex, Propagator> conjugate_by_sp(const TwistedComplex& c,
                                                      const Propagator& g,
                                                      const std::string& p, int sign) {
    if (sign != 1 && sign != -1) throw ValidationError("conjugate_by_sp: sign must be +1 or -1");
    auto [idx, pos] = c.find_gen(p);
    TwistedComplex cc = c;
    Propagator gg = g;
    for (int i = 1; i <= 3; ++i) {
        if (i == idx) // row p scales by t^{-sign}
            for (int j = 0; j < cc.d[i].cols(); ++j)
                cc.d[i].at(pos, j) = cc.d[i].at(pos, j).shifted(-sign);
        if (i - 1 == idx) // column p scales by t^{sign}
            for (int r = 0; r < cc.d[i].rows(); ++r)
                cc.d[i].at(r, pos) = cc.d[i].at(r, pos).shifted(sign);
    }
    for (int i = 0; i < 4; ++i) {
        if (i == idx)
            for (int j = 0; j < gg.m[i].cols(); ++j)
                gg.m[i].at(pos, j) = gg.m[i].at(pos, j).shifted(-sign);
        if (i + 1 == idx)
            for (int r = 0; r < gg.m[i].rows(); ++r)
                gg.m[i].at(r, pos) = gg.m[i].at(r, pos).shifted(sign);
    }
    return {cc, gg};
}

std::pair<TwistedComplex, Propagator> reverse_complex(const TwistedComplex& c,
                                                      const Propagator& g) {
    TwistedComplex r;
    for (int j = 0; j < 4; ++j) r.gens[j] = c.gens[3 - j];
    for (int j = 1; j <= 3; ++j)
        r.d[j] = c.d[4 - j].transpose().map([](const LaurentPoly& p) { return p.bar(); });
    Propagator rg;
    rg.degree = 1;
    for (int j = 0; j < 4; ++j) {
        int src = 2 - j;
        if (src >= 0 && src <= 2)
            rg.m[j] = g.m[src].transpose().map([](const RatFn& f) { return f.bar(); });
        else
            rg.m[j] = Matrix<RatFn>(r.dim(j), 0);
    }
    return {r, rg};
}

Endo elementary_slide(const TwistedComplex& c, const std::string& from,
                      const std::string& to, const RatFn& coeff) {
    auto [i1, p1] = c.find_gen(from);
    auto [i2, p2] = c.find_gen(to);
    if (i1 != i2) throw ValidationError("elementary_slide: generators must have the same index");
    if (p1 == p2) throw ValidationError("elementary_slide: generators must be distinct");
    if (coeff.is_zero()) throw ValidationError("elementary_slide: zero coefficient");
    if (!coeff.is_laurent())
        throw ValidationError(
            "elementary_slide: coefficient must be a Laurent polynomial so the slid "
            "boundary stays over the group ring");
    Endo h = Endo::zero(c, 0);
    h.m[i1].at(p1, p2) = coeff;
    return h;
}

std::pair<TwistedComplex, Propagator> handle_slide_update(const TwistedComplex& c,
                                                          const Propagator& g, const Endo& h) {
    if (h.degree != 0) throw ValidationError("handle_slide_update: h must have degree 0");
    int nonzero = 0;
    for (int i = 0; i < 4; ++i)
        for (int r = 0; r < h.m[i].rows(); ++r)
            for (int j = 0; j < h.m[i].cols(); ++j)
                if (!h.m[i].at(r, j).is_zero()) {
                    ++nonzero;
                    if (r == j)
                        throw ValidationError("handle_slide_update: h must be off-diagonal");
                    if (!h.m[i].at(r, j).is_laurent())
                        throw ValidationError(
                            "handle_slide_update: slide coefficient must lie in Q[t,t^-1]");
                }
    if (nonzero != 1)
        throw ValidationError("handle_slide_update: h must have exactly one nonzero entry");
    for (int i = 0; i < 4; ++i)
        if (!(h.m[i] * h.m[i]).is_zero())
            throw ValidationError("handle_slide_update: h squared is nonzero");

    std::array<Matrix<RatFn>, 4> plus, minus;
    for (int i = 0; i < 4; ++i) {
        plus[i] = Matrix<RatFn>::identity(c.dim(i)) + h.m[i];
        minus[i] = Matrix<RatFn>::identity(c.dim(i)) - h.m[i];
    }
    TwistedComplex cc = c;
    for (int i = 1; i <= 3; ++i) {
        Matrix<RatFn> nd = minus[i] * c.d_ratfn(i) * plus[i - 1];
        Matrix<LaurentPoly> out(nd.rows(), nd.cols());
        for (int r = 0; r < nd.rows(); ++r)
            for (int j = 0; j < nd.cols(); ++j) out.at(r, j) = nd.at(r, j).as_laurent();
        cc.d[i] = out;
    }
    Propagator gg = g;
    for (int i = 0; i < 4; ++i) {
        Matrix<RatFn> right = (i + 1 <= 3) ? plus[i + 1] : Matrix<RatFn>::identity(0);
        gg.m[i] = minus[i] * g.m[i] * right;
    }

    ValidationReport rep = validate_complex(cc);
    if (!rep.ok) throw ValidationError("handle_slide_update: " + rep.message);
    if (!is_propagator(cc, gg))
        throw ValidationError("handle_slide_update: slid propagator failed dg + gd = 1");
    return {cc, gg};
}

std::vector<std::pair<std::string, RatFn>> boundary_of_O(const TwistedComplex& c,
                                                         const Propagator& g) {
    std::vector<std::pair<std::string, RatFn>> out;
    for (int k = 0; k < 4; ++k) {
        Matrix<RatFn> dk = c.d_ratfn(k);       // C_k -> C_{k-1}
        Matrix<RatFn> dk1 = c.d_ratfn(k + 1);  // C_{k+1} -> C_k
        Matrix<RatFn> gdown = endo_block(c, g, k - 1); // C_{k-1} -> C_k
        Matrix<RatFn> gup = endo_block(c, g, k);       // C_k -> C_{k+1}
        int s = parity_sign(k);
        for (int p = 0; p < c.dim(k); ++p) {
            RatFn acc;
            for (int q = 0; q < cdim(c, k - 1); ++q)
                acc -= Rational(-s) * gdown.at(q, p) * dk.at(p, q);
            for (int r = 0; r < cdim(c, k + 1); ++r)
                acc += Rational(s) * gup.at(p, r) * dk1.at(r, p);
            out.emplace_back(c.gens[k][p], acc);
        }
    }
    return out;
}

bool verify_O_cycle(const TwistedComplex& c, const Propagator& g) {
    auto fwd = boundary_of_O(c, g);
    auto [rc, rg] = reverse_complex(c, g);
    auto bwd = boundary_of_O(rc, rg);
    if (fwd.size() != bwd.size()) return false;
    for (const auto& [name, coeff] : fwd) {
        bool found = false;
        for (const auto& [rname, rcoeff] : bwd)
            if (rname == name) {
                if (!(coeff + rcoeff).is_zero()) return false;
                found = true;
                break;
            }
        if (!found) return false;
    }
    return true;
}

HomologySummary homology_over_lambda(const TwistedComplex& c) {
    HomologySummary out;
    std::array<int, 5> r{};
    for (int i = 1; i <= 3; ++i) r[i] = rank(c.d_ratfn(i));
    for (int i = 0; i <= 3; ++i) {
        auto& piece = out.h[i];
        piece.free_rank = c.dim(i) - r[i] - r[i + 1];
        if (i + 1 <= 3) {
            Matrix<LaurentPoly> pres = c.d[i + 1];
            for (int j = 0; j < pres.cols(); ++j) {
                int mn = 0;
                bool nonzero = false;
                for (int rr = 0; rr < pres.rows(); ++rr)
                    if (!pres.at(rr, j).is_zero()) {
                        int e = pres.at(rr, j).min_exp();
                        mn = nonzero ? std::min(mn, e) : e;
                        nonzero = true;
                    }
                if (nonzero && mn != 0)
                    for (int rr = 0; rr < pres.rows(); ++rr)
                        pres.at(rr, j) = pres.at(rr, j).shifted(-mn);
            }
            SmithNormalForm snf = smith_normal_form(pres);
            int n = std::min(snf.d.rows(), snf.d.cols());
            for (int k = 0; k < n; ++k) {
                LaurentPoly dk = snf.d.at(k, k);
                if (dk.is_zero()) continue;
                dk = dk.shifted(-dk.min_exp()); // units t^a drop out over Q[t,t^-1]
                if (!dk.is_one()) piece.torsion.push_back(dk);
            }
        }
    }
    return out;
}

} // namespace zt
