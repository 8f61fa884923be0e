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
#include "ztilde/linalg.hpp"

#include <utility>
#include <vector>

namespace zt {

namespace {

/* Row-reduce [M|B] in place.  Returns pivot (row, col) pairs in elimination
   order.  Columns >= ncols_m are never used as pivots. */
std::vector<std::pair<int, int>> reduce_augmented(Matrix<RatFn>& a, int ncols_m) {
    int m = a.rows();
    std::vector<bool> row_used(m, false), col_used(ncols_m, false);
    std::vector<std::pair<int, int>> pivots;
    for (;;) {
        int best_i = -1, best_j = -1, best_c = 0;
        for (int j = 0; j < ncols_m; ++j) {
            if (col_used[j]) continue;
            for (int i = 0; i < m; ++i) {
                if (row_used[i] || a.at(i, j).is_zero()) continue;
                int c = a.at(i, j).complexity();
                if (best_i < 0 || c < best_c) { best_i = i; best_j = j; best_c = c; }
            }
        }
        if (best_i < 0) break;
        row_used[best_i] = true;
        col_used[best_j] = true;
        pivots.emplace_back(best_i, best_j);
        RatFn inv = a.at(best_i, best_j).inverse();
        for (int j = 0; j < a.cols(); ++j)
            if (!a.at(best_i, j).is_zero()) a.at(best_i, j) *= inv;
        for (int i = 0; i < m; ++i) {
            if (i == best_i) continue;
            RatFn f = a.at(i, best_j);
            if (f.is_zero()) continue;
            for (int j = 0; j < a.cols(); ++j) {
                const RatFn& p = a.at(best_i, j);
                if (!p.is_zero()) a.at(i, j) -= f * p;
            }
        }
    }
    return pivots;
}

} // namespace

SolveResult solve_linear(const Matrix<RatFn>& m, const Matrix<RatFn>& b) {
    if (m.rows() != b.rows()) throw ValidationError("solve_linear: row count mismatch");
    int n = m.cols(), k = b.cols();
    Matrix<RatFn> a(m.rows(), n + k);
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < n; ++j) a.at(i, j) = m.at(i, j);
        for (int j = 0; j < k; ++j) a.at(i, n + j) = b.at(i, j);
    }
    auto pivots = reduce_augmented(a, n);
    std::vector<bool> row_used(m.rows(), false);
    for (auto& [i, j] : pivots) row_used[i] = true;
    for (int i = 0; i < m.rows(); ++i) {
        if (row_used[i]) continue;
        for (int j = 0; j < k; ++j)
            if (!a.at(i, n + j).is_zero())
                throw NoSolutionError("solve_linear: inconsistent system");
    }
    Matrix<RatFn> x(n, k);
    for (auto& [i, j] : pivots)
        for (int c = 0; c < k; ++c) x.at(j, c) = a.at(i, n + c);
    return SolveResult{std::move(x), static_cast<int>(pivots.size()) == n};
}

int rank(const Matrix<RatFn>& m) {
    Matrix<RatFn> a = m;
    return static_cast<int>(reduce_augmented(a, m.cols()).size());
}

namespace {

void swap_rows(Matrix<LaurentPoly>& a, int i, int j) {
    if (i == j) return;
    for (int c = 0; c < a.cols(); ++c) std::swap(a.at(i, c), a.at(j, c));
}

void swap_cols(Matrix<LaurentPoly>& a, int i, int j) {
    if (i == j) return;
    for (int r = 0; r < a.rows(); ++r) std::swap(a.at(r, i), a.at(r, j));
}

/* row_i -= q * row_k */
void row_sub(Matrix<LaurentPoly>& a, int i, int k, const LaurentPoly& q) {
    for (int c = 0; c < a.cols(); ++c)
        if (!a.at(k, c).is_zero()) a.at(i, c) -= q * a.at(k, c);
}

void col_sub(Matrix<LaurentPoly>& a, int j, int k, const LaurentPoly& q) {
    for (int r = 0; r < a.rows(); ++r)
        if (!a.at(r, k).is_zero()) a.at(r, j) -= q * a.at(r, k);
}

} // namespace

SmithNormalForm smith_normal_form(const Matrix<LaurentPoly>& m_in) {
    for (int i = 0; i < m_in.rows(); ++i)
        for (int j = 0; j < m_in.cols(); ++j)
            if (!m_in.at(i, j).is_polynomial())
                throw ValidationError("smith_normal_form: entries must be polynomials in t");

    SmithNormalForm s{Matrix<LaurentPoly>::identity(m_in.rows()), m_in,
                      Matrix<LaurentPoly>::identity(m_in.cols())};
    Matrix<LaurentPoly>& a = s.d;
    int nr = a.rows(), nc = a.cols();

    for (int k = 0; k < nr && k < nc; ++k) {
        // pick lowest-degree nonzero pivot in the remaining block
        int pi = -1, pj = -1;
        for (int i = k; i < nr; ++i)
            for (int j = k; j < nc; ++j) {
                if (a.at(i, j).is_zero()) continue;
                if (pi < 0 || a.at(i, j).degree() < a.at(pi, pj).degree()) { pi = i; pj = j; }
            }
        if (pi < 0) break; // remaining block is zero
        swap_rows(a, k, pi); swap_rows(s.u, k, pi);
        swap_cols(a, k, pj); swap_cols(s.v, k, pj);

        for (bool stable = false; !stable;) {
            stable = true;
            for (int i = k + 1; i < nr; ++i) {
                if (a.at(i, k).is_zero()) continue;
                LaurentPoly q, r;
                LaurentPoly::divmod(a.at(i, k), a.at(k, k), q, r);
                row_sub(a, i, k, q); row_sub(s.u, i, k, q);
                if (!r.is_zero()) { // remainder has smaller degree: make it the pivot
                    swap_rows(a, k, i); swap_rows(s.u, k, i);
                    stable = false;
                }
            }
            for (int j = k + 1; j < nc; ++j) {
                if (a.at(k, j).is_zero()) continue;
                LaurentPoly q, r;
                LaurentPoly::divmod(a.at(k, j), a.at(k, k), q, r);
                col_sub(a, j, k, q); col_sub(s.v, j, k, q);
                if (!r.is_zero()) {
                    swap_cols(a, k, j); swap_cols(s.v, k, j);
                    stable = false;
                }
            }
            if (!stable) continue;
            // pivot must divide the rest of the block for the divisibility chain
            bool fixed = false;
            for (int i = k + 1; i < nr && !fixed; ++i)
                for (int j = k + 1; j < nc && !fixed; ++j)
                    if (!LaurentPoly::divides(a.at(k, k), a.at(i, j))) {
                        row_sub(a, k, i, LaurentPoly(Rational(-1)));
                        row_sub(s.u, k, i, LaurentPoly(Rational(-1)));
                        fixed = true;
                    }
            if (fixed) stable = false;
        }
        // monic pivot
        Rational lc = a.at(k, k).leading_coeff();
        if (lc != 1) {
            Rational inv = Rational(1) / lc;
            for (int c = 0; c < nc; ++c) a.at(k, c) = a.at(k, c) * inv;
            for (int c = 0; c < s.u.cols(); ++c) s.u.at(k, c) = s.u.at(k, c) * inv;
        }
    }
    return s;
}

} // namespace zt
