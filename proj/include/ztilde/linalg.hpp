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
#ifndef ZTILDE_LINALG_HPP
#define ZTILDE_LINALG_HPP

#include "ztilde/matrix.hpp"

namespace zt {

struct SolveResult {
    Matrix<RatFn> x;
    bool unique; // false when free variables were set to zero
};

/* Exact solution of M·X = B over Q(t).  Pivots are chosen by lowest
 * num/den degree to limit expression swell; free variables are set to zero,
 * which makes the result deterministic.  Throws NoSolutionError when the
 * system is inconsistent.
 */
SolveResult solve_linear(const Matrix<RatFn>& m, const Matrix<RatFn>& b);

int rank(const Matrix<RatFn>& m);

struct SmithNormalForm {
    Matrix<LaurentPoly> u, d, v; // u*m*v = d
};

/* Smith normal form over Q[t].  Input entries must be genuine polynomials.
 * The diagonal of d is monic with d_i | d_{i+1}; u and v are invertible over
 * Q[t] (their determinants are nonzero rationals).
 */
SmithNormalForm smith_normal_form(const Matrix<LaurentPoly>& m);

} // namespace zt

#endif
