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
#ifndef ZTILDE_LAURENT_HPP
#define ZTILDE_LAURENT_HPP

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ztilde/rational.hpp"

namespace zt {

namespace detail { struct Scanner; }

/* Element of Q[t, t^-1].  Terms are kept sorted by exponent with no zero
 * coefficients, so operator== is exact ring equality and str() is canonical.
 *
 * Instances are immutable values in practice: every operation returns a new
 * polynomial, and nothing here mutates shared state.
 */
class LaurentPoly {
public:
    using Term = std::pair<int, Rational>; // (exponent, coefficient)

    LaurentPoly() = default; // zero
    explicit LaurentPoly(const Rational& c) { if (c != 0) terms_.emplace_back(0, c); }
    explicit LaurentPoly(long c) : LaurentPoly(Rational(c)) {}
    LaurentPoly(const Rational& c, int exp) { if (c != 0) terms_.emplace_back(exp, c); }

    static LaurentPoly t(int exp = 1) { return LaurentPoly(Rational(1), exp); }
    static LaurentPoly one() { return LaurentPoly(Rational(1)); }

    /* Builds from arbitrary (exponent, coefficient) pairs, merging duplicates. */
    static LaurentPoly from_terms(std::vector<Term> raw);

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const { return terms_.size() == 1 && terms_[0].first == 0 && terms_[0].second == 1; }
    bool is_monomial() const { return terms_.size() == 1; }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 0); }
    /* All exponents >= 0 (true for zero). */
    bool is_polynomial() const { return terms_.empty() || terms_.front().first >= 0; }

    int min_exp() const; // throws on zero
    int max_exp() const; // throws on zero
    int span() const { return is_zero() ? 0 : max_exp() - min_exp(); }
    /* Degree as a genuine polynomial; -1 for zero. */
    int degree() const { return is_zero() ? -1 : max_exp(); }

    Rational coeff(int exp) const;
    Rational leading_coeff() const; // coefficient of max_exp; throws on zero
    const std::vector<Term>& terms() const { return terms_; }

    LaurentPoly operator-() const;
    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly operator*(const Rational& c) const;
    LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
    LaurentPoly& operator-=(const LaurentPoly& o) { return *this = *this - o; }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
    bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    /* The bar involution t -> t^-1. */
    LaurentPoly bar() const;
    /* Multiplication by the unit t^m. */
    LaurentPoly shifted(int m) const;

    /* --- genuine-polynomial helpers (throw ValidationError if an operand has
       a negative exponent) --- */

    /* Euclidean division a = q*b + r with deg r < deg b. */
    static void divmod(const LaurentPoly& a, const LaurentPoly& b, LaurentPoly& q, LaurentPoly& r);
    /* Monic gcd in Q[t]; gcd(0,0) = 0. */
    static LaurentPoly gcd(LaurentPoly a, LaurentPoly b);
    /* True iff b divides a exactly in Q[t]. */
    static bool divides(const LaurentPoly& b, const LaurentPoly& a);

    /* Positive rational c with this = c * (coprime-integer-coefficient poly).
       Throws on zero. */
    Rational content() const;
    /* this = factor * result, result with coprime integer coefficients and a
       positive leading coefficient.  Throws on zero. */
    LaurentPoly primitive_integer_form(Rational& factor) const;

    /* Canonical text: terms in increasing exponent order, e.g. "-2/3*t^-1 + 1 + t^2". */
    std::string str() const;
    static LaurentPoly parse(std::string_view text, int line_no = 0);
    /* Parser entry point for embedding in larger grammars. */
    static LaurentPoly parse(detail::Scanner& sc);

private:
    std::vector<Term> terms_;
    void strip_zeros();
};

inline LaurentPoly operator*(const Rational& c, const LaurentPoly& p) { return p * c; }

} // namespace zt

#endif
