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
#ifndef ZTILDE_RATFN_HPP
#define ZTILDE_RATFN_HPP

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ztilde/laurent.hpp"

namespace zt {

/* Element of Q(t), kept in a canonical num/den form:
 *   - den is a genuine polynomial with nonzero constant term, coprime integer
 *     coefficients and positive leading coefficient;
 *   - num is a Laurent polynomial carrying all rational scaling and t-power
 *     units, with its polynomial part coprime to den;
 *   - zero is 0/1.
 * Structural equality is therefore field equality.
 */
class RatFn {
public:
    RatFn() : den_(LaurentPoly::one()) {} // zero
    explicit RatFn(const Rational& c) : num_(c), den_(LaurentPoly::one()) {}
    explicit RatFn(long c) : num_(Rational(c)), den_(LaurentPoly::one()) {}
    explicit RatFn(const LaurentPoly& p) : num_(p), den_(LaurentPoly::one()) {}
    RatFn(const LaurentPoly& num, const LaurentPoly& den); // canonicalizes

    static RatFn one() { return RatFn(Rational(1)); }
    static RatFn t(int exp = 1) { return RatFn(LaurentPoly::t(exp)); }

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    /* True iff the value lies in Q[t, t^-1]. */
    bool is_laurent() const { return den_.is_one(); }
    /* Requires is_laurent(). */
    const LaurentPoly& as_laurent() const;
    /* num is c*t^a and den is 1. */
    bool is_monomial() const { return num_.is_monomial() && den_.is_one(); }

    /* t-adic order: min exponent of num (den has nonzero constant term).
       Throws on zero. */
    int t_order() const { return num_.min_exp(); }

    RatFn operator-() const;
    RatFn operator+(const RatFn& o) const;
    RatFn operator-(const RatFn& o) const;
    RatFn operator*(const RatFn& o) const;
    RatFn operator/(const RatFn& o) const;
    RatFn operator*(const Rational& c) const;
    RatFn& operator+=(const RatFn& o) { return *this = *this + o; }
    RatFn& operator-=(const RatFn& o) { return *this = *this - o; }
    RatFn& operator*=(const RatFn& o) { return *this = *this * o; }
    RatFn& operator/=(const RatFn& o) { return *this = *this / o; }
    bool operator==(const RatFn& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFn& o) const { return !(*this == o); }

    RatFn inverse() const;
    /* The bar involution t -> t^-1. */
    RatFn bar() const;
    /* Multiplication by the unit t^m. */
    RatFn shifted(int m) const;

    /* Crude size surrogate used for elimination pivoting. */
    int complexity() const { return (is_zero() ? 0 : num_.span()) + den_.degree(); }

    /* Q-linear decomposition into "atomic" values: this = sum of c_i * a_i
       with a_i = t^{e_i}/den (unit numerator coefficient).  Empty for zero. */
    std::vector<std::pair<Rational, RatFn>> atoms() const;

    /* Canonical text "(num)/(den)".  parse() also accepts a bare Laurent
       polynomial, meaning den = 1. */
    std::string str() const;
    static RatFn parse(std::string_view text, int line_no = 0);
    static RatFn parse(detail::Scanner& sc);

    /* Total order compatible with the canonical serialization (den first,
       then num); used for deterministic container ordering. */
    static int compare(const RatFn& a, const RatFn& b);
    bool operator<(const RatFn& o) const { return compare(*this, o) < 0; }

private:
    LaurentPoly num_, den_;
    static RatFn raw(LaurentPoly n, LaurentPoly d);
};

inline RatFn operator*(const Rational& c, const RatFn& r) { return r * c; }

} // namespace zt

#endif
