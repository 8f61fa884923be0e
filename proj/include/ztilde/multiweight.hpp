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
#ifndef ZTILDE_MULTIWEIGHT_HPP
#define ZTILDE_MULTIWEIGHT_HPP

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "ztilde/laurent.hpp"

namespace zt {

/* Element of the n-fold Laurent tensor ring Q[t1^±1, ..., tn^±1]: a finitely
 * supported map from exponent vectors (length n) to rationals.  Terms are
 * stored in lexicographic exponent order, giving canonical serialization.
 */
class MultiWeight {
public:
    explicit MultiWeight(int nvars = 0) : nvars_(nvars) {}
    static MultiWeight constant(int nvars, const Rational& c);
    /* p(t) placed into variable `slot` (0-based). */
    static MultiWeight embed(const LaurentPoly& p, int slot, int nvars);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<std::vector<int>, Rational>& terms() const { return terms_; }

    void add_term(const std::vector<int>& exps, const Rational& c);

    MultiWeight operator-() const;
    MultiWeight operator+(const MultiWeight& o) const;
    MultiWeight operator-(const MultiWeight& o) const;
    MultiWeight operator*(const MultiWeight& o) const;
    MultiWeight operator*(const Rational& c) const;
    bool operator==(const MultiWeight& o) const {
        return nvars_ == o.nvars_ && terms_ == o.terms_;
    }
    bool operator!=(const MultiWeight& o) const { return !(*this == o); }

    /* Bar involution on every variable: t_i -> t_i^-1. */
    MultiWeight bar() const;

    /* Canonical text, e.g. "1/2 + 2*t2 - t1^2*t3^-1".  Zero is "0". */
    std::string str() const;
    static MultiWeight parse(std::string_view text, int nvars, int line_no = 0);
    static MultiWeight parse(detail::Scanner& sc, int nvars);

private:
    int nvars_;
    std::map<std::vector<int>, Rational> terms_;
    void check_arity(const MultiWeight& o) const;
};

} // namespace zt

#endif
