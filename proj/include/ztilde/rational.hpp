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
#ifndef ZTILDE_RATIONAL_HPP
#define ZTILDE_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

#include "ztilde/errors.hpp"

namespace zt {

/* Exact rationals.  mpq_class keeps values canonical (reduced, positive
   denominator), which is what every serializer here relies on. */
using Rational = mpq_class;
using Integer = mpz_class;

inline std::string to_string(const Rational& q) { return q.get_str(); }

/* Accepts "n" and "n/d" with optional leading '-'.  Throws ParseError on
   anything else (including d == 0). */
inline Rational parse_rational(const std::string& s) {
    if (s.empty()) throw ParseError("empty rational");
    for (size_t i = 0; i < s.size(); ++i) {
        char c = s[i];
        bool ok = (c >= '0' && c <= '9') || c == '/' || (c == '-' && (i == 0 || s[i - 1] == '/'));
        if (!ok) throw ParseError("bad rational '" + s + "'");
    }
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw ParseError("bad rational '" + s + "'");
    if (q.get_den() == 0) throw ParseError("zero denominator in '" + s + "'");
    q.canonicalize();
    return q;
}

inline int sign(const Rational& q) { return sgn(q); }

} // namespace zt

#endif
