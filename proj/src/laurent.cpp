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
#include "ztilde/laurent.hpp"

#include <algorithm>
#include <map>

#include "ztilde/scan.hpp"

namespace zt {

void LaurentPoly::strip_zeros() {
    terms_.erase(std::remove_if(terms_.begin(), terms_.end(),
                                [](const Term& t) { return t.second == 0; }),
                 terms_.end());
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> raw) {
    std::map<int, Rational> acc;
    for (auto& [e, c] : raw) acc[e] += c;
    LaurentPoly p;
    for (auto& [e, c] : acc)
        if (c != 0) p.terms_.emplace_back(e, c);
    return p;
}

int LaurentPoly::min_exp() const {
    if (is_zero()) throw ValidationError("min_exp of zero polynomial");
    return terms_.front().first;
}

int LaurentPoly::max_exp() const {
    if (is_zero()) throw ValidationError("max_exp of zero polynomial");
    return terms_.back().first;
}

Rational LaurentPoly::coeff(int exp) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), exp,
                               [](const Term& t, int e) { return t.first < e; });
    if (it != terms_.end() && it->first == exp) return it->second;
    return Rational(0);
}

Rational LaurentPoly::leading_coeff() const {
    if (is_zero()) throw ValidationError("leading_coeff of zero polynomial");
    return terms_.back().second;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly r;
    r.terms_.reserve(terms_.size() + o.terms_.size());
    auto a = terms_.begin(), b = o.terms_.begin();
    while (a != terms_.end() || b != o.terms_.end()) {
        if (b == o.terms_.end() || (a != terms_.end() && a->first < b->first)) {
            r.terms_.push_back(*a++);
        } else if (a == terms_.end() || b->first < a->first) {
            r.terms_.push_back(*b++);
        } else {
            Rational c = a->second + b->second;
            if (c != 0) r.terms_.emplace_back(a->first, c);
            ++a; ++b;
        }
    }
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const { return *this + (-o); }

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    if (is_zero() || o.is_zero()) return LaurentPoly();
    std::map<int, Rational> acc;
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_)
            acc[ea + eb] += ca * cb;
    LaurentPoly r;
    for (auto& [e, c] : acc)
        if (c != 0) r.terms_.emplace_back(e, c);
    return r;
}

LaurentPoly LaurentPoly::operator*(const Rational& c) const {
    if (c == 0) return LaurentPoly();
    LaurentPoly r = *this;
    for (auto& [e, k] : r.terms_) k *= c;
    return r;
}

LaurentPoly LaurentPoly::bar() const {
    LaurentPoly r = *this;
    for (auto& [e, c] : r.terms_) e = -e;
    std::reverse(r.terms_.begin(), r.terms_.end());
    return r;
}

LaurentPoly LaurentPoly::shifted(int m) const {
    LaurentPoly r = *this;
    for (auto& [e, c] : r.terms_) e += m;
    return r;
}

static void require_poly(const LaurentPoly& p, const char* who) {
    if (!p.is_polynomial())
        throw ValidationError(std::string(who) + ": operand has negative exponents");
}

void LaurentPoly::divmod(const LaurentPoly& a, const LaurentPoly& b,
                         LaurentPoly& q, LaurentPoly& r) {
    require_poly(a, "divmod");
    require_poly(b, "divmod");
    if (b.is_zero()) throw ValidationError("divmod: division by zero polynomial");
    q = LaurentPoly();
    r = a;
    int db = b.degree();
    Rational lb = b.leading_coeff();
    while (!r.is_zero() && r.degree() >= db) {
        Rational c = r.leading_coeff() / lb;
        int e = r.degree() - db;
        LaurentPoly m(c, e);
        q += m;
        r -= m * b;
    }
}

LaurentPoly LaurentPoly::gcd(LaurentPoly a, LaurentPoly b) {
    require_poly(a, "gcd");
    require_poly(b, "gcd");
    while (!b.is_zero()) {
        LaurentPoly q, r;
        divmod(a, b, q, r);
        a = b;
        b = r;
    }
    if (a.is_zero()) return a;
    return a * (Rational(1) / a.leading_coeff()); // monic
}

bool LaurentPoly::divides(const LaurentPoly& b, const LaurentPoly& a) {
    if (a.is_zero()) return true;
    if (b.is_zero()) return false;
    LaurentPoly q, r;
    divmod(a, b, q, r);
    return r.is_zero();
}

Rational LaurentPoly::content() const {
    if (is_zero()) throw ValidationError("content of zero polynomial");
    Integer num_gcd = 0, den_lcm = 1;
    for (const auto& [e, c] : terms_) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    }
    Rational c(abs(num_gcd), den_lcm);
    c.canonicalize();
    return c;
}

LaurentPoly LaurentPoly::primitive_integer_form(Rational& factor) const {
    Rational c = content();
    if (leading_coeff() < 0) c = -c;
    factor = c;
    return *this * (Rational(1) / c);
}

std::string LaurentPoly::str() const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rational a = c;
        if (first) {
            if (a < 0) { out += "-"; a = -a; }
        } else {
            out += (a < 0) ? " - " : " + ";
            if (a < 0) a = -a;
        }
        if (e == 0) {
            out += to_string(a);
        } else {
            if (a != 1) { out += to_string(a); out += "*"; }
            out += (e == 1) ? "t" : "t^" + std::to_string(e);
        }
        first = false;
    }
    return out;
}

/* term := rational ['*' tpow] | tpow ;  tpow := 't' ['^' int] */
LaurentPoly LaurentPoly::parse(detail::Scanner& sc) {
    std::vector<Term> terms;
    bool first = true;
    for (;;) {
        sc.skip_ws();
        int sign = 1;
        if (sc.accept('-')) sign = -1;
        else if (sc.accept('+')) {
            if (first) sc.fail("unexpected '+'");
        } else if (!first) {
            break; // no more terms
        }
        sc.skip_ws();
        Rational c(1);
        int exp = 0;
        bool saw_coeff = false, saw_t = false;
        char p = sc.peek();
        if ((p >= '0' && p <= '9')) {
            c = parse_rational(sc.take_rational());
            saw_coeff = true;
            if (sc.accept('*')) {
                sc.skip_ws();
                if (sc.peek() != 't') sc.fail("expected 't' after '*'");
            }
        }
        sc.skip_ws();
        if (sc.peek() == 't') {
            ++sc.pos;
            saw_t = true;
            exp = 1;
            if (sc.accept('^')) exp = std::stoi(sc.take_int());
        }
        if (!saw_coeff && !saw_t) sc.fail("expected term");
        terms.emplace_back(exp, sign < 0 ? Rational(-c) : c);
        first = false;
    }
    if (terms.empty()) sc.fail("empty polynomial");
    return from_terms(std::move(terms));
}

LaurentPoly LaurentPoly::parse(std::string_view text, int line_no) {
    detail::Scanner sc(text, line_no);
    LaurentPoly p = parse(sc);
    sc.skip_ws();
    if (!sc.eof()) sc.fail("trailing characters after polynomial");
    return p;
}

} // namespace zt
