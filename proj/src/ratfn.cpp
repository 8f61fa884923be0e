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
#include "ztilde/ratfn.hpp"

#include "ztilde/scan.hpp"

namespace zt {

RatFn RatFn::raw(LaurentPoly n, LaurentPoly d) {
    RatFn r;
    r.num_ = std::move(n);
    r.den_ = std::move(d);
    return r;
}

RatFn::RatFn(const LaurentPoly& num, const LaurentPoly& den) {
    if (den.is_zero()) throw ValidationError("RatFn: zero denominator");
    if (num.is_zero()) { den_ = LaurentPoly::one(); return; }
    int a = den.min_exp();
    LaurentPoly d0 = den.shifted(-a);
    int b = num.min_exp();
    LaurentPoly n0 = num.shifted(-b);
    LaurentPoly g = LaurentPoly::gcd(n0, d0);
    if (!g.is_one()) {
        LaurentPoly q, r;
        LaurentPoly::divmod(n0, g, q, r);
        n0 = q;
        LaurentPoly::divmod(d0, g, q, r);
        d0 = q;
    }
    Rational f;
    den_ = d0.primitive_integer_form(f);
    num_ = n0.shifted(b - a) * (Rational(1) / f);
}

const LaurentPoly& RatFn::as_laurent() const {
    if (!is_laurent()) throw ValidationError("RatFn: value is not a Laurent polynomial");
    return num_;
}

RatFn RatFn::operator-() const { return raw(-num_, den_); }

RatFn RatFn::operator+(const RatFn& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    if (den_ == o.den_) return RatFn(num_ + o.num_, den_);
    return RatFn(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFn RatFn::operator-(const RatFn& o) const { return *this + (-o); }

RatFn RatFn::operator*(const RatFn& o) const {
    if (is_zero() || o.is_zero()) return RatFn();
    return RatFn(num_ * o.num_, den_ * o.den_);
}

RatFn RatFn::operator/(const RatFn& o) const {
    if (o.is_zero()) throw ValidationError("RatFn: division by zero");
    if (is_zero()) return RatFn();
    return RatFn(num_ * o.den_, den_ * o.num_);
}

RatFn RatFn::operator*(const Rational& c) const {
    if (c == 0) return RatFn();
    return raw(num_ * c, den_);
}

RatFn RatFn::inverse() const {
    if (is_zero()) throw ValidationError("RatFn: inverse of zero");
    return RatFn(den_, num_);
}

RatFn RatFn::bar() const { return RatFn(num_.bar(), den_.bar()); }

RatFn RatFn::shifted(int m) const {
    if (is_zero()) return *this;
    return raw(num_.shifted(m), den_);
}

std::vector<std::pair<Rational, RatFn>> RatFn::atoms() const {
    std::vector<std::pair<Rational, RatFn>> out;
    out.reserve(num_.terms().size());
    for (const auto& [e, c] : num_.terms())
        out.emplace_back(c, raw(LaurentPoly(Rational(1), e), den_));
    return out;
}

std::string RatFn::str() const { return "(" + num_.str() + ")/(" + den_.str() + ")"; }

RatFn RatFn::parse(detail::Scanner& sc) {
    sc.skip_ws();
    if (sc.peek() != '(') {
        // bare Laurent polynomial
        LaurentPoly p = LaurentPoly::parse(sc);
        return RatFn(p);
    }
    sc.expect('(', "before numerator");
    LaurentPoly n = LaurentPoly::parse(sc);
    sc.expect(')', "after numerator");
    sc.expect('/', "between numerator and denominator");
    sc.expect('(', "before denominator");
    LaurentPoly d = LaurentPoly::parse(sc);
    sc.expect(')', "after denominator");
    return RatFn(n, d);
}

RatFn RatFn::parse(std::string_view text, int line_no) {
    detail::Scanner sc(text, line_no);
    RatFn r = parse(sc);
    sc.skip_ws();
    if (!sc.eof()) sc.fail("trailing characters after rational function");
    return r;
}

int RatFn::compare(const RatFn& a, const RatFn& b) {
    std::string da = a.den_.str(), db = b.den_.str();
    if (da != db) return da < db ? -1 : 1;
    std::string na = a.num_.str(), nb = b.num_.str();
    if (na != nb) return na < nb ? -1 : 1;
    return 0;
}

} // namespace zt
