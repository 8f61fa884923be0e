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
#include "ztilde/multiweight.hpp"

#include <algorithm>

#include "ztilde/scan.hpp"

namespace zt {

MultiWeight MultiWeight::constant(int nvars, const Rational& c) {
    MultiWeight w(nvars);
    if (c != 0) w.terms_[std::vector<int>(nvars, 0)] = c;
    return w;
}

MultiWeight MultiWeight::embed(const LaurentPoly& p, int slot, int nvars) {
    if (slot < 0 || slot >= nvars) throw ValidationError("MultiWeight::embed: slot out of range");
    MultiWeight w(nvars);
    for (const auto& [e, c] : p.terms()) {
        std::vector<int> v(nvars, 0);
        v[slot] = e;
        w.terms_[v] = c;
    }
    return w;
}

void MultiWeight::add_term(const std::vector<int>& exps, const Rational& c) {
    if (static_cast<int>(exps.size()) != nvars_)
        throw ValidationError("MultiWeight: exponent vector has wrong length");
    auto it = terms_.find(exps);
    if (it == terms_.end()) {
        if (c != 0) terms_[exps] = c;
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void MultiWeight::check_arity(const MultiWeight& o) const {
    if (nvars_ != o.nvars_) throw ValidationError("MultiWeight: mixed variable counts");
}

MultiWeight MultiWeight::operator-() const {
    MultiWeight r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

MultiWeight MultiWeight::operator+(const MultiWeight& o) const {
    check_arity(o);
    MultiWeight r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

MultiWeight MultiWeight::operator-(const MultiWeight& o) const { return *this + (-o); }

MultiWeight MultiWeight::operator*(const MultiWeight& o) const {
    check_arity(o);
    MultiWeight r(nvars_);
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_) {
            std::vector<int> e(nvars_);
            for (int i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    return r;
}

MultiWeight MultiWeight::operator*(const Rational& c) const {
    MultiWeight r(nvars_);
    if (c == 0) return r;
    r = *this;
    for (auto& [e, k] : r.terms_) k *= c;
    return r;
}

MultiWeight MultiWeight::bar() const {
    MultiWeight r(nvars_);
    for (const auto& [e, c] : terms_) {
        std::vector<int> v(e);
        for (int& x : v) x = -x;
        r.terms_[v] = c;
    }
    return r;
}

std::string MultiWeight::str() const {
    if (terms_.empty()) return "0";
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
        std::string vars;
        for (int i = 0; i < nvars_; ++i) {
            if (e[i] == 0) continue;
            if (!vars.empty()) vars += "*";
            vars += "t" + std::to_string(i + 1);
            if (e[i] != 1) vars += "^" + std::to_string(e[i]);
        }
        if (vars.empty()) {
            out += to_string(a);
        } else {
            if (a != 1) { out += to_string(a); out += "*"; }
            out += vars;
        }
        first = false;
    }
    return out;
}

MultiWeight MultiWeight::parse(detail::Scanner& sc, int nvars) {
    MultiWeight w(nvars);
    bool first = true;
    bool any = false;
    for (;;) {
        sc.skip_ws();
        int sign = 1;
        if (sc.accept('-')) sign = -1;
        else if (sc.accept('+')) {
            if (first) sc.fail("unexpected '+'");
        } else if (!first) {
            break;
        }
        sc.skip_ws();
        Rational c(1);
        std::vector<int> exps(nvars, 0);
        bool saw_coeff = false, saw_var = false;
        if (sc.peek() >= '0' && sc.peek() <= '9') {
            c = parse_rational(sc.take_rational());
            saw_coeff = true;
        }
        for (;;) {
            size_t save = sc.pos;
            if (saw_coeff || saw_var) {
                if (!sc.accept('*')) break;
            }
            sc.skip_ws();
            if (sc.peek() != 't') {
                if (saw_coeff || saw_var) { sc.pos = save; break; }
                sc.fail("expected term");
            }
            ++sc.pos;
            int idx = std::stoi(sc.take_int());
            if (idx < 1 || idx > nvars)
                sc.fail("variable t" + std::to_string(idx) + " out of range (1.." +
                        std::to_string(nvars) + ")");
            int exp = 1;
            if (sc.accept('^')) exp = std::stoi(sc.take_int());
            exps[idx - 1] += exp;
            saw_var = true;
        }
        if (!saw_coeff && !saw_var) sc.fail("expected term");
        w.add_term(exps, sign < 0 ? Rational(-c) : c);
        first = false;
        any = true;
    }
    if (!any) sc.fail("empty weight");
    return w;
}

MultiWeight MultiWeight::parse(std::string_view text, int nvars, int line_no) {
    detail::Scanner sc(text, line_no);
    MultiWeight w = parse(sc, nvars);
    sc.skip_ws();
    if (!sc.eof()) sc.fail("trailing characters after weight");
    return w;
}

} // namespace zt
