/*
   Copyright 2026 the drinmod authors

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

#include "drinmod/ore.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace drinmod {

OrePoly ore_zero() { return {}; }

OrePoly ore_one(const ExtField& L) { return {{L.one()}}; }

OrePoly ore_t(const ExtField& L) { return {{L.zero(), L.one()}}; }

OrePoly ore_const(const ExtField& L, const FFElem& a) {
    if (L.is_zero(a)) return {};
    return {{a}};
}

OrePoly ore_from_coeffs(const ExtField& L, std::vector<FFElem> cs) {
    OrePoly f{std::move(cs)};
    ore_trim(L, f);
    return f;
}

void ore_trim(const ExtField& L, OrePoly& f) {
    while (!f.c.empty() && L.is_zero(f.c.back())) f.c.pop_back();
}

bool ore_eq(const ExtField& L, const OrePoly& f, const OrePoly& g) {
    (void)L;
    return f.c == g.c;
}

OrePoly ore_add(const ExtField& L, const OrePoly& f, const OrePoly& g) {
    OrePoly r;
    size_t n = std::max(f.c.size(), g.c.size());
    for (size_t i = 0; i < n; ++i) {
        FFElem x = i < f.c.size() ? f.c[i] : L.zero();
        if (i < g.c.size()) x = L.add(x, g.c[i]);
        r.c.push_back(std::move(x));
    }
    ore_trim(L, r);
    return r;
}

OrePoly ore_sub(const ExtField& L, const OrePoly& f, const OrePoly& g) {
    OrePoly ng = g;
    for (auto& x : ng.c) x = L.neg(x);
    return ore_add(L, f, ng);
}

OrePoly ore_scale(const ExtField& L, const OrePoly& f, const FFElem& s) {
    if (L.is_zero(s)) return {};
    OrePoly r = f;
    for (auto& x : r.c) x = L.mul(x, s);
    return r;
}

OrePoly ore_mul(const ExtField& L, const OrePoly& f, const OrePoly& g) {
    if (f.is_zero() || g.is_zero()) return {};
    OrePoly r;
    r.c.assign(f.c.size() + g.c.size() - 1, L.zero());
    // precompute Frobenius twists of g's coefficients up to tdeg(f)
    std::vector<std::vector<FFElem>> tw(f.c.size());
    tw[0] = g.c;
    for (size_t i = 1; i < f.c.size(); ++i) {
        tw[i] = tw[i - 1];
        for (auto& x : tw[i]) x = L.frob_q(x);
    }
    for (size_t i = 0; i < f.c.size(); ++i) {
        if (L.is_zero(f.c[i])) continue;
        for (size_t j = 0; j < g.c.size(); ++j) {
            if (L.is_zero(tw[i][j])) continue;
            r.c[i + j] = L.add(r.c[i + j], L.mul(f.c[i], tw[i][j]));
        }
    }
    ore_trim(L, r);
    return r;
}

std::pair<OrePoly, OrePoly> ore_right_divide(const ExtField& L, const OrePoly& f,
                                             const OrePoly& g) {
    if (g.is_zero()) throw std::domain_error("OrePoly: division by zero");
    OrePoly q, r = f;
    int d = g.tdeg();
    if (r.tdeg() >= d) q.c.assign(r.tdeg() - d + 1, L.zero());
    while (r.tdeg() >= d) {
        int k = r.tdeg() - d;
        // leading of (c t^k)(g) is c * lc(g)^(q^k) t^(k+d)
        FFElem lg = L.frob_q(g.c.back(), (uint32_t)k);
        FFElem c = L.div(r.c.back(), lg);
        q.c[k] = c;
        OrePoly mono{{}};
        mono.c.assign(k + 1, L.zero());
        mono.c[k] = c;
        r = ore_sub(L, r, ore_mul(L, mono, g));
    }
    ore_trim(L, q);
    return {q, r};
}

FFElem ore_eval(const ExtField& L, const OrePoly& f, const FFElem& x) {
    FFElem acc = L.zero();
    FFElem xq = x;
    for (size_t i = 0; i < f.c.size(); ++i) {
        if (!L.is_zero(f.c[i])) acc = L.add(acc, L.mul(f.c[i], xq));
        if (i + 1 < f.c.size()) xq = L.frob_q(xq);
    }
    return acc;
}

OrePoly ore_kernel_poly_from_basis(const ExtField& L, const std::vector<FFElem>& basis) {
    // f_0 = t^0; f_{i+1} = (t - f_i(v_i)^(q-1) t^0) f_i
    OrePoly f = ore_one(L);
    uint64_t qm1 = L.base().q() - 1;
    for (const auto& v : basis) {
        FFElem w = ore_eval(L, f, v);
        if (L.is_zero(w)) throw std::invalid_argument("kernel poly: dependent basis vector");
        FFElem wq = L.pow(w, qm1);
        OrePoly lin{{L.neg(wq), L.one()}};
        f = ore_mul(L, lin, f);
    }
    return f;
}

OrePoly ore_kernel_poly(const ExtField& L, const std::vector<FFElem>& subspace) {
    // verify subspace structure: size q^k, contains 0, closed under + and
    // F_q-scaling
    std::set<std::vector<Fq::Elem>> set(subspace.begin(), subspace.end());
    if (set.size() != subspace.size())
        throw std::invalid_argument("kernel poly: repeated elements");
    uint64_t q = L.base().q();
    uint64_t size = set.size();
    int k = 0;
    uint64_t pw = 1;
    while (pw < size) {
        pw *= q;
        ++k;
    }
    if (pw != size) throw std::invalid_argument("kernel poly: size is not a power of q");
    if (!set.count(L.zero())) throw std::invalid_argument("kernel poly: missing zero");
    for (const auto& a : subspace) {
        for (Fq::Elem s = 0; s < q; ++s)
            if (!set.count(L.mul_base(a, s)))
                throw std::invalid_argument("kernel poly: not closed under scaling");
        for (const auto& b : subspace)
            if (!set.count(L.add(a, b)))
                throw std::invalid_argument("kernel poly: not closed under addition");
    }
    // greedy basis extraction
    std::vector<FFElem> basis;
    std::set<std::vector<Fq::Elem>> span;
    span.insert(L.zero());
    for (const auto& a : subspace) {
        if (span.count(a)) continue;
        basis.push_back(a);
        // span = span + F_q a
        std::vector<FFElem> old(span.begin(), span.end());
        for (const auto& s : old)
            for (Fq::Elem c = 1; c < q; ++c) span.insert(L.add(s, L.mul_base(a, c)));
    }
    OrePoly f = ore_kernel_poly_from_basis(L, basis);
    if (f.tdeg() != k) throw std::logic_error("kernel poly: degree mismatch");
    return f;
}

OrePoly ore_map(const Embedding& e, const OrePoly& f) {
    OrePoly r;
    for (auto& c : f.c) r.c.push_back(e.apply(c));
    ore_trim(e.to(), r);
    return r;
}

std::string ore_to_string(const ExtField& L, const OrePoly& f) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = f.tdeg(); i >= 0; --i) {
        const FFElem& c = f.c[i];
        if (L.is_zero(c)) continue;
        if (!first) os << "+";
        first = false;
        std::string cs = L.to_string(c);
        bool composite = cs.find('+') != std::string::npos || cs.find('w') != std::string::npos;
        if (i == 0) {
            os << (composite && cs.find('+') != std::string::npos ? "(" + cs + ")" : cs);
            continue;
        }
        if (!L.is_one(c)) os << (composite ? "(" + cs + ")*" : cs + "*");
        os << "t";
        if (i > 1) os << "^" << i;
    }
    return os.str();
}

OrePoly ore_parse(const ExtField& L, const std::string& s) {
    // split into top-level terms; within a term the variable is the unique
    // 't' outside parentheses, everything before it is the coefficient
    std::vector<FFElem> coeffs;
    auto ensure = [&](size_t d) {
        if (coeffs.size() <= d) coeffs.resize(d + 1, L.zero());
    };
    size_t i = 0;
    bool any = false;
    while (i < s.size()) {
        while (i < s.size() && isspace((unsigned char)s[i])) ++i;
        if (i >= s.size()) break;
        int sign = 1;
        if (s[i] == '+') {
            ++i;
        } else if (s[i] == '-') {
            sign = -1;
            ++i;
        }
        // scan the term
        size_t start = i;
        int depth = 0;
        while (i < s.size()) {
            char c = s[i];
            if (c == '(') ++depth;
            if (c == ')') --depth;
            if (depth == 0 && (c == '+' || c == '-')) break;
            ++i;
        }
        std::string term = s.substr(start, i - start);
        // strip whitespace
        std::string clean;
        for (char c : term)
            if (!isspace((unsigned char)c)) clean += c;
        if (clean.empty()) throw std::invalid_argument("OrePoly: empty term in '" + s + "'");
        size_t tpos = std::string::npos;
        depth = 0;
        for (size_t k = 0; k < clean.size(); ++k) {
            if (clean[k] == '(') ++depth;
            if (clean[k] == ')') --depth;
            if (depth == 0 && clean[k] == 't') {
                tpos = k;
                break;
            }
        }
        FFElem coeff;
        size_t deg = 0;
        if (tpos == std::string::npos) {
            if (!clean.empty() && clean.front() == '(' && clean.back() == ')')
                clean = clean.substr(1, clean.size() - 2);
            coeff = L.parse(clean);
        } else {
            std::string cs = clean.substr(0, tpos);
            if (!cs.empty() && cs.back() == '*') cs.pop_back();
            if (!cs.empty() && cs.front() == '(' && cs.back() == ')')
                cs = cs.substr(1, cs.size() - 2);
            coeff = cs.empty() ? L.one() : L.parse(cs);
            deg = 1;
            size_t k = tpos + 1;
            if (k < clean.size() && clean[k] == '^') {
                ++k;
                deg = 0;
                while (k < clean.size() && isdigit((unsigned char)clean[k])) {
                    deg = deg * 10 + (clean[k] - '0');
                    ++k;
                }
            }
            if (k != clean.size()) throw std::invalid_argument("OrePoly: bad term '" + term + "'");
        }
        ensure(deg);
        if (sign < 0) coeff = L.neg(coeff);
        coeffs[deg] = L.add(coeffs[deg], coeff);
        any = true;
    }
    if (!any) throw std::invalid_argument("OrePoly: empty string");
    return ore_from_coeffs(L, std::move(coeffs));
}

}  // namespace drinmod
