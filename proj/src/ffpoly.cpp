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

#include "drinmod/ffpoly.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace drinmod {

bool ff_less(const FFElem& a, const FFElem& b) {
    size_t n = std::max(a.size(), b.size());
    for (size_t i = n; i-- > 0;) {
        Fq::Elem ca = i < a.size() ? a[i] : 0;
        Fq::Elem cb = i < b.size() ? b[i] : 0;
        if (ca != cb) return ca < cb;
    }
    return false;
}

FFPoly ffp_zero() { return {}; }

FFPoly ffp_one(const ExtField& F) { return {{F.one()}}; }

FFPoly ffp_x(const ExtField& F) { return {{F.zero(), F.one()}}; }

FFPoly ffp_const(const ExtField& F, const FFElem& a) {
    if (F.is_zero(a)) return {};
    return {{a}};
}

FFPoly ffp_from_coeffs(const ExtField& F, std::vector<FFElem> cs) {
    FFPoly r{std::move(cs)};
    ffp_trim(F, r);
    return r;
}

FFPoly ffp_lift(const ExtField& F, const Poly& p) {
    std::vector<FFElem> cs;
    for (int i = 0; i <= p.degree(); ++i) cs.push_back(F.from_base(p.coeff(i)));
    return ffp_from_coeffs(F, std::move(cs));
}

void ffp_trim(const ExtField& F, FFPoly& a) {
    while (!a.c.empty() && F.is_zero(a.c.back())) a.c.pop_back();
}

bool ffp_eq(const ExtField& F, const FFPoly& a, const FFPoly& b) {
    (void)F;
    return a.c == b.c;
}

FFPoly ffp_add(const ExtField& F, const FFPoly& a, const FFPoly& b) {
    FFPoly r;
    size_t n = std::max(a.c.size(), b.c.size());
    r.c.reserve(n);
    for (size_t i = 0; i < n; ++i) {
        FFElem x = i < a.c.size() ? a.c[i] : F.zero();
        if (i < b.c.size()) x = F.add(x, b.c[i]);
        r.c.push_back(std::move(x));
    }
    ffp_trim(F, r);
    return r;
}

FFPoly ffp_neg(const ExtField& F, const FFPoly& a) {
    FFPoly r = a;
    for (auto& x : r.c) x = F.neg(x);
    return r;
}

FFPoly ffp_sub(const ExtField& F, const FFPoly& a, const FFPoly& b) {
    return ffp_add(F, a, ffp_neg(F, b));
}

FFPoly ffp_mul(const ExtField& F, const FFPoly& a, const FFPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    FFPoly r;
    r.c.assign(a.c.size() + b.c.size() - 1, F.zero());
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (F.is_zero(a.c[i])) continue;
        for (size_t j = 0; j < b.c.size(); ++j) {
            if (F.is_zero(b.c[j])) continue;
            r.c[i + j] = F.add(r.c[i + j], F.mul(a.c[i], b.c[j]));
        }
    }
    ffp_trim(F, r);
    return r;
}

FFPoly ffp_scale(const ExtField& F, const FFPoly& a, const FFElem& s) {
    if (F.is_zero(s)) return {};
    FFPoly r = a;
    for (auto& x : r.c) x = F.mul(x, s);
    return r;
}

FFPoly ffp_shift(const ExtField& F, const FFPoly& a, int k) {
    if (a.is_zero()) return {};
    FFPoly r;
    r.c.assign(a.c.size() + k, F.zero());
    for (size_t i = 0; i < a.c.size(); ++i) r.c[i + k] = a.c[i];
    return r;
}

std::pair<FFPoly, FFPoly> ffp_divrem(const ExtField& F, const FFPoly& a, const FFPoly& b) {
    if (b.is_zero()) throw std::domain_error("FFPoly: division by zero");
    FFPoly q, r = a;
    int d = b.degree();
    FFElem linv = F.inv(b.c.back());
    if (r.degree() >= d) q.c.assign(r.degree() - d + 1, F.zero());
    while (r.degree() >= d) {
        int k = r.degree() - d;
        FFElem c = F.mul(r.c.back(), linv);
        q.c[k] = c;
        for (int i = 0; i <= d; ++i)
            r.c[k + i] = F.sub(r.c[k + i], F.mul(c, b.c[i]));
        ffp_trim(F, r);
    }
    ffp_trim(F, q);
    return {q, r};
}

FFPoly ffp_mod(const ExtField& F, const FFPoly& a, const FFPoly& b) {
    return ffp_divrem(F, a, b).second;
}

FFPoly ffp_div(const ExtField& F, const FFPoly& a, const FFPoly& b) {
    return ffp_divrem(F, a, b).first;
}

FFPoly ffp_monic(const ExtField& F, const FFPoly& a) {
    if (a.is_zero() || F.is_one(a.c.back())) return a;
    return ffp_scale(F, a, F.inv(a.c.back()));
}

FFPoly ffp_gcd(const ExtField& F, const FFPoly& a, const FFPoly& b) {
    FFPoly x = a, y = b;
    while (!y.is_zero()) {
        FFPoly r = ffp_mod(F, x, y);
        x = std::move(y);
        y = std::move(r);
    }
    return ffp_monic(F, x);
}

FFPoly ffp_derivative(const ExtField& F, const FFPoly& a) {
    FFPoly r;
    if (a.c.size() <= 1) return r;
    const Fq& fq = F.base();
    for (size_t i = 1; i < a.c.size(); ++i) {
        Fq::Elem k = fq.from_int((int64_t)i);
        r.c.push_back(F.mul_base(a.c[i], k));
    }
    ffp_trim(F, r);
    return r;
}

FFElem ffp_eval(const ExtField& F, const FFPoly& a, const FFElem& x) {
    FFElem r = F.zero();
    for (size_t i = a.c.size(); i-- > 0;) r = F.add(F.mul(r, x), a.c[i]);
    return r;
}

FFPoly ffp_pow_mod(const ExtField& F, const FFPoly& b, uint64_t e, const FFPoly& m) {
    FFPoly r = ffp_one(F);
    FFPoly base = ffp_mod(F, b, m);
    while (e) {
        if (e & 1) r = ffp_mod(F, ffp_mul(F, r, base), m);
        base = ffp_mod(F, ffp_mul(F, base, base), m);
        e >>= 1;
    }
    return r;
}

FFPoly ffp_pow_mod_big(const ExtField& F, const FFPoly& b, const BigUInt& e, const FFPoly& m) {
    FFPoly r = ffp_one(F);
    FFPoly base = ffp_mod(F, b, m);
    for (size_t i = 0; i < e.bit_length(); ++i) {
        if (e.bit(i)) r = ffp_mod(F, ffp_mul(F, r, base), m);
        base = ffp_mod(F, ffp_mul(F, base, base), m);
    }
    return r;
}

FFPoly ffp_interpolate(const ExtField& F, const std::vector<FFElem>& xs,
                       const std::vector<FFElem>& ys) {
    if (xs.size() != ys.size()) throw std::invalid_argument("interpolate: size mismatch");
    size_t n = xs.size();
    // Newton divided differences
    std::vector<FFElem> dd = ys;
    for (size_t k = 1; k < n; ++k) {
        for (size_t i = n - 1; i >= k; --i) {
            FFElem num = F.sub(dd[i], dd[i - 1]);
            FFElem den = F.sub(xs[i], xs[i - k]);
            dd[i] = F.div(num, den);
            if (i == k) break;
        }
    }
    FFPoly r;
    for (size_t i = n; i-- > 0;) {
        // r = r * (x - xs[i]) + dd[i]
        FFPoly lin{{F.neg(xs[i]), F.one()}};
        r = ffp_add(F, ffp_mul(F, r, lin), ffp_const(F, dd[i]));
    }
    return r;
}

namespace {

FFPoly ffp_pth_root(const ExtField& F, const FFPoly& a) {
    const Fq& fq = F.base();
    uint32_t p = fq.p();
    // coefficient c -> c^(p^(e*n - 1)): the inverse of x -> x^p in F
    uint32_t total = fq.e() * F.n();
    FFPoly r;
    for (int i = 0; i <= a.degree(); i += p) {
        FFElem v = a.c[i];
        for (uint32_t k = 1; k < total; ++k) {
            // apply absolute Frobenius x -> x^p
            FFElem w = v;
            v = F.pow(w, p);
        }
        r.c.push_back(v);
    }
    ffp_trim(F, r);
    return r;
}

struct SplitRng {
    uint64_t s;
    explicit SplitRng(uint64_t seed) : s(seed ^ 0x9e3779b97f4a7c15ull) {}
    uint64_t next() {
        s = s * 6364136223846793005ull + 1442695040888963407ull;
        return s ^ (s >> 31);
    }
    FFElem elem(const ExtField& F) {
        FFElem e(F.n(), 0);
        for (auto& c : e) c = (Fq::Elem)(next() % F.base().q());
        return e;
    }
};

// equal-degree splitting of a monic squarefree product of degree-d primes
void ffp_edf(const ExtField& F, const FFPoly& a, int d,
             std::vector<FFPoly>& out, SplitRng& rng) {
    if (a.degree() == d) {
        out.push_back(ffp_monic(F, a));
        return;
    }
    // (|F|^d - 1)/2
    BigUInt ed(1);
    for (int i = 0; i < d; ++i)
        for (uint32_t k = 0; k < F.n(); ++k) ed.mul_small(F.base().q());
    ed.sub_small(1);
    ed.halve();
    while (true) {
        std::vector<FFElem> rc;
        for (int i = 0; i < a.degree(); ++i) rc.push_back(rng.elem(F));
        FFPoly r = ffp_from_coeffs(F, rc);
        if (r.is_zero()) continue;
        FFPoly b = ffp_pow_mod_big(F, r, ed, a);
        FFPoly g = ffp_gcd(F, ffp_sub(F, b, ffp_one(F)), a);
        if (g.degree() > 0 && g.degree() < a.degree()) {
            ffp_edf(F, g, d, out, rng);
            ffp_edf(F, ffp_div(F, a, g), d, out, rng);
            return;
        }
    }
}

void ffp_ddf(const ExtField& F, FFPoly rest, int mult,
             std::map<std::vector<FFElem>, std::pair<FFPoly, int>>& out, SplitRng& rng) {
    FFPoly x = ffp_x(F);
    FFPoly h = x;
    uint64_t q = F.base().q();
    for (int d = 1; rest.degree() >= 2 * d; ++d) {
        // h = h^(|F|) mod rest, via n repeated q-th powers
        for (uint32_t k = 0; k < F.n(); ++k) h = ffp_pow_mod(F, h, q, rest);
        FFPoly g = ffp_gcd(F, ffp_sub(F, h, x), rest);
        if (g.degree() > 0) {
            std::vector<FFPoly> parts;
            ffp_edf(F, g, d, parts, rng);
            for (auto& p : parts) out[p.c] = {p, mult};
            rest = ffp_div(F, rest, g);
            h = ffp_mod(F, h, rest);
        }
    }
    if (rest.degree() > 0) out[ffp_monic(F, rest).c] = {ffp_monic(F, rest), mult};
}

}  // namespace

FFPoly ffp_squarefree_part(const ExtField& F, const FFPoly& a) {
    FFPoly r = ffp_one(F);
    for (auto& [f, m] : ffp_factor(F, a)) r = ffp_mul(F, r, f);
    return r;
}

std::vector<std::pair<FFPoly, int>> ffp_factor(const ExtField& F, const FFPoly& a) {
    if (a.is_zero()) throw std::domain_error("ffp_factor: zero polynomial");
    std::map<std::vector<FFElem>, std::pair<FFPoly, int>> out;
    uint64_t seed = 1;
    for (auto& c : a.c)
        for (auto d : c) seed = seed * 1099511628211ull + d;
    SplitRng rng(seed);
    FFPoly rest = ffp_monic(F, a);
    int power = 1;
    while (rest.degree() > 0) {
        FFPoly d = ffp_derivative(F, rest);
        if (d.is_zero()) {
            rest = ffp_pth_root(F, rest);
            power *= (int)F.base().p();
            continue;
        }
        FFPoly g = ffp_gcd(F, rest, d);
        FFPoly sqf = ffp_div(F, rest, g);
        int m = 1;
        while (sqf.degree() > 0) {
            FFPoly nxt = ffp_gcd(F, sqf, g);
            FFPoly exact = ffp_div(F, sqf, nxt);
            if (exact.degree() > 0) {
                std::map<std::vector<FFElem>, std::pair<FFPoly, int>> sub;
                ffp_ddf(F, ffp_monic(F, exact), m * power, sub, rng);
                for (auto& [k, v] : sub) {
                    auto it = out.find(k);
                    if (it == out.end())
                        out[k] = v;
                    else
                        it->second.second += v.second;
                }
            }
            sqf = nxt;
            if (nxt.degree() > 0) g = ffp_div(F, g, nxt);
            ++m;
        }
        rest = g;
    }
    std::vector<std::pair<FFPoly, int>> res;
    for (auto& [k, v] : out) res.push_back(v);
    return res;
}

std::vector<std::pair<FFElem, int>> ffp_roots_in_field(const ExtField& F, const FFPoly& a) {
    if (a.is_zero()) throw std::domain_error("roots: zero polynomial");
    std::vector<std::pair<FFElem, int>> roots;
    for (auto& [f, m] : ffp_factor(F, a)) {
        if (f.degree() == 1) {
            FFElem r = F.neg(f.c[0]);  // monic x + c0
            roots.emplace_back(r, m);
        }
    }
    std::sort(roots.begin(), roots.end(),
              [](const auto& x, const auto& y) { return ff_less(x.first, y.first); });
    return roots;
}

std::string ffp_to_string(const ExtField& F, const FFPoly& a, const std::string& var) {
    if (a.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = a.degree(); i >= 0; --i) {
        const FFElem& c = a.c[i];
        if (F.is_zero(c)) continue;
        if (!first) os << "+";
        first = false;
        std::string cs = F.to_string(c);
        bool needs_paren = cs.find('+') != std::string::npos || cs.find('-') != std::string::npos;
        if (i == 0) {
            os << (needs_paren ? "(" + cs + ")" : cs);
            continue;
        }
        if (!F.is_one(c)) os << (needs_paren || cs.find('w') != std::string::npos ? "(" + cs + ")*" : cs + "*");
        os << var;
        if (i > 1) os << "^" << i;
    }
    return os.str();
}

}  // namespace drinmod
