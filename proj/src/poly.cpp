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

#include "drinmod/poly.hpp"

#include "drinmod/bigs.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace drinmod {

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly::Poly(const Fq& f, std::vector<Fq::Elem> coeffs) : f_(&f), c_(std::move(coeffs)) {
    for (auto c : c_)
        if (c >= f.q()) throw std::invalid_argument("Poly: coefficient out of range");
    trim();
}

Poly Poly::constant(const Fq& f, Fq::Elem c) {
    Poly r(f);
    if (c) r.c_ = {c};
    return r;
}

Poly Poly::t(const Fq& f) {
    Poly r(f);
    r.c_ = {0, 1};
    return r;
}

Poly Poly::monomial(const Fq& f, int deg, Fq::Elem c) {
    Poly r(f);
    if (c) {
        r.c_.assign(deg + 1, 0);
        r.c_[deg] = c;
    }
    return r;
}

Poly Poly::operator+(const Poly& o) const {
    Poly r(*f_);
    r.c_.resize(std::max(c_.size(), o.c_.size()), 0);
    for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = f_->add(coeff((int)i), o.coeff((int)i));
    r.trim();
    return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator-() const {
    Poly r(*f_);
    r.c_ = c_;
    for (auto& c : r.c_) c = f_->neg(c);
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    Poly r(*f_);
    if (is_zero() || o.is_zero()) return r;
    r.c_.assign(c_.size() + o.c_.size() - 1, 0);
    for (size_t i = 0; i < c_.size(); ++i) {
        if (!c_[i]) continue;
        for (size_t j = 0; j < o.c_.size(); ++j)
            r.c_[i + j] = f_->add(r.c_[i + j], f_->mul(c_[i], o.c_[j]));
    }
    r.trim();
    return r;
}

Poly Poly::operator*(Fq::Elem s) const {
    Poly r(*f_);
    if (!s) return r;
    r.c_ = c_;
    for (auto& c : r.c_) c = f_->mul(c, s);
    return r;
}

bool Poly::operator<(const Poly& o) const {
    if (degree() != o.degree()) return degree() < o.degree();
    for (int i = degree(); i >= 0; --i)
        if (coeff(i) != o.coeff(i)) return coeff(i) < o.coeff(i);
    return false;
}

std::pair<Poly, Poly> Poly::divrem(const Poly& o) const {
    if (o.is_zero()) throw std::domain_error("Poly: division by zero");
    Poly q(*f_), r = *this;
    int d = o.degree();
    Fq::Elem linv = f_->inv(o.lc());
    if (r.degree() >= d) q.c_.assign(r.degree() - d + 1, 0);
    while (r.degree() >= d) {
        int k = r.degree() - d;
        Fq::Elem c = f_->mul(r.lc(), linv);
        q.c_[k] = c;
        for (int i = 0; i <= d; ++i)
            r.c_[k + i] = f_->sub(r.c_[k + i], f_->mul(c, o.coeff(i)));
        r.trim();
    }
    q.trim();
    return {q, r};
}

bool Poly::divides(const Poly& o) const {
    if (is_zero()) return o.is_zero();
    return (o % *this).is_zero();
}

Poly Poly::monic() const {
    if (is_zero() || is_monic()) return *this;
    return *this * f_->inv(lc());
}

Poly Poly::derivative() const {
    Poly r(*f_);
    if (c_.size() <= 1) return r;
    r.c_.assign(c_.size() - 1, 0);
    for (size_t i = 1; i < c_.size(); ++i) {
        Fq::Elem k = f_->from_int((int64_t)i);
        r.c_[i - 1] = f_->mul(c_[i], k);
    }
    r.trim();
    return r;
}

Fq::Elem Poly::eval(Fq::Elem x) const {
    Fq::Elem r = 0;
    for (size_t i = c_.size(); i-- > 0;) r = f_->add(f_->mul(r, x), c_[i]);
    return r;
}

Poly Poly::shift_t(Fq::Elem a) const {
    // Horner in (T + a)
    Poly r(*f_);
    Poly ta = t(*f_) + constant(*f_, a);
    for (size_t i = c_.size(); i-- > 0;) r = r * ta + constant(*f_, c_[i]);
    return r;
}

uint64_t Poly::code() const {
    uint64_t code = 0;
    for (size_t i = c_.size(); i-- > 0;) code = code * f_->q() + c_[i];
    return code;
}

Poly Poly::from_code(const Fq& f, uint64_t code) {
    Poly r(f);
    while (code) {
        r.c_.push_back((Fq::Elem)(code % f.q()));
        code /= f.q();
    }
    return r;
}

std::string Poly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    bool composite_coeffs = f_->e() > 1;
    for (int i = degree(); i >= 0; --i) {
        Fq::Elem c = coeff(i);
        if (!c) continue;
        if (!first) os << "+";
        first = false;
        std::string cs = f_->to_string(c);
        if (i == 0) {
            if (composite_coeffs && cs.find('+') != std::string::npos)
                os << "(" << cs << ")";
            else
                os << cs;
            continue;
        }
        if (c != 1) {
            if (composite_coeffs && (cs.find('+') != std::string::npos || cs.find('u') != std::string::npos))
                os << "(" << cs << ")*";
            else
                os << cs << "*";
        }
        os << var;
        if (i > 1) os << "^" << i;
    }
    return os.str();
}

Poly Poly::parse(const Fq& f, const std::string& s, const std::string& var) {
    Poly r(f);
    size_t i = 0;
    auto skip_ws = [&] {
        while (i < s.size() && isspace((unsigned char)s[i])) ++i;
    };
    auto starts_var = [&](size_t j) {
        return s.compare(j, var.size(), var) == 0 ||
               (var == "T" && j < s.size() && s[j] == 't');
    };
    skip_ws();
    if (i >= s.size()) throw std::invalid_argument("Poly: empty string");
    bool any = false;
    while (true) {
        skip_ws();
        if (i >= s.size()) break;
        int sign = 1;
        if (s[i] == '+') {
            ++i;
        } else if (s[i] == '-') {
            sign = -1;
            ++i;
        } else if (any) {
            throw std::invalid_argument("Poly: expected +/- in '" + s + "'");
        }
        skip_ws();
        Fq::Elem coeff = 1;
        bool has_coeff = false;
        if (i < s.size() && s[i] == '(') {
            size_t close = s.find(')', i);
            if (close == std::string::npos) throw std::invalid_argument("Poly: unbalanced paren");
            coeff = f.parse(s.substr(i + 1, close - i - 1));
            has_coeff = true;
            i = close + 1;
        } else if (i < s.size() && (isdigit((unsigned char)s[i]) ||
                                    (f.e() > 1 && (s[i] == 'u' || s[i] == 'U')))) {
            size_t j = i;
            while (j < s.size() && (isdigit((unsigned char)s[j]) || s[j] == 'u' || s[j] == 'U' ||
                                    s[j] == '^'))
                ++j;
            // careful: "2*T" has the coefficient end at '*'; "u^2" is a coefficient
            coeff = f.parse(s.substr(i, j - i));
            has_coeff = true;
            i = j;
        }
        skip_ws();
        if (i < s.size() && s[i] == '*') {
            ++i;
            skip_ws();
        }
        int deg = 0;
        if (i < s.size() && starts_var(i)) {
            i += (s[i] == 't' && var == "T") ? 1 : var.size();
            deg = 1;
            skip_ws();
            if (i < s.size() && s[i] == '^') {
                ++i;
                skip_ws();
                deg = 0;
                if (i >= s.size() || !isdigit((unsigned char)s[i]))
                    throw std::invalid_argument("Poly: malformed exponent");
                while (i < s.size() && isdigit((unsigned char)s[i])) {
                    deg = deg * 10 + (s[i] - '0');
                    ++i;
                }
            }
        } else if (!has_coeff) {
            throw std::invalid_argument("Poly: cannot parse term in '" + s + "'");
        }
        if (sign < 0) coeff = f.neg(coeff);
        r = r + monomial(f, deg, 1) * coeff;
        any = true;
    }
    if (!any) throw std::invalid_argument("Poly: empty polynomial");
    return r;
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.to_string(); }

Poly gcd(const Poly& a, const Poly& b) {
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = x % y;
        x = y;
        y = r;
    }
    return x.monic();
}

Poly ext_gcd(const Poly& a, const Poly& b, Poly& x, Poly& y) {
    const Fq& f = a.field();
    Poly r0 = a, r1 = b;
    Poly x0 = Poly::one(f), x1 = Poly::zero(f);
    Poly y0 = Poly::zero(f), y1 = Poly::one(f);
    while (!r1.is_zero()) {
        auto [q, r] = r0.divrem(r1);
        r0 = r1;
        r1 = r;
        Poly nx = x0 - q * x1, ny = y0 - q * y1;
        x0 = x1;
        x1 = nx;
        y0 = y1;
        y1 = ny;
    }
    if (r0.is_zero()) {
        x = Poly::zero(f);
        y = Poly::zero(f);
        return r0;
    }
    Fq::Elem s = f.inv(r0.lc());
    x = x0 * s;
    y = y0 * s;
    return r0 * s;
}

Poly pow_mod(const Poly& base, uint64_t n, const Poly& mod) {
    Poly r = Poly::one(base.field());
    Poly b = base % mod;
    while (n) {
        if (n & 1) r = (r * b) % mod;
        b = (b * b) % mod;
        n >>= 1;
    }
    return r;
}

Poly frobenius_pow_mod(const Poly& base, uint32_t k, const Poly& mod) {
    Poly r = base % mod;
    uint64_t q = base.field().q();
    for (uint32_t i = 0; i < k; ++i) r = pow_mod(r, q, mod);
    return r;
}

bool is_squarefree(const Poly& a) {
    if (a.is_zero()) return false;
    if (a.is_constant()) return true;
    Poly d = a.derivative();
    if (d.is_zero()) return false;  // p-th power
    return gcd(a, d).is_constant();
}

bool is_irreducible(const Poly& a) {
    int n = a.degree();
    if (n <= 0) return false;
    if (n == 1) return true;
    const Fq& f = a.field();
    Poly m = a.monic();
    Poly x = Poly::t(f);
    // x^(q^n) == x mod m, and x^(q^(n/l)) - x coprime to m for prime l | n
    Poly xq = frobenius_pow_mod(x, n, m);
    if (xq != x % m) return false;
    int nn = n;
    for (int l = 2; l * l <= nn; ++l) {
        if (nn % l) continue;
        Poly t = frobenius_pow_mod(x, n / l, m) - x;
        if (!gcd(t, m).is_constant()) return false;
        while (nn % l == 0) nn /= l;
    }
    if (nn > 1 && nn != n) {
        Poly t = frobenius_pow_mod(x, n / nn, m) - x;
        if (!gcd(t, m).is_constant()) return false;
    } else if (nn == n && n > 1) {
        Poly t = frobenius_pow_mod(x, 1, m) - x;
        if (!gcd(t, m).is_constant()) return false;
    }
    return true;
}

namespace {

// p-th root of a polynomial all of whose exponents are multiples of p
// (coefficients live in F_q, q = p^e, where c -> c^(p^(e-1)) inverts x -> x^p)
Poly pth_root(const Poly& a) {
    const Fq& f = a.field();
    uint32_t p = f.p();
    std::vector<Fq::Elem> c;
    for (int i = 0; i <= a.degree(); i += p) {
        Fq::Elem v = a.coeff(i);
        for (uint32_t k = 1; k < f.e(); ++k) v = f.frob_p(v);
        // v = coeff^(p^(e-1)) so that v^p = coeff
        c.push_back(v);
    }
    return Poly(f, c);
}

void factor_squarefree_monic(const Poly& a, int mult, std::map<Poly, int>& out);

// equal-degree splitting of a monic squarefree product of degree-d primes
void edf(const Poly& a, int d, int mult, std::map<Poly, int>& out, uint64_t& seed) {
    if (a.degree() == d) {
        out[a.monic()] += mult;
        return;
    }
    const Fq& f = a.field();
    // exponent (q^d - 1)/2
    BigUInt e = BigUInt::pow(f.q(), d);
    e.sub_small(1);
    e.halve();
    while (true) {
        // deterministic pseudo-random polynomial of degree < deg a
        seed = seed * 6364136223846793005ull + 1442695040888963407ull;
        uint64_t s = seed;
        std::vector<Fq::Elem> c(a.degree());
        for (auto& x : c) {
            x = (Fq::Elem)(s % f.q());
            s = s * 2862933555777941757ull + 3037000493ull;
        }
        Poly r(f, c);
        if (r.is_zero()) continue;
        // r^e mod a via square and multiply over big exponent
        Poly acc = Poly::one(f);
        Poly base = r % a;
        for (size_t i = 0; i < e.bit_length(); ++i) {
            if (e.bit(i)) acc = (acc * base) % a;
            base = (base * base) % a;
        }
        Poly g = gcd(acc - Poly::one(f), a);
        if (!g.is_constant() && g.degree() < a.degree()) {
            edf(g, d, mult, out, seed);
            edf(a / g, d, mult, out, seed);
            return;
        }
    }
}

void ddf(const Poly& a, int mult, std::map<Poly, int>& out) {
    const Fq& f = a.field();
    Poly rest = a.monic();
    Poly x = Poly::t(f);
    Poly h = x;
    uint64_t seed = 0x9e3779b97f4a7c15ull ^ a.code();
    for (int d = 1; rest.degree() >= 2 * d; ++d) {
        h = frobenius_pow_mod(h, 1, rest);
        Poly g = gcd(h - x, rest);
        if (!g.is_constant()) {
            edf(g, d, mult, out, seed);
            rest = rest / g;
            h = h % rest;
        }
    }
    if (rest.degree() > 0) out[rest] += mult;
}

void factor_squarefree_monic(const Poly& a, int mult, std::map<Poly, int>& out) {
    if (a.degree() <= 0) return;
    ddf(a, mult, out);
}

}  // namespace

std::vector<std::pair<Poly, int>> factor(const Poly& a) {
    if (a.is_zero()) throw std::domain_error("factor: zero polynomial");
    std::map<Poly, int> out;
    // squarefree decomposition, characteristic p aware
    Poly rest = a.monic();
    int power = 1;
    while (rest.degree() > 0) {
        Poly d = rest.derivative();
        if (d.is_zero()) {
            rest = pth_root(rest);
            power *= (int)a.field().p();
            continue;
        }
        Poly g = gcd(rest, d);
        Poly sqf = rest / g;  // product of factors with multiplicity not divisible by p
        // peel multiplicities one at a time
        int m = 1;
        while (!sqf.is_constant()) {
            Poly next = gcd(sqf, g);
            Poly exact = sqf / next;  // factors of multiplicity exactly m
            if (exact.degree() > 0) factor_squarefree_monic(exact, m * power, out);
            sqf = next;
            if (!next.is_constant()) g = g / next;
            ++m;
        }
        rest = g;
    }
    return {out.begin(), out.end()};
}

Poly squarefree_part(const Poly& a) {
    Poly r = Poly::one(a.field());
    for (auto& [p, m] : factor(a)) r = r * p;
    return r;
}

std::vector<Poly> enumerate_monic(const Fq& f, int degree) {
    if (degree < 0) return {};
    std::vector<Poly> out;
    uint64_t count = 1;
    for (int i = 0; i < degree; ++i) count *= f.q();
    out.reserve(count);
    for (uint64_t idx = 0; idx < count; ++idx) {
        std::vector<Fq::Elem> c(degree + 1, 0);
        c[degree] = 1;
        uint64_t rem = idx;
        for (int i = 0; i < degree; ++i) {
            uint64_t div = 1;
            for (int j = 0; j < degree - 1 - i; ++j) div *= f.q();
            c[degree - 1 - i] = (Fq::Elem)(rem / div);
            rem %= div;
        }
        out.emplace_back(f, std::move(c));
    }
    return out;
}

std::vector<Poly> enumerate_monic_primes(const Fq& f, int degree) {
    if (degree < 1) throw std::invalid_argument("enumerate_monic_primes: degree must be >= 1");
    std::vector<Poly> out;
    for (auto& p : enumerate_monic(f, degree))
        if (is_irreducible(p)) out.push_back(p);
    return out;
}

uint64_t necklace_count(uint32_t q, uint32_t n) {
    // (1/n) sum_{d | n} mu(d) q^(n/d)
    auto mu = [](uint32_t m) -> int {
        int cnt = 0;
        for (uint32_t d = 2; d * d <= m; ++d) {
            if (m % d == 0) {
                m /= d;
                if (m % d == 0) return 0;
                ++cnt;
            }
        }
        if (m > 1) ++cnt;
        return (cnt % 2) ? -1 : 1;
    };
    int64_t total = 0;
    for (uint32_t d = 1; d <= n; ++d) {
        if (n % d) continue;
        int m = mu(d);
        if (!m) continue;
        uint64_t qe = 1;
        for (uint32_t i = 0; i < n / d; ++i) qe *= q;
        total += m * (int64_t)qe;
    }
    return (uint64_t)(total / n);
}

int legendre(const Poly& D, const Poly& p) {
    if (!p.is_monic() || !is_irreducible(p))
        throw std::invalid_argument("legendre: modulus must be a monic prime");
    Poly r = D % p;
    if (r.is_zero()) return 0;
    const Fq& f = D.field();
    // D^((|p|-1)/2) mod p, |p| = q^deg p
    BigUInt e = BigUInt::pow(f.q(), (unsigned)p.degree());
    e.sub_small(1);
    e.halve();
    Poly acc = Poly::one(f);
    Poly base = r;
    for (size_t i = 0; i < e.bit_length(); ++i) {
        if (e.bit(i)) acc = (acc * base) % p;
        base = (base * base) % p;
    }
    if (acc.is_one()) return 1;
    return -1;
}

AbsLog abslog_rational(const Poly& num, const Poly& den) {
    if (den.is_zero()) throw std::domain_error("abslog: zero denominator");
    if (num.is_zero()) return AbsLog::infdown();
    return AbsLog::of(num.degree() - den.degree());
}

}  // namespace drinmod
