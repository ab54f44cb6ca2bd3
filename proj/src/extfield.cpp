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

#include "drinmod/extfield.hpp"

#include "drinmod/ffpoly.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace drinmod {

ExtField::ExtField(const Fq& base, Poly modulus) : fq_(&base), mod_(std::move(modulus)) {
    if (!mod_.is_monic() || mod_.degree() < 1)
        throw std::invalid_argument("ExtField: modulus must be monic nonconstant");
    if (mod_.degree() > 1 && !is_irreducible(mod_))
        throw std::invalid_argument("ExtField: modulus must be irreducible");
    n_ = (uint32_t)mod_.degree();
    build_reduction();
    // Frobenius matrix: columns are (y^i)^q reduced
    frob_ = FqMat(base, n_, n_);
    Poly y = Poly::t(base);
    Poly yq = frobenius_pow_mod(y, 1, mod_);
    Poly cur = Poly::one(base);
    for (uint32_t i = 0; i < n_; ++i) {
        for (uint32_t r = 0; r < n_; ++r) frob_.at(r, i) = cur.coeff(r);
        cur = (cur * yq) % mod_;
    }
    if (order_fits_u64() && order_u64() <= kZechLimit) build_zech();
}

void ExtField::build_reduction() {
    // rows: y^(n+k) mod f for k = 0..n-2
    red_.assign(n_ > 0 ? n_ - 1 : 0, std::vector<Fq::Elem>(n_, 0));
    if (n_ == 1) return;
    Poly y = Poly::t(*fq_);
    Poly cur = pow_mod(y, n_, mod_);
    for (uint32_t k = 0; k + 1 < n_; ++k) {
        for (uint32_t i = 0; i < n_; ++i) red_[k][i] = cur.coeff(i);
        cur = (cur * y) % mod_;
    }
}

bool ExtField::order_fits_u64() const {
    BigUInt b = BigUInt::pow(fq_->q(), n_);
    return b.fits_u64();
}

uint64_t ExtField::order_u64() const {
    BigUInt b = BigUInt::pow(fq_->q(), n_);
    return b.as_u64();
}

BigUInt ExtField::order_big() const { return BigUInt::pow(fq_->q(), n_); }

FFElem ExtField::one() const {
    FFElem a(n_, 0);
    a[0] = 1;
    return a;
}

FFElem ExtField::gen() const {
    FFElem a(n_, 0);
    if (n_ == 1) {
        a[0] = fq_->neg(mod_.coeff(0));  // y = -c for modulus y + c
    } else {
        a[1] = 1;
    }
    return a;
}

FFElem ExtField::from_base(Fq::Elem c) const {
    FFElem a(n_, 0);
    a[0] = c;
    return a;
}

FFElem ExtField::from_poly(const Poly& p) const {
    Poly r = p % mod_;
    FFElem a(n_, 0);
    for (int i = 0; i <= r.degree(); ++i) a[i] = r.coeff(i);
    return a;
}

bool ExtField::is_zero(const FFElem& a) const {
    return std::all_of(a.begin(), a.end(), [](Fq::Elem c) { return c == 0; });
}

bool ExtField::is_one(const FFElem& a) const {
    if (a[0] != 1) return false;
    for (size_t i = 1; i < a.size(); ++i)
        if (a[i]) return false;
    return true;
}

FFElem ExtField::add(const FFElem& a, const FFElem& b) const {
    FFElem r(n_);
    for (uint32_t i = 0; i < n_; ++i) r[i] = fq_->add(a[i], b[i]);
    return r;
}

FFElem ExtField::sub(const FFElem& a, const FFElem& b) const {
    FFElem r(n_);
    for (uint32_t i = 0; i < n_; ++i) r[i] = fq_->sub(a[i], b[i]);
    return r;
}

FFElem ExtField::neg(const FFElem& a) const {
    FFElem r(n_);
    for (uint32_t i = 0; i < n_; ++i) r[i] = fq_->neg(a[i]);
    return r;
}

FFElem ExtField::mul(const FFElem& a, const FFElem& b) const {
    if (n_ == 1) return {fq_->mul(a[0], b[0])};
    std::vector<Fq::Elem> prod(2 * n_ - 1, 0);
    for (uint32_t i = 0; i < n_; ++i) {
        if (!a[i]) continue;
        for (uint32_t j = 0; j < n_; ++j)
            if (b[j]) prod[i + j] = fq_->add(prod[i + j], fq_->mul(a[i], b[j]));
    }
    FFElem r(prod.begin(), prod.begin() + n_);
    for (uint32_t k = 0; k + 1 < n_; ++k) {
        Fq::Elem c = prod[n_ + k];
        if (!c) continue;
        const auto& row = red_[k];
        for (uint32_t i = 0; i < n_; ++i)
            if (row[i]) r[i] = fq_->add(r[i], fq_->mul(c, row[i]));
    }
    return r;
}

FFElem ExtField::mul_base(const FFElem& a, Fq::Elem s) const {
    FFElem r(n_);
    for (uint32_t i = 0; i < n_; ++i) r[i] = fq_->mul(a[i], s);
    return r;
}

FFElem ExtField::inv(const FFElem& a) const {
    if (is_zero(a)) throw std::domain_error("ExtField: division by zero");
    if (has_zech()) return from_code(zc_inv(to_code(a)));
    // extended Euclid in F_q[y]
    Poly pa(*fq_, std::vector<Fq::Elem>(a.begin(), a.end()));
    Poly x, y;
    Poly g = ext_gcd(pa, mod_, x, y);
    if (!g.is_one()) throw std::logic_error("ExtField: modulus not irreducible?");
    return from_poly(x);
}

FFElem ExtField::pow(const FFElem& a, uint64_t e) const {
    FFElem r = one(), b = a;
    while (e) {
        if (e & 1) r = mul(r, b);
        b = mul(b, b);
        e >>= 1;
    }
    return r;
}

FFElem ExtField::pow_big(const FFElem& a, const BigUInt& e) const {
    FFElem r = one(), b = a;
    for (size_t i = 0; i < e.bit_length(); ++i) {
        if (e.bit(i)) r = mul(r, b);
        b = mul(b, b);
    }
    return r;
}

FFElem ExtField::frob_q(const FFElem& a, uint32_t times) const {
    FFElem r = a;
    for (uint32_t t = 0; t < times % (n_ == 0 ? 1 : n_); ++t) r = frob_.apply(r);
    return r;
}

bool ExtField::is_square(const FFElem& a) const {
    if (is_zero(a)) return true;
    if (has_zech()) return log_[to_code(a)] % 2 == 0;
    BigUInt e = order_big();
    e.sub_small(1);
    e.halve();
    return is_one(pow_big(a, e));
}

FFElem ExtField::sqrt(const FFElem& a) const {
    if (is_zero(a)) return a;
    if (has_zech()) {
        uint32_t l = log_[to_code(a)];
        if (l % 2) throw std::domain_error("ExtField: not a square");
        return from_code(exp_[l / 2]);
    }
    // Tonelli-Shanks is overkill here: the non-Zech fields only see sqrt
    // through small cases, handled by exhaustive Frobenius orbit search.
    throw std::logic_error("ExtField: sqrt unavailable without Zech tables");
}

uint64_t ExtField::to_code(const FFElem& a) const {
    uint64_t code = 0;
    for (size_t i = a.size(); i-- > 0;) code = code * fq_->q() + a[i];
    return code;
}

FFElem ExtField::from_code(uint64_t code) const {
    FFElem a(n_, 0);
    for (uint32_t i = 0; i < n_ && code; ++i) {
        a[i] = (Fq::Elem)(code % fq_->q());
        code /= fq_->q();
    }
    return a;
}

void ExtField::build_zech() {
    zq_ = order_u64();
    uint64_t n = zq_ - 1;
    // find a multiplicative generator: try small elements
    std::vector<uint64_t> primes;
    {
        uint64_t m = n;
        for (uint64_t d = 2; d * d <= m; ++d)
            if (m % d == 0) {
                primes.push_back(d);
                while (m % d == 0) m /= d;
            }
        if (m > 1) primes.push_back(m);
    }
    FFElem g;
    for (uint64_t c = 1; c < zq_; ++c) {
        FFElem cand = from_code(c);
        bool ok = !is_zero(cand);
        for (auto pr : primes) {
            if (!ok) break;
            if (is_one(pow(cand, n / pr))) ok = false;
        }
        if (ok) {
            g = cand;
            break;
        }
    }
    exp_.assign(n, 0);
    log_.assign(zq_, 0);
    FFElem x = one();
    for (uint64_t k = 0; k < n; ++k) {
        uint64_t code = to_code(x);
        exp_[k] = (uint32_t)code;
        log_[code] = (uint32_t)k;
        x = mul(x, g);
    }
    // zech_[k]: 1 + g^k as a power of g; n marks zero
    zech_.assign(n, (uint32_t)n);
    for (uint64_t k = 0; k < n; ++k) {
        FFElem s = add(one(), from_code(exp_[k]));
        if (!is_zero(s)) zech_[k] = log_[to_code(s)];
    }
}

uint64_t ExtField::zc_mul(uint64_t a, uint64_t b) const {
    if (!a || !b) return 0;
    uint64_t n = zq_ - 1;
    uint64_t k = log_[a] + log_[b];
    if (k >= n) k -= n;
    return exp_[k];
}

uint64_t ExtField::zc_inv(uint64_t a) const {
    if (!a) throw std::domain_error("ExtField: division by zero");
    uint64_t n = zq_ - 1;
    uint64_t k = log_[a];
    return exp_[k == 0 ? 0 : n - k];
}

uint64_t ExtField::zc_add(uint64_t a, uint64_t b) const {
    if (!a) return b;
    if (!b) return a;
    uint64_t n = zq_ - 1;
    uint64_t la = log_[a], lb = log_[b];
    // a + b = g^la (1 + g^(lb - la))
    uint64_t d = lb >= la ? lb - la : lb + n - la;
    uint64_t z = zech_[d];
    if (z == n) return 0;
    uint64_t k = la + z;
    if (k >= n) k -= n;
    return exp_[k];
}

uint64_t ExtField::zc_neg(uint64_t a) const {
    if (!a) return 0;
    // -1 = g^((q-1)/2)
    uint64_t n = zq_ - 1;
    uint64_t k = log_[a] + n / 2;
    if (k >= n) k -= n;
    return exp_[k];
}

uint64_t ExtField::zc_sub(uint64_t a, uint64_t b) const { return zc_add(a, zc_neg(b)); }

int ExtField::zc_chi(uint64_t a) const {
    if (!a) return 0;
    return log_[a] % 2 == 0 ? 1 : -1;
}

std::string ExtField::to_string(const FFElem& a, const std::string& sym) const {
    Poly p(*fq_, std::vector<Fq::Elem>(a.begin(), a.end()));
    return p.to_string(sym);
}

FFElem ExtField::parse(const std::string& s, const std::string& sym) const {
    Poly p = Poly::parse(*fq_, s, sym);
    if (p.degree() >= (int)n_) throw std::invalid_argument("ExtField: element degree too large");
    return from_poly(p);
}

std::string ExtField::describe() const {
    std::ostringstream os;
    os << fq_->describe() << "[w]/(" << mod_.to_string("w") << ")";
    return os.str();
}

std::string ExtField::key() const {
    std::ostringstream os;
    os << fq_->q() << "|" << mod_.to_string();
    return os.str();
}

const ExtField& ext_field(const Fq& base, uint32_t n) {
    static std::mutex mu;
    static std::map<std::tuple<uint32_t, uint32_t, uint32_t>, std::unique_ptr<ExtField>> cache;
    if (n < 1) throw std::invalid_argument("ext_field: degree must be >= 1");
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_tuple(base.p(), base.e(), n);
    auto it = cache.find(key);
    if (it == cache.end()) {
        Poly mod(base);
        if (n == 1) {
            mod = Poly::t(base);  // y itself: F_q[y]/(y) = F_q
        } else {
            for (auto& c : enumerate_monic(base, (int)n)) {
                if (is_irreducible(c)) {
                    mod = c;
                    break;
                }
            }
        }
        it = cache.emplace(key, std::make_unique<ExtField>(base, mod)).first;
    }
    return *it->second;
}

Embedding::Embedding(const ExtField& from, const ExtField& to) : from_(&from), to_(&to) {
    uint32_t m = from.n(), n = to.n();
    if (!(&from.base() == &to.base() || from.base() == to.base()))
        throw std::invalid_argument("Embedding: different base fields");
    if (n % m != 0) throw std::invalid_argument("Embedding: degree does not divide");
    FFElem root;
    if (from.key() == to.key()) {
        root = to.gen();
    } else if (m == 1) {
        root = to.from_base(from.base().neg(from.modulus().coeff(0)));
    } else {
        // canonical image of the generator: the smallest root of from's
        // defining polynomial inside `to`
        auto roots = ffp_roots_in_field(to, ffp_lift(to, from.modulus()));
        if (roots.size() != m) throw std::logic_error("Embedding: modulus does not split");
        root = roots.front().first;  // ffp_roots_in_field sorts canonically
    }
    // embedding matrix: columns are root^i
    mat_ = FqMat(to.base(), n, m);
    FFElem p = to.one();
    for (uint32_t i = 0; i < m; ++i) {
        for (uint32_t r = 0; r < n; ++r) mat_.at(r, i) = p[r];
        p = to.mul(p, root);
    }
    solver_ = FqSolver(to.base(), mat_);
}

FFElem Embedding::apply(const FFElem& a) const {
    return mat_.apply(a);
}

std::optional<FFElem> Embedding::pull_back(const FFElem& b) const {
    std::vector<Fq::Elem> out;
    if (!solver_.coords(b, out)) return std::nullopt;
    return FFElem(out);
}

const Embedding& embedding(const ExtField& from, const ExtField& to) {
    static std::mutex mu;
    static std::map<std::pair<std::string, std::string>, std::unique_ptr<Embedding>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(from.key(), to.key());
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, std::make_unique<Embedding>(from, to)).first;
    return *it->second;
}

}  // namespace drinmod
