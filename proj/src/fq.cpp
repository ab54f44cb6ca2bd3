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

#include "drinmod/fq.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace drinmod {

namespace {

constexpr uint32_t kMaxQ = 1u << 12;  // table sizes stay below 32 MiB

// digit vector <-> code, base p
std::vector<uint32_t> digits_of(uint32_t code, uint32_t p, uint32_t e) {
    std::vector<uint32_t> d(e, 0);
    for (uint32_t i = 0; i < e && code; ++i) {
        d[i] = code % p;
        code /= p;
    }
    return d;
}

uint32_t code_of(const std::vector<uint32_t>& d, uint32_t p) {
    uint32_t c = 0;
    for (size_t i = d.size(); i-- > 0;) c = c * p + d[i];
    return c;
}

// polynomial arithmetic over F_p on raw digit vectors (used only to
// bootstrap the tables)
std::vector<uint32_t> poly_mul_mod(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
                                   const std::vector<uint32_t>& mod, uint32_t p) {
    size_t e = mod.size() - 1;
    std::vector<uint32_t> prod(2 * e - 1, 0);
    for (size_t i = 0; i < e; ++i) {
        if (!a[i]) continue;
        for (size_t j = 0; j < e; ++j) prod[i + j] = (prod[i + j] + (uint64_t)a[i] * b[j]) % p;
    }
    // mod is monic of degree e
    for (size_t k = prod.size(); k-- > e;) {
        uint32_t c = prod[k];
        if (!c) continue;
        prod[k] = 0;
        for (size_t j = 0; j < e; ++j) {
            uint64_t t = (uint64_t)c * mod[j] % p;
            prod[k - e + j] = (prod[k - e + j] + p - (uint32_t)t) % p;
        }
    }
    prod.resize(e);
    return prod;
}

bool poly_is_zero(const std::vector<uint32_t>& a) {
    for (auto c : a)
        if (c) return false;
    return true;
}

// irreducibility of a monic degree-e polynomial over F_p by brute force
// (e is tiny here): check it has no monic factor of degree <= e/2
bool dense_irreducible(const std::vector<uint32_t>& f, uint32_t p) {
    uint32_t e = (uint32_t)f.size() - 1;
    for (uint32_t d = 1; d <= e / 2; ++d) {
        uint64_t count = 1;
        for (uint32_t i = 0; i < d; ++i) count *= p;
        for (uint64_t idx = 0; idx < count; ++idx) {
            std::vector<uint32_t> g(d + 1, 0);
            uint64_t t = idx;
            for (uint32_t i = 0; i < d; ++i) {
                g[i] = t % p;
                t /= p;
            }
            g[d] = 1;
            // trial division f mod g
            std::vector<uint32_t> r(f);
            for (size_t k = r.size(); k-- > d;) {
                if (k + 1 > r.size()) continue;
                uint32_t c = r[k];
                if (!c) continue;
                r[k] = 0;
                for (uint32_t j = 0; j < d; ++j)
                    r[k - d + j] = (r[k - d + j] + (uint64_t)(p - 1) * c % p * g[j]) % p;
            }
            r.resize(d);
            if (poly_is_zero(r)) return false;
        }
    }
    return true;
}

}  // namespace

bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

bool split_prime_power(uint32_t q, uint32_t& p, uint32_t& e) {
    for (uint32_t d = 2; (uint64_t)d * d <= q; ++d) {
        if (q % d == 0) {
            if (!is_prime_u64(d)) return false;
            uint32_t m = q, k = 0;
            while (m % d == 0) {
                m /= d;
                ++k;
            }
            if (m != 1) return false;
            p = d;
            e = k;
            return true;
        }
    }
    if (!is_prime_u64(q)) return false;
    p = q;
    e = 1;
    return true;
}

Fq::Fq(uint32_t p, uint32_t e) : p_(p), e_(e) {
    if (p < 3 || !is_prime_u64(p)) throw std::invalid_argument("Fq: p must be an odd prime");
    if (e < 1) throw std::invalid_argument("Fq: e must be positive");
    uint64_t q = 1;
    for (uint32_t i = 0; i < e; ++i) {
        q *= p;
        if (q > kMaxQ) throw std::invalid_argument("Fq: q too large for table arithmetic");
    }
    q_ = (uint32_t)q;
    if (e_ > 1) {
        // first monic irreducible of degree e, leading coefficients compared
        // first: scan constant-up codes ordered by (c_{e-1},...,c_0)
        uint64_t total = 1;
        for (uint32_t i = 0; i < e; ++i) total *= p;
        bool found = false;
        for (uint64_t idx = 0; idx < total && !found; ++idx) {
            // idx encodes (c_{e-1},...,c_0), high coefficient most significant
            std::vector<uint32_t> g(e + 1, 0);
            g[e] = 1;
            uint64_t rem = idx;
            for (uint32_t i = 0; i < e; ++i) {
                uint64_t div = 1;
                for (uint32_t j = 0; j < e - 1 - i; ++j) div *= p;
                g[e - 1 - i] = (uint32_t)(rem / div);
                rem %= div;
            }
            if (dense_irreducible(g, p)) {
                modulus_ = g;
                found = true;
            }
        }
        if (!found) throw std::logic_error("Fq: no irreducible found");
    }
    build_tables();
}

void Fq::build_tables() {
    add_.assign((size_t)q_ * q_, 0);
    mul_.assign((size_t)q_ * q_, 0);
    neg_.assign(q_, 0);
    inv_.assign(q_, 0);
    frobp_.assign(q_, 0);
    for (uint32_t a = 0; a < q_; ++a) {
        auto da = digits_of(a, p_, e_);
        for (uint32_t b = 0; b < q_; ++b) {
            auto db = digits_of(b, p_, e_);
            std::vector<uint32_t> ds(e_);
            for (uint32_t i = 0; i < e_; ++i) ds[i] = (da[i] + db[i]) % p_;
            add_[(size_t)a * q_ + b] = code_of(ds, p_);
            if (e_ == 1) {
                mul_[(size_t)a * q_ + b] = (uint32_t)((uint64_t)a * b % p_);
            } else {
                mul_[(size_t)a * q_ + b] = code_of(poly_mul_mod(da, db, modulus_, p_), p_);
            }
        }
        std::vector<uint32_t> dn(e_);
        for (uint32_t i = 0; i < e_; ++i) dn[i] = (p_ - da[i]) % p_;
        neg_[a] = code_of(dn, p_);
    }
    for (uint32_t a = 1; a < q_; ++a) {
        for (uint32_t b = 1; b < q_; ++b)
            if (mul_[(size_t)a * q_ + b] == 1) {
                inv_[a] = b;
                break;
            }
        Elem x = a;
        for (uint32_t i = 1; i < p_; ++i) x = mul_[(size_t)x * q_ + a];
        frobp_[a] = x;  // a^p
    }
    // find a generator of the cyclic group of order q-1
    uint32_t n = q_ - 1;
    std::vector<uint32_t> primes;
    {
        uint32_t m = n;
        for (uint32_t d = 2; d * d <= m; ++d)
            if (m % d == 0) {
                primes.push_back(d);
                while (m % d == 0) m /= d;
            }
        if (m > 1) primes.push_back(m);
    }
    for (uint32_t g = 2; g < q_; ++g) {
        bool ok = true;
        for (auto pr : primes) {
            if (pow(g, n / pr) == 1) {
                ok = false;
                break;
            }
        }
        if (ok) {
            gen_ = g;
            break;
        }
    }
    if (gen_ == 0 && q_ > 2) gen_ = 1;  // q = 2 never happens (p odd)
    exp_.assign(n, 0);
    log_.assign(q_, 0);
    Elem x = 1;
    for (uint32_t k = 0; k < n; ++k) {
        exp_[k] = x;
        log_[x] = k;
        x = mul(x, gen_);
    }
}

Fq::Elem Fq::inv(Elem a) const {
    if (a == 0) throw std::domain_error("Fq: division by zero");
    return inv_[a];
}

Fq::Elem Fq::pow(Elem a, uint64_t n) const {
    Elem r = 1;
    Elem base = a;
    while (n) {
        if (n & 1) r = mul(r, base);
        base = mul(base, base);
        n >>= 1;
    }
    return r;
}

uint32_t Fq::log(Elem a) const {
    if (a == 0) throw std::domain_error("Fq: log of zero");
    return log_[a];
}

bool Fq::is_square(Elem a) const {
    if (a == 0) return true;
    return log_[a] % 2 == 0;
}

Fq::Elem Fq::sqrt(Elem a) const {
    if (a == 0) return 0;
    uint32_t l = log_[a];
    if (l % 2) throw std::domain_error("Fq: not a square");
    return exp_[l / 2];
}

int Fq::chi(Elem a) const {
    if (a == 0) return 0;
    return log_[a] % 2 == 0 ? 1 : -1;
}

Fq::Elem Fq::from_int(int64_t v) const {
    int64_t m = v % (int64_t)p_;
    if (m < 0) m += p_;
    return (Elem)m;
}

std::string Fq::to_string(Elem a) const {
    if (e_ == 1) return std::to_string(a);
    auto d = digits_of(a, p_, e_);
    std::ostringstream os;
    bool first = true;
    for (size_t i = e_; i-- > 0;) {
        if (!d[i]) continue;
        if (!first) os << "+";
        first = false;
        if (i == 0)
            os << d[i];
        else {
            if (d[i] != 1) os << d[i] << "*";
            os << "u";
            if (i > 1) os << "^" << i;
        }
    }
    if (first) os << "0";
    return os.str();
}

Fq::Elem Fq::parse(const std::string& s) const {
    // accepts the output of to_string; for e = 1 a plain integer
    std::vector<uint32_t> d(e_, 0);
    size_t i = 0;
    auto skip_ws = [&] {
        while (i < s.size() && isspace((unsigned char)s[i])) ++i;
    };
    bool any = false;
    skip_ws();
    while (i < s.size()) {
        int sign = 1;
        if (s[i] == '+') ++i;
        else if (s[i] == '-') {
            sign = -1;
            ++i;
        }
        skip_ws();
        uint64_t coeff = 1;
        bool has_coeff = false;
        while (i < s.size() && isdigit((unsigned char)s[i])) {
            if (!has_coeff) coeff = 0;
            has_coeff = true;
            coeff = coeff * 10 + (s[i] - '0');
            ++i;
        }
        skip_ws();
        if (i < s.size() && s[i] == '*') {
            ++i;
            skip_ws();
        }
        uint32_t deg = 0;
        if (i < s.size() && (s[i] == 'u' || s[i] == 'U')) {
            ++i;
            deg = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                deg = 0;
                while (i < s.size() && isdigit((unsigned char)s[i])) {
                    deg = deg * 10 + (s[i] - '0');
                    ++i;
                }
            }
        } else if (!has_coeff) {
            throw std::invalid_argument("Fq: cannot parse element '" + s + "'");
        }
        if (deg >= e_) throw std::invalid_argument("Fq: exponent too large in '" + s + "'");
        uint32_t c = (uint32_t)(coeff % p_);
        if (sign < 0) c = (p_ - c) % p_;
        d[deg] = (d[deg] + c) % p_;
        any = true;
        skip_ws();
    }
    if (!any) throw std::invalid_argument("Fq: empty element string");
    return code_of(d, p_);
}

std::string Fq::describe() const {
    std::ostringstream os;
    os << "F_" << q_;
    if (e_ > 1) {
        os << " = F_" << p_ << "[u]/(";
        bool first = true;
        for (size_t i = modulus_.size(); i-- > 0;) {
            if (!modulus_[i]) continue;
            if (!first) os << "+";
            first = false;
            if (i == 0)
                os << modulus_[i];
            else {
                if (modulus_[i] != 1) os << modulus_[i] << "*";
                os << "u";
                if (i > 1) os << "^" << i;
            }
        }
        os << ")";
    }
    return os.str();
}

const Fq& fq_cache(uint32_t p, uint32_t e) {
    static std::mutex mu;
    static std::map<std::pair<uint32_t, uint32_t>, std::unique_ptr<Fq>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(p, e);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, std::make_unique<Fq>(p, e)).first;
    return *it->second;
}

const Fq& fq_cache_q(uint32_t q) {
    uint32_t p, e;
    if (!split_prime_power(q, p, e) || p == 2)
        throw std::invalid_argument("q must be an odd prime power");
    return fq_cache(p, e);
}

}  // namespace drinmod
