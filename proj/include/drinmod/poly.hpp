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

#ifndef DRINMOD_POLY_HPP
#define DRINMOD_POLY_HPP

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "drinmod/fq.hpp"

namespace drinmod {

// Degree on the logarithmic absolute-value scale: |a| = q^deg(a), with
// deg(0) = -infinity.  Keeping the log keeps every comparison exact.
struct AbsLog {
    bool neg_inf = true;
    int64_t value = 0;

    static AbsLog infdown() { return {}; }
    static AbsLog of(int64_t v) { return {false, v}; }

    AbsLog operator+(const AbsLog& o) const {
        if (neg_inf || o.neg_inf) return {};
        return of(value + o.value);
    }
    bool operator==(const AbsLog& o) const {
        return neg_inf == o.neg_inf && (neg_inf || value == o.value);
    }
    bool operator<(const AbsLog& o) const {
        if (neg_inf) return !o.neg_inf;
        if (o.neg_inf) return false;
        return value < o.value;
    }
    bool operator<=(const AbsLog& o) const { return *this < o || *this == o; }
    std::string to_string() const { return neg_inf ? "-inf" : std::to_string(value); }
};

// Element of A = F_q[T].  Coefficients are stored low-to-high and kept
// normalized (no trailing zeros; the zero polynomial has an empty vector).
class Poly {
   public:
    Poly() : f_(nullptr) {}
    explicit Poly(const Fq& f) : f_(&f) {}
    Poly(const Fq& f, std::vector<Fq::Elem> coeffs);
    static Poly zero(const Fq& f) { return Poly(f); }
    static Poly one(const Fq& f) { return constant(f, 1); }
    static Poly constant(const Fq& f, Fq::Elem c);
    static Poly t(const Fq& f);  // the variable T
    static Poly monomial(const Fq& f, int deg, Fq::Elem c = 1);

    const Fq& field() const { return *f_; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    bool is_constant() const { return c_.size() <= 1; }
    int degree() const { return (int)c_.size() - 1; }  // -1 for zero
    AbsLog abslog() const { return is_zero() ? AbsLog::infdown() : AbsLog::of(degree()); }
    Fq::Elem coeff(int i) const { return (i >= 0 && i < (int)c_.size()) ? c_[i] : 0; }
    Fq::Elem lc() const { return c_.empty() ? 0 : c_.back(); }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator-() const;
    Poly operator*(const Poly& o) const;
    Poly operator*(Fq::Elem s) const;
    bool operator==(const Poly& o) const { return c_ == o.c_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }
    // total order: by degree, then coefficients from the top down
    bool operator<(const Poly& o) const;

    // Euclidean division; o must be nonzero.
    std::pair<Poly, Poly> divrem(const Poly& o) const;
    Poly operator/(const Poly& o) const { return divrem(o).first; }
    Poly operator%(const Poly& o) const { return divrem(o).second; }
    bool divides(const Poly& o) const;  // *this | o

    Poly monic() const;  // scaled by lc^-1; zero stays zero
    Poly derivative() const;
    Fq::Elem eval(Fq::Elem x) const;
    Poly shift_t(Fq::Elem a) const;  // P(T + a)

    uint64_t code() const;  // mixed-radix encoding, for canonical enumeration
    static Poly from_code(const Fq& f, uint64_t code);

    std::string to_string(const std::string& var = "T") const;
    static Poly parse(const Fq& f, const std::string& s, const std::string& var = "T");

   private:
    const Fq* f_;
    std::vector<Fq::Elem> c_;

    void trim();
};

std::ostream& operator<<(std::ostream& os, const Poly& p);

Poly gcd(const Poly& a, const Poly& b);                          // monic
Poly ext_gcd(const Poly& a, const Poly& b, Poly& x, Poly& y);    // ax + by = g, g monic
Poly pow_mod(const Poly& base, uint64_t n, const Poly& mod);
// base^(q^k) mod m via repeated q-power maps
Poly frobenius_pow_mod(const Poly& base, uint32_t k, const Poly& mod);

bool is_squarefree(const Poly& a);
bool is_irreducible(const Poly& a);  // over F_q; nonconstant monic up to scaling

// Distinct-degree / equal-degree factorization over F_q (q odd).
// Returns (monic irreducible, multiplicity) pairs, sorted.
std::vector<std::pair<Poly, int>> factor(const Poly& a);
Poly squarefree_part(const Poly& a);

// All monic polynomials of given degree, lexicographic (leading coefficients
// compared first).
std::vector<Poly> enumerate_monic(const Fq& f, int degree);
// Exactly the monic irreducibles of the given degree, lexicographic order.
std::vector<Poly> enumerate_monic_primes(const Fq& f, int degree);
// Gauss necklace count (1/n) sum_{d|n} mu(d) q^(n/d).
uint64_t necklace_count(uint32_t q, uint32_t n);

// Legendre symbol of D modulo the monic prime p: 0 if p | D, +1 if D is a
// nonzero square mod p, -1 otherwise.  Rejects reducible p.
int legendre(const Poly& D, const Poly& p);

// deg(num) - deg(den) on the log scale.
AbsLog abslog_rational(const Poly& num, const Poly& den);

}  // namespace drinmod

#endif
